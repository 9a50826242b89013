"""Superdense-coding ensembles, Holevo chi and its maximisation over encodings' priors."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .encodings import UnitarySet, is_commuting_set
from .errors import DimensionMismatch, InvalidProbability, NoConvergence
from .linalg import DensityOperator, TOL_PSD, entropy_of_matrix, shannon_entropy
from .resources import KrausChannel, apply_to_A_matrix, preshared_state

log = logging.getLogger(__name__)

TOL_PROB = 1e-12
TOL_OPT = 1e-8
TOL_ADV = 1e-6
MAX_ITER = 100_000
# eigenvalue floor for log(mixture); keeps D finite if a letter lands outside the support
_LOG_FLOOR = 1e-15
_MU_GROW = 1.25
_MU_MAX = 64.0


@dataclass(frozen=True, eq=False)
class Ensemble:
    """Weighted states ``{p_j, rho_j}`` on a common Hilbert space."""

    probs: np.ndarray
    states: tuple

    def __post_init__(self):
        p = check_probabilities(self.probs)
        states = tuple(self.states)
        if len(states) != len(p):
            raise DimensionMismatch(f"{len(p)} probabilities for {len(states)} states")
        shapes = {s.matrix.shape for s in states}
        if len(shapes) != 1:
            raise DimensionMismatch("ensemble members live on different spaces")
        object.__setattr__(self, "probs", p)
        object.__setattr__(self, "states", states)

    def __len__(self):
        return len(self.states)

    def __iter__(self):
        return zip(self.probs, self.states)

    @property
    def dims(self) -> tuple[int, ...]:
        return self.states[0].dims

    def average(self) -> DensityOperator:
        m = np.einsum("j,jab->ab", self.probs, np.stack([s.matrix for s in self.states]))
        return DensityOperator(m, self.dims)


@dataclass(frozen=True)
class CapacityResult:
    value: float
    optimal_p: np.ndarray
    iterations: int
    converged: bool
    certificate_gap: float
    divergences: np.ndarray

    @property
    def upper_bound(self) -> float:
        return self.value + self.certificate_gap


@dataclass(frozen=True)
class WitnessReport:
    advantage: bool
    capacity: float
    commuting: bool
    threshold: float


def check_probabilities(p: Sequence[float]) -> np.ndarray:
    p = np.asarray(p, dtype=float).ravel()
    if p.size == 0 or np.any(p < 0) or not np.all(np.isfinite(p)):
        raise InvalidProbability("probabilities must be finite and nonnegative")
    if abs(p.sum() - 1.0) > TOL_PROB:
        raise InvalidProbability(f"probabilities sum to {p.sum()!r}, expected 1")
    return p


def _letter_matrices(u: UnitarySet, rho: DensityOperator, e: KrausChannel) -> tuple[np.ndarray, tuple[int, int]]:
    rho = preshared_state(rho)
    da, db = rho.dims
    if u.dim != da:
        raise DimensionMismatch(f"unitaries act on dimension {u.dim}, subsystem A has {da}")
    if e.d_in != da:
        raise DimensionMismatch(f"channel input dim {e.d_in} != subsystem A dim {da}")
    eye_b = np.eye(db)
    letters = []
    for uj in u:
        big = np.kron(uj, eye_b)
        letters.append(apply_to_A_matrix(e, big @ rho.matrix @ big.conj().T, da, db))
    return np.stack(letters), (e.d_out, db)


def encoded_ensemble(u: UnitarySet, rho: DensityOperator, e: KrausChannel, p: Sequence[float]) -> Ensemble:
    """Member j is ``(p_j, (E x id)((U_j x I) rho (U_j x I)^dag))``."""
    p = check_probabilities(p)
    if len(p) != len(u):
        raise DimensionMismatch(f"{len(p)} probabilities for {len(u)} unitaries")
    letters, dims = _letter_matrices(u, rho, e)
    return Ensemble(p, tuple(DensityOperator(m, dims) for m in letters))


def uniform_ensemble(u: UnitarySet, rho: DensityOperator, e: KrausChannel) -> Ensemble:
    n = len(u)
    return encoded_ensemble(u, rho, e, np.full(n, 1.0 / n))


def holevo_chi(ens: Ensemble) -> float:
    """S(sum_j p_j rho_j) - sum_j p_j S(rho_j), in bits."""
    avg = ens.average()
    inner = sum(p * entropy_of_matrix(s.matrix) for p, s in ens if p > 0)
    return max(entropy_of_matrix(avg.matrix) - inner, 0.0)


def _divergences(letters: np.ndarray, letter_entropy: np.ndarray, p: np.ndarray) -> tuple[np.ndarray, float]:
    """D(rho_j || sum_i p_i rho_i) for every j, plus the mixture entropy."""
    mix = np.einsum("j,jab->ab", p, letters)
    w, v = np.linalg.eigh(0.5 * (mix + mix.conj().T))
    w_clamped = np.where(w < TOL_PSD, 0.0, w)
    logw = np.log2(np.maximum(w, _LOG_FLOOR))
    # diagonal of each letter in the mixture eigenbasis
    diag = np.real(np.einsum("ai,jab,bi->ji", v.conj(), letters, v))
    cross = diag @ logw
    return -letter_entropy - cross, shannon_entropy(w_clamped)


def maximize_chi(u: UnitarySet, rho: DensityOperator, e: KrausChannel,
                 tol: float = TOL_OPT, max_iter: int = MAX_ITER,
                 raise_on_failure: bool = False) -> CapacityResult:
    """Capacity of a fixed encoding set: max over priors of Holevo chi.

    Runs the Blahut-Arimoto fixed point ``p_j <- p_j 2^{mu D_j} / Z`` from the
    uniform prior, where ``D_j = D(rho''_j || rho''_avg)``. Chi is concave in
    ``p`` and ``max_j D_j`` upper-bounds the optimum, so ``max_j D_j - chi``
    certifies suboptimality at every iterate; iteration stops once it drops
    below ``tol``. The exponent ``mu`` grows while chi keeps increasing and
    falls back to the plain step (``mu = 1``, monotone) otherwise.
    """
    letters, _ = _letter_matrices(u, rho, e)
    n = len(letters)
    s_letters = np.array([entropy_of_matrix(m) for m in letters])
    p = np.full(n, 1.0 / n)
    dj, _ = _divergences(letters, s_letters, p)
    chi = float(p @ dj)
    mu = 1.0
    it = 0
    while dj.max() - chi > tol and it < max_iter:
        it += 1
        logp = np.log(np.maximum(p, 1e-300)) + mu * np.log(2.0) * dj
        trial = np.exp(logp - logp.max())
        trial /= trial.sum()
        dj_t, _ = _divergences(letters, s_letters, trial)
        chi_t = float(trial @ dj_t)
        if chi_t >= chi or mu == 1.0:
            p, dj, chi = trial, dj_t, chi_t
            mu = min(mu * _MU_GROW, _MU_MAX)
        else:
            mu = 1.0
    gap = float(dj.max() - chi)
    converged = gap <= tol
    if not converged:
        msg = f"chi maximisation stopped after {it} iterations with gap {gap:.3g}"
        if raise_on_failure:
            raise NoConvergence(msg)
        log.warning(msg)
    return CapacityResult(
        value=max(chi, 0.0),
        optimal_p=p,
        iterations=it,
        converged=converged,
        certificate_gap=max(gap, 0.0),
        divergences=dj,
    )


def classical_strategy_bound(d: int) -> float:
    """log2 d: the most a classical d-level carrier can convey per use."""
    return float(np.log2(d))


def witness_complementarity(u: UnitarySet, rho: DensityOperator, e: KrausChannel,
                            tol_adv: float = TOL_ADV) -> WitnessReport:
    """Certify non-commutativity of ``u`` by beating the classical bound.

    Commuting encodings never exceed log d, so any advantage implies the set
    does not commute.
    """
    rho = preshared_state(rho)
    res = maximize_chi(u, rho, e)
    bound = classical_strategy_bound(rho.dims[0])
    return WitnessReport(
        advantage=res.value > bound + tol_adv,
        capacity=res.value,
        commuting=is_commuting_set(u),
        threshold=bound,
    )
