"""Closed-form capacities and complementarity lower bounds for Pauli-product encodings.

These are the analytic targets the numerical optimiser in
:mod:`sdc_lab.protocol` is checked against. Every bound is returned as a
:class:`BoundReport` whose ``value`` is the sum of its named ``components``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .encodings import ImperfectHadamard, OverlapMatrix, complementarity_c
from .errors import DimensionMismatch, InvalidProbability, RangeError
from .linalg import (
    DensityOperator,
    conditional_entropy,
    entropy_of_matrix,
    partial_trace,
    relative_entropy,
    shannon_entropy,
    von_neumann_entropy,
)
from .protocol import Ensemble
from .resources import (
    KrausChannel,
    apply_to_A,
    depolarising_channel,
    preshared_state,
    standard_mes,
    werner_state,
)


class Complementarity(enum.Enum):
    FULL = "full"
    ZERO = "zero"
    PARTIAL = "partial"


@dataclass(frozen=True)
class BoundReport:
    name: str
    value: float
    applicable: bool
    components: dict = field(default_factory=dict)
    # capacity optimised over all unitary sets, where a closed form is known
    overall: float | None = None


def _as_overlap(c) -> OverlapMatrix:
    return c if isinstance(c, OverlapMatrix) else OverlapMatrix(c)


def _check_c(c_val: float, d: int) -> float:
    if not 1.0 / d - 1e-12 <= c_val <= 1.0 + 1e-12:
        raise RangeError(f"complementarity factor must lie in [1/{d}, 1], got {c_val!r}")
    return float(c_val)


def _report(name: str, components: dict, applicable: bool = True, overall=None) -> BoundReport:
    comps = {k: float(v) for k, v in components.items()}
    return BoundReport(name, float(sum(comps.values())), applicable, comps,
                       None if overall is None else float(overall))


def capacity_mes_noiseless(c) -> float:
    """Capacity with a maximally entangled resource and no noise: H({c_kl / d})."""
    c = _as_overlap(c)
    return shannon_entropy(c.c / c.d)


def quantum_advantage_mes(c) -> float:
    """Average Shannon entropy of the rows of the overlap matrix."""
    c = _as_overlap(c)
    return float(np.mean([shannon_entropy(row) for row in c.c]))


def classify_hadamard(h: ImperfectHadamard, tol: float = 1e-8) -> Complementarity:
    h = h if isinstance(h, ImperfectHadamard) else ImperfectHadamard(h)
    sq = np.abs(h.matrix) ** 2
    d = h.d
    if np.all(np.abs(sq - 1.0 / d) <= tol):
        return Complementarity.FULL
    nonzero = sq > tol
    if np.all(nonzero.sum(axis=0) == 1) and np.all(nonzero.sum(axis=1) == 1):
        return Complementarity.ZERO
    return Complementarity.PARTIAL


def werner_spectrum(gamma: float, d: int) -> np.ndarray:
    """Eigenvalues of gamma |phi><phi| + (1 - gamma) I/d^2, largest first."""
    base = (1.0 - gamma) / d**2
    return np.array([gamma + base] + [base] * (d * d - 1))


def werner_entropy(gamma: float, d: int) -> float:
    return shannon_entropy(werner_spectrum(gamma, d))


def werner_entropy_numeric(gamma: float, d: int) -> float:
    """Same quantity by diagonalising the state; guards the analytic path."""
    return von_neumann_entropy(werner_state(gamma, d=d))


def capacity_werner_depolarising(alpha: float, beta: float, c) -> float:
    """Capacity for a Werner resource sent through a depolarising channel.

    Only the product ``alpha * beta`` matters:
    ``H({g c_kl/d + (1-g)/d^2}) - S(Werner_g)`` with ``g = alpha * beta``.
    """
    for name, x in (("alpha", alpha), ("beta", beta)):
        if not 0.0 <= x <= 1.0:
            raise RangeError(f"{name} must lie in [0, 1], got {x!r}")
    c = _as_overlap(c)
    d = c.d
    g = alpha * beta
    h = shannon_entropy(g * c.c / d + (1.0 - g) / d**2)
    return max(h - werner_entropy(g, d), 0.0)


def capacity_overall_noiseless(rho: DensityOperator) -> float:
    """log d - S(A|B): best capacity over all encodings with a noiseless channel."""
    rho = preshared_state(rho)
    return float(np.log2(rho.dims[0]) - conditional_entropy(rho, "B"))


def lower_bound_noiseless(c_val: float, rho: DensityOperator) -> BoundReport:
    rho = preshared_state(rho)
    d = rho.dims[0]
    c_val = _check_c(c_val, d)
    neg_cond = -conditional_entropy(rho, "B")
    return _report("noiseless", {"log_inv_c": -np.log2(c_val), "neg_cond_entropy": neg_cond},
                   overall=np.log2(d) + neg_cond)


def lower_bound_depolarising(c_val: float, rho: DensityOperator, beta: float) -> BoundReport:
    """Bound for any preshared state through a depolarising channel.

    ``overall`` carries the exact all-encodings capacity log d - S(A|B) of
    the post-channel state.
    """
    rho = preshared_state(rho)
    d = rho.dims[0]
    c_val = _check_c(c_val, d)
    rho_hat = apply_to_A(depolarising_channel(beta, d), rho)
    neg_cond = -conditional_entropy(rho_hat, "B")
    return _report("depolarising", {"log_inv_c": -np.log2(c_val), "neg_cond_entropy": neg_cond},
                   overall=np.log2(d) + neg_cond)


def bound_conditioned_on_A(c_val: float, rho: DensityOperator, e: KrausChannel,
                           applicable: bool) -> BoundReport:
    """log(1/c) - S(B|A) on the post-channel state; guaranteed for Werner inputs only."""
    rho = preshared_state(rho)
    d = rho.dims[0]
    c_val = _check_c(c_val, d)
    if e.d_in != d:
        raise DimensionMismatch(f"channel input dim {e.d_in} != {d}")
    rho_hat = apply_to_A(e, rho)
    neg_cond = -conditional_entropy(rho_hat, "A")
    return _report("werner_any_channel",
                   {"log_inv_c": -np.log2(c_val), "neg_cond_entropy_BA": neg_cond},
                   applicable=applicable, overall=np.log2(d) + neg_cond)


def lower_bound_werner_any_channel(c_val: float, alpha: float, e: KrausChannel,
                                   phi: DensityOperator | None = None) -> BoundReport:
    phi = standard_mes(e.d_in) if phi is None else phi
    return bound_conditioned_on_A(c_val, werner_state(alpha, phi), e, applicable=True)


def _check_uniform(ens: Ensemble) -> None:
    n = len(ens)
    if np.max(np.abs(ens.probs - 1.0 / n)) > 1e-12:
        raise InvalidProbability("general bound needs the uniform-prior ensemble")


def _avg_marginal_A(ens: Ensemble) -> np.ndarray:
    return sum(partial_trace(s, "A").matrix for s in ens.states) / len(ens)


def general_lower_bound(c_val: float, rho: DensityOperator, e: KrausChannel,
                        ensemble: Ensemble) -> BoundReport:
    """Lower bound valid for any preshared state and any channel.

    ``ensemble`` must be the uniform-prior Pauli-product ensemble for
    ``(rho, e)``, e.g. from :func:`sdc_lab.protocol.uniform_ensemble`.
    """
    rho = preshared_state(rho)
    d = rho.dims[0]
    c_val = _check_c(c_val, d)
    _check_uniform(ensemble)
    if ensemble.dims != (e.d_out, rho.dims[1]):
        raise DimensionMismatch("ensemble does not match the state and channel")
    avg_a = _avg_marginal_A(ensemble)
    e_id = e(np.eye(e.d_in))
    comps = {
        "log_inv_c": -np.log2(c_val),
        "relative_entropy_term": relative_entropy(avg_a, e_id),
        "entropy_B": von_neumann_entropy(partial_trace(rho, "B")),
        "entropy_avg_A": entropy_of_matrix(avg_a),
        "neg_avg_joint_entropy": -np.mean([entropy_of_matrix(s.matrix) for s in ensemble.states]),
    }
    return _report("general", comps)


def q_term(c_val: float, e: KrausChannel, ensemble: Ensemble) -> float:
    """D(avg rho''_A || E(I/d)) - log(d c); never positive."""
    _check_uniform(ensemble)
    d = e.d_in
    avg_a = _avg_marginal_A(ensemble)
    return relative_entropy(avg_a, e(np.eye(d) / d)) - float(np.log2(d * c_val))


def unital_reduction(c_val: float, rho: DensityOperator, ensemble: Ensemble) -> float:
    """Right side of the general bound after the unital-channel cancellation."""
    rho = preshared_state(rho)
    return float(-np.log2(c_val) + von_neumann_entropy(partial_trace(rho, "B"))
                 - np.mean([entropy_of_matrix(s.matrix) for s in ensemble.states]))


def mixed_marginal_reduction(c_val: float, e: KrausChannel, ensemble: Ensemble) -> float:
    """Right side of the general bound when both input marginals are maximally mixed."""
    d = e.d_in
    return float(-np.log2(c_val) + entropy_of_matrix(e(np.eye(d) / d))
                 - np.mean([entropy_of_matrix(s.matrix) for s in ensemble.states]))


def full_complementarity_limit(rho: DensityOperator, e: KrausChannel, ensemble: Ensemble) -> float:
    """S(rho_B) + S(E(I/d)) - mean_j S(rho''_j): the general bound at c = 1/d."""
    rho = preshared_state(rho)
    d = e.d_in
    return float(von_neumann_entropy(partial_trace(rho, "B")) + entropy_of_matrix(e(np.eye(d) / d))
                 - np.mean([entropy_of_matrix(s.matrix) for s in ensemble.states]))


def strong_lower_bound(rho: DensityOperator, c) -> BoundReport:
    """Noiseless-channel bound using the column maxima of the overlap matrix.

    Replaces log(1/c) by ``f(rho_A) = sum_l q_l log(1/max_k c_kl)`` with
    ``q_l = sum_k c_kl <k|rho_A|k>``, which is never smaller.
    """
    rho = preshared_state(rho)
    c = _as_overlap(c)
    if c.d != rho.dims[0]:
        raise DimensionMismatch(f"overlap matrix is {c.d}x{c.d}, subsystem A has dim {rho.dims[0]}")
    pops = np.real(np.diag(partial_trace(rho, "A").matrix))
    q = pops @ c.c
    f = float(q @ -np.log2(c.c.max(axis=0)))
    return _report("strong", {"f_rho_A": f, "neg_cond_entropy": -conditional_entropy(rho, "B")})


def complementarity_of(c) -> float:
    return complementarity_c(_as_overlap(c))


def all_bounds(c, rho: DensityOperator, e: KrausChannel, ensemble: Ensemble,
               werner_alpha: float | None = None,
               depolarising_beta: float | None = None) -> list[BoundReport]:
    """Every lower bound evaluated for one configuration, flagged by applicability.

    ``werner_alpha`` marks ``rho`` as a Werner state and ``depolarising_beta``
    marks ``e`` as depolarising (``1.0`` for the identity channel). Bounds whose
    hypotheses are not met are still evaluated but reported as not applicable.
    """
    c = _as_overlap(c)
    cv = complementarity_c(c)
    noiseless = depolarising_beta == 1.0
    out = []
    rep = lower_bound_noiseless(cv, rho)
    out.append(BoundReport(rep.name, rep.value, noiseless, rep.components, rep.overall))
    if depolarising_beta is not None:
        out.append(lower_bound_depolarising(cv, rho, depolarising_beta))
    out.append(bound_conditioned_on_A(cv, rho, e, applicable=werner_alpha is not None))
    out.append(general_lower_bound(cv, rho, e, ensemble))
    rep = strong_lower_bound(rho, c)
    out.append(BoundReport(rep.name, rep.value, noiseless, rep.components, rep.overall))
    return out
