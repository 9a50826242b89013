"""Seeded numerical checks of every capacity formula and bound against the optimiser.

Each claim is a function ``(dims, rng, samples) -> ClaimResult``. Formula
functions are looked up through their modules at call time so a broken
implementation is caught rather than silently bypassed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Sequence

import numpy as np

from . import encodings, formulas, protocol, resources, sampling

TOL_THM = 1e-5
TOL_EXTREME = 1e-8
TOL_LEMMA = 1e-6
TOL_BOUND = 1e-6
TOL_REDUCTION = 1e-9
GRID = (0.3, 0.7, 1.0)


@dataclass(frozen=True)
class ClaimResult:
    name: str
    passed: bool
    max_deviation: float
    checks: int
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.name:<8} checks={self.checks:<4d} max_dev={self.max_deviation:.3e}"
        return f"{text}  {self.detail}" if self.detail else text


class _Tracker:
    """Accumulates signed violations: a check passes when ``excess <= 0``."""

    def __init__(self):
        self.worst = -np.inf
        self.dev = 0.0
        self.n = 0

    def add(self, deviation: float, tol: float) -> None:
        self.n += 1
        self.dev = max(self.dev, deviation)
        self.worst = max(self.worst, deviation - tol)

    def result(self, name: str, detail: str = "") -> ClaimResult:
        return ClaimResult(name, bool(self.worst <= 0.0), float(self.dev), self.n, detail)


def _capacity(u, rho, e) -> float:
    return protocol.maximize_chi(u, rho, e).value


def _random_state(d, rng):
    rank = int(rng.integers(1, d * d + 1))
    return sampling.random_bipartite(d, rank=rank, rng=rng)


def claim_prop1(dims, rng, samples):
    """Commuting encodings never beat log d, whatever the state and channel."""
    t = _Tracker()
    for d in dims:
        bound = protocol.classical_strategy_bound(d)
        for _ in range(samples):
            u = sampling.random_commuting_set(d, rng=rng)
            cap = _capacity(u, _random_state(d, rng), sampling.random_channel(d, int(rng.integers(1, 4)), rng))
            t.add(cap - bound, TOL_BOUND)
    return t.result("prop1", "capacity - log d for commuting sets")


def claim_thm1(dims, rng, samples):
    t = _Tracker()
    for d in dims:
        mes, ident = resources.standard_mes(d), resources.identity_channel(d)
        for _ in range(samples):
            h = sampling.random_hadamard(d, rng)
            cap = _capacity(encodings.pauli_product_set(h), mes, ident)
            t.add(abs(cap - formulas.capacity_mes_noiseless(encodings.overlap_matrix(h))), TOL_THM)
    return t.result("thm1", "|optimiser - H(c/d)|")


def claim_prop2(dims, rng, samples):
    t = _Tracker()
    for d in dims:
        mes, ident = resources.standard_mes(d), resources.identity_channel(d)
        h = encodings.fourier_hadamard(d)
        t.add(abs(_capacity(encodings.pauli_product_set(h), mes, ident) - 2 * np.log2(d)), TOL_EXTREME)
        t.add(0.0 if formulas.classify_hadamard(h) is formulas.Complementarity.FULL else 1.0, 0.0)
        for _ in range(max(1, samples // 4)):
            h = sampling.random_phase_permutation(d, rng)
            t.add(abs(_capacity(encodings.pauli_product_set(h), mes, ident) - np.log2(d)), TOL_EXTREME)
            t.add(0.0 if formulas.classify_hadamard(h) is formulas.Complementarity.ZERO else 1.0, 0.0)
    return t.result("prop2", "extremes 2 log d / log d")


def claim_lemma1(dims, rng, samples):
    t = _Tracker()
    for d in dims:
        h = sampling.random_hadamard(d, rng)
        u = encodings.pauli_product_set(h)
        for alpha, beta in product(GRID, GRID):
            rho = resources.werner_state(alpha, d=d)
            e = resources.depolarising_channel(beta, d)
            cap = _capacity(u, rho, e)
            uni = protocol.holevo_chi(protocol.uniform_ensemble(u, rho, e))
            t.add(abs(cap - uni), TOL_LEMMA)
    return t.result("lemma1", "|optimiser - uniform-prior chi|")


def claim_thm2(dims, rng, samples):
    t = _Tracker()
    for d in dims:
        h = sampling.random_hadamard(d, rng)
        u, c = encodings.pauli_product_set(h), encodings.overlap_matrix(h)
        for alpha, beta in product(GRID, GRID):
            cap = _capacity(u, resources.werner_state(alpha, d=d), resources.depolarising_channel(beta, d))
            t.add(abs(cap - formulas.capacity_werner_depolarising(alpha, beta, c)), TOL_THM)
            g = alpha * beta
            t.add(abs(formulas.werner_entropy(g, d) - formulas.werner_entropy_numeric(g, d)), 1e-10)
    return t.result("thm2", "|optimiser - Werner/depolarising closed form|")


def claim_prop3(dims, rng, samples):
    t = _Tracker()
    for d in dims:
        ident = resources.identity_channel(d)
        u_f = encodings.pauli_product_set(encodings.fourier_hadamard(d))
        for _ in range(samples):
            rho = _random_state(d, rng)
            h = sampling.random_hadamard(d, rng)
            rep = formulas.lower_bound_noiseless(encodings.complementarity_c(encodings.overlap_matrix(h)), rho)
            t.add(rep.value - _capacity(encodings.pauli_product_set(h), rho, ident), TOL_BOUND)
            t.add(abs(_capacity(u_f, rho, ident) - formulas.capacity_overall_noiseless(rho)), TOL_BOUND)
    return t.result("prop3", "noiseless bound <= capacity; full complementarity attains log d - S(A|B)")


def claim_prop4(dims, rng, samples):
    t = _Tracker()
    for d in dims:
        u_f = encodings.pauli_product_set(encodings.fourier_hadamard(d))
        for _ in range(samples):
            rho = _random_state(d, rng)
            beta = float(rng.uniform())
            e = resources.depolarising_channel(beta, d)
            h = sampling.random_hadamard(d, rng)
            rep = formulas.lower_bound_depolarising(encodings.complementarity_c(encodings.overlap_matrix(h)), rho, beta)
            t.add(rep.value - _capacity(encodings.pauli_product_set(h), rho, e), TOL_BOUND)
            t.add(abs(_capacity(u_f, rho, e) - rep.overall), TOL_BOUND)
    return t.result("prop4", "depolarising bound <= capacity; overall capacity attained")


def claim_prop5(dims, rng, samples):
    t = _Tracker()
    for d in dims:
        u_f = encodings.pauli_product_set(encodings.fourier_hadamard(d))
        for _ in range(samples):
            alpha = float(rng.uniform())
            e = sampling.random_channel(d, int(rng.integers(1, 4)), rng)
            h = sampling.random_hadamard(d, rng)
            rep = formulas.lower_bound_werner_any_channel(
                encodings.complementarity_c(encodings.overlap_matrix(h)), alpha, e)
            rho = resources.werner_state(alpha, d=d)
            t.add(rep.value - _capacity(encodings.pauli_product_set(h), rho, e), TOL_BOUND)
            t.add(abs(_capacity(u_f, rho, e) - rep.overall), TOL_BOUND)
    return t.result("prop5", "Werner/any-channel bound <= capacity; overall capacity attained")


def claim_thm3(dims, rng, samples):
    t = _Tracker()
    for d in dims:
        for _ in range(samples):
            rho = _random_state(d, rng)
            e = sampling.random_channel(d, int(rng.integers(1, 4)), rng)
            h = sampling.random_hadamard(d, rng)
            cv = encodings.complementarity_c(encodings.overlap_matrix(h))
            u = encodings.pauli_product_set(h)
            ens = protocol.uniform_ensemble(u, rho, e)
            rep = formulas.general_lower_bound(cv, rho, e, ens)
            t.add(rep.value - _capacity(u, rho, e), TOL_BOUND)
            t.add(formulas.q_term(cv, e, ens), 1e-12)
            # unital channel: relative-entropy and average-entropy terms cancel
            eu = sampling.random_unital_channel(d, 2, rng)
            ens_u = protocol.uniform_ensemble(u, rho, eu)
            rep_u = formulas.general_lower_bound(cv, rho, eu, ens_u)
            t.add(abs(rep_u.components["relative_entropy_term"] + rep_u.components["entropy_avg_A"]), TOL_REDUCTION)
            t.add(abs(rep_u.value - formulas.unital_reduction(cv, rho, ens_u)), TOL_REDUCTION)
            # maximally mixed marginals
            w = resources.werner_state(float(rng.uniform()), d=d)
            ens_w = protocol.uniform_ensemble(u, w, e)
            rep_w = formulas.general_lower_bound(cv, w, e, ens_w)
            t.add(abs(rep_w.value - formulas.mixed_marginal_reduction(cv, e, ens_w)), TOL_REDUCTION)
            # full complementarity limit
            u_f = encodings.pauli_product_set(encodings.fourier_hadamard(d))
            ens_f = protocol.uniform_ensemble(u_f, rho, e)
            rep_f = formulas.general_lower_bound(1.0 / d, rho, e, ens_f)
            t.add(abs(rep_f.value - formulas.full_complementarity_limit(rho, e, ens_f)), TOL_REDUCTION)
    return t.result("thm3", "general bound, q <= 0 and its reductions")


def claim_strong(dims, rng, samples):
    t = _Tracker()
    for d in dims:
        ident = resources.identity_channel(d)
        for _ in range(samples):
            rho = _random_state(d, rng)
            h = sampling.random_hadamard(d, rng)
            c = encodings.overlap_matrix(h)
            strong = formulas.strong_lower_bound(rho, c).value
            weak = formulas.lower_bound_noiseless(encodings.complementarity_c(c), rho).value
            t.add(weak - strong, 1e-12)
            t.add(strong - _capacity(encodings.pauli_product_set(h), rho, ident), TOL_BOUND)
    return t.result("strong", "noiseless bound <= strong bound <= capacity")


CLAIMS: dict[str, Callable] = {
    "prop1": claim_prop1,
    "thm1": claim_thm1,
    "prop2": claim_prop2,
    "lemma1": claim_lemma1,
    "thm2": claim_thm2,
    "prop3": claim_prop3,
    "prop4": claim_prop4,
    "prop5": claim_prop5,
    "thm3": claim_thm3,
    "strong": claim_strong,
}


def run_claims(names: Sequence[str] | None = None, dims: Sequence[int] = (2, 3),
               seed: int = 0, samples: int = 10) -> list[ClaimResult]:
    """Run the named claims (all by default), each with its own seeded generator."""
    names = list(CLAIMS) if not names else list(names)
    unknown = [n for n in names if n not in CLAIMS]
    if unknown:
        raise KeyError(f"unknown claims: {', '.join(unknown)}")
    out = []
    for name in names:
        rng = np.random.default_rng([seed, list(CLAIMS).index(name)])
        try:
            out.append(CLAIMS[name](tuple(dims), rng, samples))
        except Exception as exc:  # a crash is a failed claim, not an aborted run
            out.append(ClaimResult(name, False, float("nan"), 0, f"error: {exc!r}"))
    return out

