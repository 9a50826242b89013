"""Acceptance gate: one test per criterion, each printing a single PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s`` (or ``-m acceptance``);
the lines are also collected into the terminal summary.
"""

import time
from itertools import product

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from oracles import jacobi_eigvalsh, partial_trace_loops, qubit_rotation_grid_capacity
from sdc_lab import formulas, protocol, sweep
from sdc_lab.encodings import (
    complementarity_c,
    fourier_hadamard,
    overlap_matrix,
    pauli_product_set,
    pauli_z,
    rotation_hadamard,
)
from sdc_lab.errors import InvalidChannel
from sdc_lab.linalg import (
    binary_entropy,
    conditional_entropy,
    partial_trace,
    relative_entropy,
    tensor,
    von_neumann_entropy,
)
from sdc_lab.protocol import Ensemble, encoded_ensemble, holevo_chi, maximize_chi, uniform_ensemble
from sdc_lab.resources import (
    KrausChannel,
    apply_to_A,
    dephasing_channel,
    depolarising_channel,
    identity_channel,
    standard_mes,
    werner_state,
)
from sdc_lab.sampling import (
    random_bipartite,
    random_channel,
    random_commuting_set,
    random_density,
    random_hadamard,
    random_phase_permutation,
    random_unital_channel,
    random_unitary,
)

pytestmark = pytest.mark.acceptance


def report(num, title, passed, detail):
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {num}: {title} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return passed


def test_criterion_1_noiseless_mes_formula():
    t0 = time.perf_counter()
    worst = 0.0
    for d in (2, 3, 4):
        rng = np.random.default_rng([1, d])
        mes, ident = standard_mes(d), identity_channel(d)
        for _ in range(20):
            h = random_hadamard(d, rng)
            cap = maximize_chi(pauli_product_set(h), mes, ident).value
            worst = max(worst, abs(cap - formulas.capacity_mes_noiseless(overlap_matrix(h))))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-5 and elapsed < 60
    assert report(1, "optimiser vs H(c/d), d=2,3,4 x 20", ok, f"max dev {worst:.2e} <= 1e-5, {elapsed:.1f}s < 60s")


def test_criterion_2_extremes():
    worst = 0.0
    for d in (2, 3, 4, 5):
        mes, ident = standard_mes(d), identity_channel(d)
        cap = maximize_chi(pauli_product_set(fourier_hadamard(d)), mes, ident).value
        worst = max(worst, abs(cap - 2 * np.log2(d)))
        rng = np.random.default_rng([2, d])
        for _ in range(3):
            cap = maximize_chi(pauli_product_set(random_phase_permutation(d, rng)), mes, ident).value
            worst = max(worst, abs(cap - np.log2(d)))
    assert report(2, "fourier = 2 log d, phase-permutation = log d, d=2..5", worst <= 1e-8,
                  f"max dev {worst:.2e} <= 1e-8")


def test_criterion_3_noise_sweep():
    t0 = time.perf_counter()
    res = sweep.capacity_sweep(2, (0.0, 0.1, 0.2, 0.253, 0.4), c_steps=50)
    elapsed = time.perf_counter() - t0
    monotone = all(np.all(np.diff(res.curve(n)[1]) <= 1e-12) for n in sweep.DEFAULT_NOISES)
    _, cap0 = res.curve(0.0)
    ends = max(abs(cap0[0] - 2.0), abs(cap0[-1] - 1.0))
    _, cap253 = res.curve(0.253)
    peak = float(np.max(cap253 - 1.0))
    ok = monotone and ends <= 1e-8 and -0.01 <= peak <= 0.01 and elapsed < 10 and len(res.rows) == 250
    assert report(3, "capacity vs c sweep, d=2", ok,
                  f"monotone={monotone}, endpoint dev {ends:.1e}, max(cap-1)@0.253={peak:+.5f}, {elapsed:.2f}s < 10s")


def test_criterion_4_uniform_prior_optimal():
    worst = gap = 0.0
    grid = (0.3, 0.7, 1.0)
    for d in (2, 3):
        u = pauli_product_set(random_hadamard(d, np.random.default_rng([4, d])))
        for alpha, beta in product(grid, grid):
            rho, e = werner_state(alpha, d=d), depolarising_channel(beta, d)
            res = maximize_chi(u, rho, e)
            opt = holevo_chi(encoded_ensemble(u, rho, e, res.optimal_p))
            uni = holevo_chi(uniform_ensemble(u, rho, e))
            worst = max(worst, abs(opt - uni))
            # max_j D(rho_j || avg) - chi bounds how far any prior could improve on p*
            gap = max(gap, res.certificate_gap)
    assert report(4, "optimal prior chi = uniform chi on 3x3 (alpha, beta) grid", worst <= 1e-6 and gap <= 1e-6,
                  f"max dev {worst:.2e} <= 1e-6, optimality certificate {gap:.2e}")


def test_criterion_5_commuting_sets():
    worst = -np.inf
    n = 0
    for d in (2, 3):
        rng = np.random.default_rng([5, d])
        for _ in range(50):
            u = random_commuting_set(d, rng=rng)
            rho = random_bipartite(d, rank=int(rng.integers(1, d * d + 1)), rng=rng)
            e = random_channel(d, int(rng.integers(1, 4)), rng)
            worst = max(worst, maximize_chi(u, rho, e).value - np.log2(d))
            n += 1
    assert report(5, f"commuting sets never beat log d ({n} configs)", worst <= 1e-6,
                  f"max(capacity - log d) = {worst:.2e} <= 1e-6")


def _random_config(rng):
    d = int(rng.choice([2, 3]))
    h = random_hadamard(d, rng)
    kind = rng.choice(["werner", "random"])
    alpha = float(rng.uniform()) if kind == "werner" else None
    rho = werner_state(alpha, d=d) if kind == "werner" else random_bipartite(d, int(rng.integers(1, d * d + 1)), rng)
    ch = rng.choice(["identity", "depolarising", "random"])
    if ch == "identity":
        beta, e = 1.0, identity_channel(d)
    elif ch == "depolarising":
        beta = float(rng.uniform())
        e = depolarising_channel(beta, d)
    else:
        beta, e = None, random_channel(d, int(rng.integers(1, 4)), rng)
    return h, rho, e, alpha, beta


def test_criterion_6_bound_dominance():
    rng = np.random.default_rng(6)
    worst_bound = -np.inf
    worst_strong = -np.inf
    checked = 0
    for _ in range(100):
        h, rho, e, alpha, beta = _random_config(rng)
        u, c = pauli_product_set(h), overlap_matrix(h)
        cap = maximize_chi(u, rho, e).value
        bounds = formulas.all_bounds(c, rho, e, uniform_ensemble(u, rho, e), werner_alpha=alpha, depolarising_beta=beta)
        for b in bounds:
            if b.applicable:
                worst_bound = max(worst_bound, b.value - cap)
                checked += 1
        strong = formulas.strong_lower_bound(rho, c).value
        weak = formulas.lower_bound_noiseless(complementarity_c(c), rho).value
        worst_strong = max(worst_strong, weak - strong)
    ok = worst_bound <= 1e-6 and worst_strong <= 1e-12
    assert report(6, f"bounds <= capacity over 100 configs ({checked} applicable bounds)", ok,
                  f"max(bound - cap) = {worst_bound:.2e}, max(weak - strong) = {worst_strong:.2e}")


def test_criterion_7_general_bound_reductions():
    worst = 0.0
    for d in (2, 3):
        rng = np.random.default_rng([7, d])
        for _ in range(10):
            h = random_hadamard(d, rng)
            u, cv = pauli_product_set(h), complementarity_c(overlap_matrix(h))
            rho = random_bipartite(d, rng=rng)
            eu = random_unital_channel(d, int(rng.integers(2, 4)), rng)
            ens = uniform_ensemble(u, rho, eu)
            rep = formulas.general_lower_bound(cv, rho, eu, ens)
            worst = max(worst, abs(rep.components["relative_entropy_term"] + rep.components["entropy_avg_A"]),
                        abs(rep.value - formulas.unital_reduction(cv, rho, ens)))

            e = random_channel(d, int(rng.integers(1, 4)), rng)
            w = werner_state(float(rng.uniform()), d=d)
            ens = uniform_ensemble(u, w, e)
            rep = formulas.general_lower_bound(cv, w, e, ens)
            worst = max(worst, abs(rep.value - formulas.mixed_marginal_reduction(cv, e, ens)))

            uf, mes = pauli_product_set(fourier_hadamard(d)), standard_mes(d)
            for chan, state in ((eu, mes), (e, rho)):
                ens = uniform_ensemble(uf, state, chan)
                rep = formulas.general_lower_bound(1 / d, state, chan, ens)
                worst = max(worst, abs(rep.value - formulas.full_complementarity_limit(state, chan, ens)))
    assert report(7, "general bound reductions (unital, mixed marginals, c = 1/d)", worst <= 1e-9,
                  f"max dev {worst:.2e} <= 1e-9")


def test_criterion_8_qubit_closed_form_and_grid_oracle():
    thetas = np.linspace(0.0, np.pi / 2, 20)
    mes, ident = standard_mes(2), identity_channel(2)
    worst_cf = worst_grid = 0.0
    for th in thetas:
        cap = maximize_chi(pauli_product_set(rotation_hadamard(th)), mes, ident).value
        c = max(np.cos(th) ** 2, np.sin(th) ** 2)
        worst_cf = max(worst_cf, abs(cap - (1 + binary_entropy(c))))
        worst_grid = max(worst_grid, abs(cap - qubit_rotation_grid_capacity(th, steps=64)))
    ok = worst_cf <= 1e-6 and worst_grid <= 2e-3
    assert report(8, "d=2 rotation closed form at 20 angles + 1/64 simplex grid", ok,
                  f"closed-form dev {worst_cf:.2e} <= 1e-6, grid dev {worst_grid:.2e} <= 2e-3")


def _property_suites():
    rng = np.random.default_rng(9)
    fails = []

    # entropy axioms
    for _ in range(30):
        d = int(rng.choice([2, 3]))
        rho = random_bipartite(d, rng=rng)
        sab, sa, sb = (von_neumann_entropy(rho), von_neumann_entropy(partial_trace(rho, "A")),
                       von_neumann_entropy(partial_trace(rho, "B")))
        sigma = random_bipartite(d, rng=rng)
        ok = (-1e-12 <= sab <= 2 * np.log2(d) + 1e-12 and sab <= sa + sb + 1e-10 and abs(sa - sb) <= sab + 1e-10
              and relative_entropy(rho, sigma) >= -1e-10
              and abs(conditional_entropy(rho) - (sab - sb)) <= 1e-12)
        eig = np.sort(jacobi_eigvalsh(rho.matrix))
        ok &= np.max(np.abs(eig - np.linalg.eigvalsh(rho.matrix))) <= 1e-10
        ok &= np.allclose(partial_trace(rho, "A").matrix, partial_trace_loops(rho.matrix, d, d, "A"), atol=1e-14)
        if not ok:
            fails.append("entropy axioms")
            break

    # CPTP validation
    try:
        KrausChannel((0.9 * np.eye(2),))
        fails.append("CPTP validation accepted a non-TP map")
    except InvalidChannel:
        pass
    for _ in range(20):
        d = int(rng.choice([2, 3]))
        out = apply_to_A(random_channel(d, int(rng.integers(1, 4)), rng), random_bipartite(d, rng=rng)).matrix
        if abs(np.trace(out) - 1) > 1e-9 or np.linalg.eigvalsh(out)[0] < -1e-9:
            fails.append("CPTP output")
            break

    # double stochasticity
    for _ in range(30):
        c = overlap_matrix(random_hadamard(int(rng.integers(2, 7)), rng)).c
        if max(np.max(np.abs(c.sum(0) - 1)), np.max(np.abs(c.sum(1) - 1))) > 1e-9:
            fails.append("double stochasticity")
            break

    # chi monotone under a further channel
    for _ in range(20):
        d = int(rng.choice([2, 3]))
        u = pauli_product_set(random_hadamard(d, rng))
        ens = encoded_ensemble(u, random_bipartite(d, rng=rng), random_channel(d, 2, rng), rng.dirichlet(np.ones(d * d)))
        f = random_channel(d, 2, rng)
        after = Ensemble(ens.probs, tuple(apply_to_A(f, s) for s in ens.states))
        if holevo_chi(after) > holevo_chi(ens) + 1e-10:
            fails.append("chi monotonicity")
            break

    # depolarising composition
    for _ in range(20):
        d = int(rng.choice([2, 3]))
        b1, b2 = rng.uniform(size=2)
        rho = random_density(d, rng=rng).matrix
        lhs = depolarising_channel(b1, d)(depolarising_channel(b2, d)(rho))
        if np.max(np.abs(lhs - depolarising_channel(b1 * b2, d)(rho))) > 1e-12:
            fails.append("depolarising composition")
            break

    # transpose trick on the standard MES
    for d in (2, 3, 4):
        v = random_unitary(d, rng)
        psi = np.eye(d).reshape(d * d) / np.sqrt(d)
        if np.max(np.abs(tensor(v, np.eye(d)) @ psi - tensor(np.eye(d), v.T) @ psi)) > 1e-12:
            fails.append("transpose trick")

    # dephasing as a uniform mixture of clock conjugations
    for d in (2, 3, 4):
        rho = random_density(d, rng=rng).matrix
        z = pauli_z(d)
        twirl = sum(np.linalg.matrix_power(z, k) @ rho @ np.linalg.matrix_power(z, k).conj().T for k in range(d)) / d
        if np.max(np.abs(dephasing_channel(d)(rho) - twirl)) > 1e-12:
            fails.append("dephasing identity")
    return fails


def test_criterion_9_property_suites():
    fails = _property_suites()
    assert report(9, "property suites", not fails, "all hold" if not fails else "failed: " + ", ".join(fails))


def test_protocol_module_is_used():
    # guard against the gate silently bypassing the optimiser
    assert protocol.maximize_chi is maximize_chi
