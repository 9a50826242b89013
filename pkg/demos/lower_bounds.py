"""Complementarity lower bounds versus the true capacity for a noisy qutrit.

A Werner resource goes through a depolarising channel, and Alice uses a random
imperfect Hadamard. Every bound is evaluated; the ones whose hypotheses are not
met here are still printed, flagged, since nothing guarantees them.
"""

import numpy as np

from sdc_lab import (
    depolarising_channel,
    maximize_chi,
    overlap_matrix,
    pauli_product_set,
    uniform_ensemble,
    werner_state,
)
from sdc_lab.formulas import all_bounds, capacity_werner_depolarising
from sdc_lab.sampling import random_hadamard

d, alpha, beta = 3, 0.9, 0.85
h = random_hadamard(d, np.random.default_rng(3))
u, c = pauli_product_set(h), overlap_matrix(h)
rho, e = werner_state(alpha, d=d), depolarising_channel(beta, d)

cap = maximize_chi(u, rho, e).value
print(f"capacity (optimiser)   {cap:.6f}")
print(f"capacity (closed form) {capacity_werner_depolarising(alpha, beta, c):.6f}")
for b in all_bounds(c, rho, e, uniform_ensemble(u, rho, e), werner_alpha=alpha, depolarising_beta=beta):
    flag = "" if b.applicable else "   <- hypotheses not met"
    print(f"  {b.name:<20} {b.value:9.6f}{flag}")
