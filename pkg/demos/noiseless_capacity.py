"""How much does imperfect complementarity cost a noiseless qubit channel?

Alice and Bob share a Bell pair. Alice encodes with the four products
X~^m Z^n, where X~ = H Z H^dag and H is a real rotation by theta. At
theta = pi/4 the two bases are mutually unbiased and she gets the full
2 bits; at theta = 0 the "X" is just Z again and she is back to 1 bit.
"""

import numpy as np

from sdc_lab import (
    complementarity_c,
    identity_channel,
    maximize_chi,
    overlap_matrix,
    pauli_product_set,
    rotation_hadamard,
    standard_mes,
)
from sdc_lab.formulas import capacity_mes_noiseless

mes, ident = standard_mes(2), identity_channel(2)

print(f"{'theta':>7} {'c':>7} {'optimiser':>10} {'H(c/d)':>10}")
for theta in np.linspace(0, np.pi / 4, 7):
    h = rotation_hadamard(theta)
    c = overlap_matrix(h)
    res = maximize_chi(pauli_product_set(h), mes, ident)
    print(f"{theta:7.4f} {complementarity_c(c):7.4f} {res.value:10.6f} {capacity_mes_noiseless(c):10.6f}")

# The optimiser never used the closed form; the two columns agree because
# the uniform prior is optimal and the letters are orthogonal Bell-type states.
