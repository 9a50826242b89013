"""Superdense-coding capacity with imperfectly complementary encodings.

Dense density-matrix numerics (entropies, partial traces, Kraus channels), the
Pauli-product encoding family built from an arbitrary unitary "Hadamard", a
certified Holevo-chi optimiser, and closed-form capacities and lower bounds
expressed through the overlap matrix ``c_kl = |H_kl|^2``.
"""

from .encodings import (
    ImperfectHadamard,
    OverlapMatrix,
    UnitarySet,
    complementarity_c,
    fourier_hadamard,
    hadamard_for_c,
    identity_hadamard,
    imperfect_x,
    is_commuting_set,
    overlap_matrix,
    pauli_product_set,
    pauli_x,
    pauli_z,
    phase_permutation_hadamard,
    rotation_hadamard,
)
from .errors import SDCError
from .linalg import (
    DensityOperator,
    conditional_entropy,
    partial_trace,
    relative_entropy,
    tensor,
    von_neumann_entropy,
)
from .protocol import (
    CapacityResult,
    Ensemble,
    classical_strategy_bound,
    encoded_ensemble,
    holevo_chi,
    maximize_chi,
    uniform_ensemble,
    witness_complementarity,
)
from .resources import (
    KrausChannel,
    apply_to_A,
    dephasing_channel,
    depolarising_channel,
    identity_channel,
    standard_mes,
    werner_state,
)

__version__ = "0.1.0"
