"""Seeded random unitaries, states and channels for property checks."""

from __future__ import annotations

import numpy as np

from .encodings import ImperfectHadamard, UnitarySet, phase_permutation_hadamard
from .linalg import DensityOperator
from .resources import KrausChannel


def _rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def ginibre(n: int, m: int | None = None, rng=None) -> np.ndarray:
    rng = _rng(rng)
    m = n if m is None else m
    return (rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))) / np.sqrt(2)


def random_unitary(d: int, rng=None) -> np.ndarray:
    """Haar unitary via QR of a Ginibre matrix with the phase of R fixed."""
    q, r = np.linalg.qr(ginibre(d, rng=rng))
    ph = np.diag(r) / np.abs(np.diag(r))
    return q * ph


def random_hadamard(d: int, rng=None) -> ImperfectHadamard:
    return ImperfectHadamard(random_unitary(d, rng))


def random_phase_permutation(d: int, rng=None) -> ImperfectHadamard:
    rng = _rng(rng)
    return phase_permutation_hadamard(list(rng.permutation(d)), rng.uniform(0, 2 * np.pi, d))


def random_density(n: int, rank: int | None = None, rng=None, dims=None) -> DensityOperator:
    """Random mixed state ``G G^dag / Tr`` from an n x rank Ginibre matrix."""
    g = ginibre(n, rank or n, rng=rng)
    m = g @ g.conj().T
    m /= np.trace(m).real
    return DensityOperator(m, tuple(dims) if dims is not None else (n,))


def random_bipartite(d: int, rank: int | None = None, rng=None) -> DensityOperator:
    return random_density(d * d, rank=rank, rng=rng, dims=(d, d))


def random_channel(d: int, n_kraus: int = 2, rng=None, d_out: int | None = None) -> KrausChannel:
    """Kraus channel cut from a random Stinespring isometry."""
    d_out = d if d_out is None else d_out
    q, _ = np.linalg.qr(ginibre(d_out * n_kraus, d, rng=rng))
    return KrausChannel(tuple(q[i * d_out:(i + 1) * d_out] for i in range(n_kraus)))


def random_unital_channel(d: int, n_kraus: int = 2, rng=None) -> KrausChannel:
    """Mixture of random unitaries, which is always unital."""
    rng = _rng(rng)
    w = rng.dirichlet(np.ones(n_kraus))
    return KrausChannel(tuple(np.sqrt(wi) * random_unitary(d, rng) for wi in w))


def random_commuting_set(d: int, size: int | None = None, rng=None) -> UnitarySet:
    """Unitaries diagonal in one random common eigenbasis with random phases."""
    rng = _rng(rng)
    size = d * d if size is None else size
    basis = random_unitary(d, rng)
    phases = rng.uniform(0, 2 * np.pi, (size, d))
    return UnitarySet(tuple((basis * np.exp(1j * ph)) @ basis.conj().T for ph in phases))
