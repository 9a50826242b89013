"""Qudit Pauli operators, imperfect Hadamards and Pauli-product encodings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.linalg import schur
from scipy.optimize import brentq

from .errors import InvalidDimension, NonUnitary, RangeError
from .linalg import TOL_HERM, is_unitary

COMMUTE_TOL = 1e-9


def _check_dim(d: int) -> int:
    if int(d) != d or d < 2:
        raise InvalidDimension(f"qudit dimension must be an integer >= 2, got {d!r}")
    return int(d)


@dataclass(frozen=True, eq=False)
class ImperfectHadamard:
    """The unitary taking the standard basis to Alice's X basis, ``|x_l> = H|l>``."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 2:
            raise InvalidDimension(f"Hadamard must be a square matrix of size >= 2, got {m.shape}")
        if not is_unitary(m, TOL_HERM):
            raise NonUnitary("imperfect Hadamard is not unitary")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def d(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True, eq=False)
class OverlapMatrix:
    """Squared overlaps ``c[k, l] = |<k|x_l>|^2``; doubly stochastic."""

    c: np.ndarray

    def __post_init__(self):
        c = np.array(self.c, dtype=float)
        if c.ndim != 2 or c.shape[0] != c.shape[1]:
            raise InvalidDimension(f"overlap matrix must be square, got {c.shape}")
        if np.any(c < -1e-12) or np.any(c > 1 + 1e-12):
            raise RangeError("overlap entries must lie in [0, 1]")
        if (np.max(np.abs(c.sum(axis=0) - 1)) > 1e-9
                or np.max(np.abs(c.sum(axis=1) - 1)) > 1e-9):
            raise RangeError("overlap matrix is not doubly stochastic")
        c = np.clip(c, 0.0, 1.0)
        c.setflags(write=False)
        object.__setattr__(self, "c", c)

    @property
    def d(self) -> int:
        return self.c.shape[0]


@dataclass(frozen=True, eq=False)
class UnitarySet:
    """Ordered encoding unitaries. Pauli-product sets use ``j = m*d + n``."""

    unitaries: tuple

    def __post_init__(self):
        us = tuple(np.array(u, dtype=complex) for u in self.unitaries)
        if not us:
            raise InvalidDimension("a unitary set needs at least one element")
        shape = us[0].shape
        for i, u in enumerate(us):
            if u.shape != shape or u.ndim != 2 or shape[0] != shape[1]:
                raise InvalidDimension(f"element {i} has shape {u.shape}, expected {shape}")
            if not is_unitary(u, TOL_HERM):
                raise NonUnitary(f"element {i} is not unitary")
            u.setflags(write=False)
        object.__setattr__(self, "unitaries", us)

    def __len__(self):
        return len(self.unitaries)

    def __iter__(self):
        return iter(self.unitaries)

    def __getitem__(self, j):
        return self.unitaries[j]

    @property
    def dim(self) -> int:
        return self.unitaries[0].shape[0]

    def as_array(self) -> np.ndarray:
        return np.stack(self.unitaries)

    def permuted(self, order: Sequence[int]) -> "UnitarySet":
        return UnitarySet(tuple(self.unitaries[i] for i in order))


def pauli_z(d: int) -> np.ndarray:
    """Clock operator diag(1, w, ..., w^(d-1)) with w = exp(2 pi i / d)."""
    d = _check_dim(d)
    return np.diag(np.exp(2j * np.pi * np.arange(d) / d))


def pauli_x(d: int) -> np.ndarray:
    """Cyclic shift |k> -> |k+1 mod d>."""
    d = _check_dim(d)
    return np.roll(np.eye(d, dtype=complex), 1, axis=0)


def fourier_hadamard(d: int) -> ImperfectHadamard:
    d = _check_dim(d)
    k = np.arange(d)
    return ImperfectHadamard(np.exp(-2j * np.pi * np.outer(k, k) / d) / np.sqrt(d))


def identity_hadamard(d: int) -> ImperfectHadamard:
    return ImperfectHadamard(np.eye(_check_dim(d), dtype=complex))


def rotation_hadamard(theta: float) -> ImperfectHadamard:
    """Real qubit rotation by ``theta``; its overlap factor is max(cos^2, sin^2)."""
    c, s = np.cos(theta), np.sin(theta)
    return ImperfectHadamard(np.array([[c, -s], [s, c]], dtype=complex))


def phase_permutation_hadamard(perm: Sequence[int], phases: Sequence[float]) -> ImperfectHadamard:
    """``sum_k exp(i phi_k) |P(k)><k|``: a relabelled standard basis (zero complementarity)."""
    d = len(perm)
    if sorted(perm) != list(range(d)) or len(phases) != d:
        raise InvalidDimension("perm must be a permutation of range(d) with one phase per entry")
    m = np.zeros((d, d), dtype=complex)
    m[list(perm), np.arange(d)] = np.exp(1j * np.asarray(phases, dtype=float))
    return ImperfectHadamard(m)


def fractional_fourier_hadamard(d: int, t: float) -> ImperfectHadamard:
    """Fractional power ``F**t`` of the Fourier matrix, principal branch.

    t = 0 gives the identity and t = 1 the Fourier matrix; for d <= 6 the
    complementarity factor decreases monotonically in between.
    """
    f = fourier_hadamard(d).matrix
    # complex Schur form of a normal matrix is diagonal
    tri, z = schur(f, output="complex")
    phases = np.angle(np.diag(tri))
    m = (z * np.exp(1j * phases * t)) @ z.conj().T
    return ImperfectHadamard(m)


def hadamard_for_c(d: int, c: float, family: str = "fractional-fourier") -> ImperfectHadamard:
    """A Hadamard from a one-parameter family whose complementarity factor equals ``c``.

    For d = 2 the rotation family is exact and canonical. For larger d the
    overlap matrix is not fixed by ``c`` alone, so the family matters.
    """
    d = _check_dim(d)
    if not 1.0 / d - 1e-12 <= c <= 1.0 + 1e-12:
        raise RangeError(f"c must lie in [1/d, 1] = [{1.0 / d:.6g}, 1], got {c!r}")
    c = min(max(c, 1.0 / d), 1.0)
    if family == "rotation" or (family == "fractional-fourier" and d == 2):
        if d != 2:
            raise InvalidDimension("the rotation family is only defined for d = 2")
        return rotation_hadamard(np.arccos(np.sqrt(c)))
    if family != "fractional-fourier":
        raise ValueError(f"unknown Hadamard family {family!r}")
    if c >= 1.0:
        return identity_hadamard(d)
    if c <= 1.0 / d:
        return fourier_hadamard(d)

    def gap(t):
        return complementarity_c(overlap_matrix(fractional_fourier_hadamard(d, t))) - c

    t = brentq(gap, 0.0, 1.0, xtol=1e-15, rtol=1e-15, maxiter=200)
    return fractional_fourier_hadamard(d, t)


def imperfect_x(h: ImperfectHadamard) -> np.ndarray:
    """The imperfect shift ``H Z H^dagger``; equals Z for H = I and X for H = Fourier."""
    h = h if isinstance(h, ImperfectHadamard) else ImperfectHadamard(h)
    return h.matrix @ pauli_z(h.d) @ h.matrix.conj().T


def pauli_product_set(h: ImperfectHadamard) -> UnitarySet:
    """All d^2 products ``X~^m Z^n`` ordered by ``j = m*d + n``."""
    h = h if isinstance(h, ImperfectHadamard) else ImperfectHadamard(h)
    d = h.d
    x = imperfect_x(h)
    z = pauli_z(d)
    xs = [np.linalg.matrix_power(x, m) for m in range(d)]
    zs = [np.linalg.matrix_power(z, n) for n in range(d)]
    return UnitarySet(tuple(xs[m] @ zs[n] for m in range(d) for n in range(d)))


def overlap_matrix(h: ImperfectHadamard) -> OverlapMatrix:
    h = h if isinstance(h, ImperfectHadamard) else ImperfectHadamard(h)
    return OverlapMatrix(np.abs(h.matrix) ** 2)


def complementarity_c(c: OverlapMatrix) -> float:
    """The largest overlap, between 1/d (mutually unbiased) and 1 (shared vector)."""
    c = c if isinstance(c, OverlapMatrix) else OverlapMatrix(c)
    return float(np.max(c.c))


def max_commutator_norm(u: UnitarySet) -> float:
    arr = np.stack(list(u))
    comm = np.einsum("iab,jbc->ijac", arr, arr) - np.einsum("jab,ibc->ijac", arr, arr)
    return float(np.max(np.abs(comm)))


def is_commuting_set(u: UnitarySet, tol: float = COMMUTE_TOL) -> bool:
    return max_commutator_norm(u) <= tol
