"""Preshared bipartite states and noisy channels acting on Alice's system."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .encodings import pauli_x, pauli_z
from .errors import DimensionMismatch, InvalidChannel, InvalidDimension, NonUnitary, NotMES, RangeError
from .linalg import DensityOperator, StateLike, as_density, is_unitary, partial_trace

TOL_TP = 1e-9
TOL_UNITAL = 1e-9


@dataclass(frozen=True, eq=False)
class KrausChannel:
    """CPTP map ``rho -> sum_i K_i rho K_i^dagger`` with ``K_i`` of shape (d_out, d_in)."""

    kraus: tuple

    def __post_init__(self):
        ops = tuple(np.array(k, dtype=complex) for k in self.kraus)
        if not ops:
            raise InvalidChannel("a channel needs at least one Kraus operator")
        shape = ops[0].shape
        if len(shape) != 2 or any(k.shape != shape for k in ops):
            raise InvalidChannel("Kraus operators must share one 2-d shape")
        tp = sum(k.conj().T @ k for k in ops)
        err = np.max(np.abs(tp - np.eye(shape[1])))
        if err > TOL_TP:
            raise InvalidChannel(f"not trace preserving (max |sum K^dag K - I| = {err:.3g})")
        for k in ops:
            k.setflags(write=False)
        object.__setattr__(self, "kraus", ops)

    @property
    def d_in(self) -> int:
        return self.kraus[0].shape[1]

    @property
    def d_out(self) -> int:
        return self.kraus[0].shape[0]

    def stacked(self) -> np.ndarray:
        return np.stack(self.kraus)

    def __call__(self, op: np.ndarray) -> np.ndarray:
        """Apply the map to an arbitrary d_in x d_in operator (not necessarily a state)."""
        op = np.asarray(op, dtype=complex)
        if op.shape != (self.d_in, self.d_in):
            raise DimensionMismatch(f"channel expects a {self.d_in}x{self.d_in} operator, got {op.shape}")
        k = self.stacked()
        return np.einsum("kia,ab,kjb->ij", k, op, k.conj())


def identity_channel(d: int) -> KrausChannel:
    return KrausChannel((np.eye(d, dtype=complex),))


def kraus_channel(ops: Sequence[np.ndarray]) -> KrausChannel:
    return KrausChannel(tuple(ops))


def depolarising_channel(beta: float, d: int) -> KrausChannel:
    """``rho -> beta rho + (1 - beta) I/d``, realised as a weighted Pauli twirl."""
    if int(d) != d or d < 2:
        raise InvalidDimension(f"d must be >= 2, got {d!r}")
    if not 0.0 <= beta <= 1.0:
        raise RangeError(f"depolarising parameter must lie in [0, 1], got {beta!r}")
    d = int(d)
    x, z = pauli_x(d), pauli_z(d)
    w_rest = np.sqrt((1.0 - beta) / d**2)
    ops = [np.sqrt(beta + (1.0 - beta) / d**2) * np.eye(d, dtype=complex)]
    for m in range(d):
        for n in range(d):
            if m == 0 and n == 0:
                continue
            ops.append(w_rest * np.linalg.matrix_power(x, m) @ np.linalg.matrix_power(z, n))
    return KrausChannel(tuple(ops))


def dephasing_channel(d: int) -> KrausChannel:
    """Complete decoherence in the standard basis."""
    if int(d) != d or d < 2:
        raise InvalidDimension(f"d must be >= 2, got {d!r}")
    ops = []
    for k in range(int(d)):
        p = np.zeros((d, d), dtype=complex)
        p[k, k] = 1.0
        ops.append(p)
    return KrausChannel(tuple(ops))


def is_unital(e: KrausChannel, tol: float = TOL_UNITAL) -> bool:
    if e.d_in != e.d_out:
        return False
    return bool(np.max(np.abs(e(np.eye(e.d_in)) - np.eye(e.d_out))) <= tol)


def _square_dims(n: int) -> tuple[int, int]:
    d = int(round(np.sqrt(n)))
    if d * d != n:
        raise DimensionMismatch(f"cannot infer equal bipartite dims for size {n}")
    return (d, d)


def preshared_state(rho: StateLike, dims: Sequence[int] | None = None) -> DensityOperator:
    """Validate an arbitrary bipartite state; dims default to (d, d)."""
    m = rho.matrix if isinstance(rho, DensityOperator) else np.asarray(rho)
    if dims is None:
        dims = rho.dims if isinstance(rho, DensityOperator) and len(rho.dims) == 2 else _square_dims(m.shape[0])
    return as_density(m, dims)


def standard_mes(d: int) -> DensityOperator:
    """|phi_0> = sum_k |k>|k> / sqrt(d)."""
    if int(d) != d or d < 2:
        raise InvalidDimension(f"d must be >= 2, got {d!r}")
    d = int(d)
    psi = np.eye(d, dtype=complex).reshape(d * d) / np.sqrt(d)
    return DensityOperator(np.outer(psi, psi.conj()), (d, d))


def general_mes(d: int, u_b: np.ndarray) -> DensityOperator:
    """(I x U_B)|phi_0>: every maximally entangled state has this form."""
    u_b = np.asarray(u_b, dtype=complex)
    if u_b.shape != (d, d) or not is_unitary(u_b):
        raise NonUnitary("U_B must be a d x d unitary")
    psi = np.kron(np.eye(d), u_b) @ (np.eye(d, dtype=complex).reshape(d * d) / np.sqrt(d))
    return DensityOperator(np.outer(psi, psi.conj()), (d, d))


def is_mes(phi: DensityOperator, tol: float = 1e-9) -> bool:
    if len(phi.dims) != 2 or phi.dims[0] != phi.dims[1]:
        return False
    d = phi.dims[0]
    m = phi.matrix
    if abs(np.trace(m @ m).real - 1.0) > tol:
        return False
    eye = np.eye(d) / d
    return all(np.max(np.abs(partial_trace(phi, s).matrix - eye)) <= tol for s in ("A", "B"))


def werner_state(alpha: float, phi: DensityOperator | None = None, d: int | None = None) -> DensityOperator:
    """``alpha |phi><phi| + (1 - alpha) I/d^2`` for a maximally entangled ``phi``.

    ``phi`` defaults to the standard MES of dimension ``d``.
    """
    if not 0.0 <= alpha <= 1.0:
        raise RangeError(f"Werner parameter must lie in [0, 1], got {alpha!r}")
    if phi is None:
        if d is None:
            raise InvalidDimension("pass either phi or d")
        phi = standard_mes(d)
    if not is_mes(phi):
        raise NotMES("Werner states are built from a maximally entangled state")
    n = phi.dim
    return DensityOperator(alpha * phi.matrix + (1.0 - alpha) * np.eye(n) / n, phi.dims)


def apply_to_A(e: KrausChannel, rho_ab: StateLike) -> DensityOperator:
    """(E x id)(rho_AB)."""
    rho_ab = preshared_state(rho_ab)
    da, db = rho_ab.dims
    if e.d_in != da:
        raise DimensionMismatch(f"channel input dim {e.d_in} != subsystem A dim {da}")
    return DensityOperator(apply_to_A_matrix(e, rho_ab.matrix, da, db), (e.d_out, db))


def apply_to_A_matrix(e: KrausChannel, m: np.ndarray, da: int, db: int) -> np.ndarray:
    """Unvalidated (E x id) on a raw (da*db) x (da*db) operator."""
    k = e.stacked()
    t = np.asarray(m).reshape(da, db, da, db)
    out = np.einsum("kia,abcd,kjc->ibjd", k, t, k.conj())
    return out.reshape(e.d_out * db, e.d_out * db)


def channel_unitary_commutation_check(e: KrausChannel, u: np.ndarray, rho: StateLike) -> float:
    """max |E(U rho U^dag) - U E(rho) U^dag| on a single-system state."""
    rho = as_density(rho)
    u = np.asarray(u, dtype=complex)
    if u.shape != rho.matrix.shape or e.d_in != rho.dim or e.d_out != e.d_in:
        raise DimensionMismatch("channel, unitary and state dimensions are incompatible")
    lhs = e(u @ rho.matrix @ u.conj().T)
    rhs = u @ e(rho.matrix) @ u.conj().T
    return float(np.max(np.abs(lhs - rhs)))
