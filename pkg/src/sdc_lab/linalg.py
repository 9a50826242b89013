"""Dense complex linear algebra and entropic functionals.

Everything here works on plain ``numpy`` arrays. States carry their
subsystem dimensions through :class:`DensityOperator`, which is validated
on construction so that invalid inputs fail early instead of producing NaNs
further down. All logarithms are base 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .errors import InvalidState, NoConvergence, NonHermitian, SupportViolation, DimensionMismatch

TOL_HERM = 1e-9
TOL_TRACE = 1e-9
TOL_PSD = 1e-9
TOL_EIG = 1e-10


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues (descending) and matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """A validated density matrix with subsystem dimension metadata.

    ``dims`` lists the local dimensions in tensor order; their product must
    equal the matrix size. Bipartite states use ``dims=(d_A, d_B)``.
    """

    matrix: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise InvalidState(f"density matrix must be square, got shape {m.shape}")
        dims = tuple(int(x) for x in self.dims)
        if any(x < 1 for x in dims) or int(np.prod(dims)) != m.shape[0]:
            raise InvalidState(f"dims {dims} do not match matrix size {m.shape[0]}")
        herm_err = np.max(np.abs(m - m.conj().T))
        if herm_err > TOL_HERM:
            raise InvalidState(f"not Hermitian (max deviation {herm_err:.3g})")
        m = 0.5 * (m + m.conj().T)
        tr = np.trace(m).real
        if abs(tr - 1.0) > TOL_TRACE:
            raise InvalidState(f"trace is {tr!r}, expected 1")
        lam_min = np.linalg.eigvalsh(m)[0]
        if lam_min < -TOL_PSD:
            raise InvalidState(f"negative eigenvalue {lam_min:.3g}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", dims)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.matrix, dtype=dtype)

    def allclose(self, other, atol: float = 1e-12) -> bool:
        return bool(np.max(np.abs(self.matrix - np.asarray(other))) <= atol)


StateLike = Union[DensityOperator, np.ndarray]


def as_density(rho: StateLike, dims: Sequence[int] | None = None) -> DensityOperator:
    """Coerce an array (or pass through a DensityOperator) into a validated state."""
    if isinstance(rho, DensityOperator):
        if dims is not None and tuple(dims) != rho.dims:
            return DensityOperator(rho.matrix, tuple(dims))
        return rho
    m = np.asarray(rho, dtype=complex)
    if dims is None:
        dims = (m.shape[0],)
    return DensityOperator(m, tuple(dims))


def is_hermitian(m: np.ndarray, tol: float = TOL_HERM) -> bool:
    m = np.asarray(m)
    return m.ndim == 2 and m.shape[0] == m.shape[1] and np.max(np.abs(m - m.conj().T)) <= tol


def is_unitary(u: np.ndarray, tol: float = TOL_HERM) -> bool:
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))) <= tol


def hermitian_eig(m: np.ndarray) -> Spectrum:
    """Full spectral decomposition of a Hermitian matrix, eigenvalues descending.

    Raises :class:`NonHermitian` if ``m`` fails the symmetry check and
    :class:`NoConvergence` if LAPACK does not converge.
    """
    m = np.asarray(m, dtype=complex)
    if not is_hermitian(m):
        raise NonHermitian("matrix is not Hermitian within tolerance")
    m = 0.5 * (m + m.conj().T)
    try:
        w, v = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return Spectrum(w[::-1].copy(), v[:, ::-1].copy())


def shannon_entropy(p) -> float:
    """Shannon entropy in bits of a nonnegative weight vector (0 log 0 = 0)."""
    p = np.asarray(p, dtype=float).ravel()
    p = p[p > 0]
    return float(-np.sum(p * np.log2(p))) + 0.0


def binary_entropy(p: float) -> float:
    return shannon_entropy([p, 1.0 - p])


def _clamped_eigvals(m: np.ndarray) -> np.ndarray:
    w = np.linalg.eigvalsh(m)
    return np.where(np.abs(w) < TOL_PSD, 0.0, w)


def entropy_of_matrix(m: np.ndarray) -> float:
    """Von Neumann entropy of a Hermitian PSD array without state validation.

    Used on hot paths where the caller guarantees validity.
    """
    w = _clamped_eigvals(np.asarray(m))
    return shannon_entropy(np.clip(w, 0.0, None))


def von_neumann_entropy(rho: StateLike) -> float:
    """S(rho) = -Tr rho log2 rho, in bits."""
    return entropy_of_matrix(as_density(rho).matrix)


def _psd_operator(sigma) -> np.ndarray:
    if isinstance(sigma, DensityOperator):
        return sigma.matrix
    s = np.asarray(sigma, dtype=complex)
    if not is_hermitian(s):
        raise InvalidState("second argument of relative entropy must be Hermitian")
    s = 0.5 * (s + s.conj().T)
    if np.linalg.eigvalsh(s)[0] < -TOL_PSD:
        raise InvalidState("second argument of relative entropy must be positive semidefinite")
    return s


def relative_entropy(rho: StateLike, sigma) -> float:
    """D(rho || sigma) = Tr rho log rho - Tr rho log sigma, in bits.

    ``sigma`` may be any positive semidefinite operator (it need not have unit
    trace, e.g. the image of the identity under a channel). Raises
    :class:`SupportViolation` when the result would be infinite.
    """
    rho = as_density(rho)
    s = _psd_operator(sigma)
    if s.shape != rho.matrix.shape:
        raise DimensionMismatch(f"shapes {rho.matrix.shape} and {s.shape} differ")
    mu, v = np.linalg.eigh(s)
    support = mu > TOL_PSD
    # weight of rho on each eigenvector of sigma
    weights = np.real(np.einsum("ji,jk,ki->i", v.conj(), rho.matrix, v))
    outside = weights[~support].sum()
    if outside > TOL_PSD:
        raise SupportViolation(f"rho has weight {outside:.3g} outside the support of sigma")
    cross = float(np.sum(weights[support] * np.log2(mu[support])))
    return -entropy_of_matrix(rho.matrix) - cross


def _label_index(label, n: int) -> int:
    if isinstance(label, str):
        idx = ord(label.upper()) - ord("A")
    else:
        idx = int(label)
    if not 0 <= idx < n:
        raise InvalidState(f"no subsystem {label!r} in a {n}-partite state")
    return idx


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with the first factor as the most significant index."""
    return np.kron(np.asarray(a), np.asarray(b))


def partial_trace(rho: StateLike, keep) -> DensityOperator:
    """Reduce a bipartite (or multipartite) state to the subsystem ``keep``.

    ``keep`` is a label ``"A"``/``"B"``/... or an integer index.
    """
    rho = as_density(rho)
    n = len(rho.dims)
    if n < 2:
        raise InvalidState("partial trace needs a state with at least two subsystems")
    k = _label_index(keep, n)
    t = rho.matrix.reshape(rho.dims + rho.dims)
    letters = "abcdefghijklmnopqrstuvwxyz"
    rows = list(letters[:n])
    cols = list(letters[n:2 * n])
    for i in range(n):
        if i != k:
            cols[i] = rows[i]
    expr = "".join(rows) + "".join(cols) + "->" + rows[k] + cols[k]
    reduced = np.einsum(expr, t)
    return DensityOperator(reduced, (rho.dims[k],))


def conditional_entropy(rho_ab: StateLike, conditioned_on="B") -> float:
    """S(X|Y) = S(XY) - S(Y) where Y is ``conditioned_on``. May be negative."""
    rho_ab = as_density(rho_ab)
    if len(rho_ab.dims) != 2:
        raise InvalidState("conditional entropy needs bipartite dims metadata")
    return von_neumann_entropy(rho_ab) - von_neumann_entropy(partial_trace(rho_ab, conditioned_on))
