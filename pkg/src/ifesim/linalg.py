"""Dense complex linear algebra at small dimension.

All objects are plain numpy arrays: square complex matrices, 1-d state
vectors, and 2-d arrays whose orthonormal columns span a subspace.
Dimensions stay small (<= ~128), so everything is dense and the default
matrix norm is Frobenius.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatchError, NoConvergenceError, NotHermitianError

HERMITICITY_TOL = 1e-10
UNITARITY_TOL = 1e-9
ORTHO_TOL = 1e-10
EIG_TOL = 1e-10
NORM_TOL = 1e-6
DEGENERACY_RTOL = 1e-8


def frobenius(m: np.ndarray) -> float:
    """Frobenius norm (2-norm for vectors)."""
    return float(np.linalg.norm(m))


def as_square_matrix(m) -> np.ndarray:
    """Coerce to a finite square complex128 matrix."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise ValueError("matrix contains non-finite entries")
    return a


def as_state_vector(v) -> np.ndarray:
    a = np.asarray(v, dtype=np.complex128)
    if a.ndim != 1:
        raise DimensionMismatchError(f"expected a 1-d state vector, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise ValueError("state vector contains non-finite entries")
    return a


def hermiticity_defect(m: np.ndarray) -> float:
    """max |M[i,j] - conj(M[j,i])|."""
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


def unitarity_defect(u: np.ndarray) -> float:
    """Frobenius distance of U†U from the identity."""
    return frobenius(u.conj().T @ u - np.eye(u.shape[0]))


def assert_hermitian(m, tol: float = HERMITICITY_TOL) -> np.ndarray:
    a = as_square_matrix(m)
    defect = hermiticity_defect(a)
    if defect > tol:
        raise NotHermitianError(f"hermiticity defect {defect:.3e} exceeds {tol:.3e}")
    return a


def normalized(v, tol: float = NORM_TOL) -> np.ndarray:
    """Validate that v is unit norm within tol, then renormalize exactly."""
    a = as_state_vector(v)
    n = frobenius(a)
    if abs(n - 1.0) > tol:
        raise ValueError(f"state norm {n:.6g} deviates from 1 by more than {tol:g}")
    return a / n


def hermitian_eigendecompose(m, tol: float = HERMITICITY_TOL):
    """Eigendecompose a Hermitian matrix.

    Returns (eigenvalues, eigenvectors) with real eigenvalues sorted
    ascending and orthonormal eigenvectors as matrix columns, so that
    M @ V = V @ diag(w) up to rounding.
    """
    a = assert_hermitian(m, tol)
    try:
        w, v = np.linalg.eigh((a + a.conj().T) / 2.0)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(f"eigensolver failed: {exc}") from exc
    return w, v


def group_degenerate(eigenvalues: np.ndarray, tol: float) -> list[slice]:
    """Split an ascending eigenvalue array into clusters with gaps <= tol."""
    n = len(eigenvalues)
    if n == 0:
        return []
    slices = []
    start = 0
    for i in range(1, n):
        if eigenvalues[i] - eigenvalues[i - 1] > tol:
            slices.append(slice(start, i))
            start = i
    slices.append(slice(start, n))
    return slices


def hermitian_eigenspaces(m, degeneracy_tol: float | None = None):
    """Degeneracy-grouped eigenspaces of a Hermitian matrix.

    Returns a list of (eigenvalue, basis) pairs in ascending eigenvalue
    order; eigenvalue is the mean over the cluster, basis holds the
    orthonormal cluster vectors as columns. The default clustering
    width is DEGENERACY_RTOL * (1 + ||M||_F).
    """
    a = as_square_matrix(m)
    if degeneracy_tol is None:
        degeneracy_tol = DEGENERACY_RTOL * (1.0 + frobenius(a))
    w, v = hermitian_eigendecompose(a)
    return [(float(np.mean(w[s])), v[:, s]) for s in group_degenerate(w, degeneracy_tol)]


def unitary_exp(h, dt: float) -> np.ndarray:
    """exp(-i * H * dt) for Hermitian H, via eigendecomposition."""
    w, v = hermitian_eigendecompose(h)
    return (v * np.exp(-1j * w * dt)) @ v.conj().T


def projector(basis: np.ndarray) -> np.ndarray:
    """Orthogonal projector onto the column span of an orthonormal basis."""
    b = np.asarray(basis, dtype=np.complex128)
    if b.ndim != 2:
        raise DimensionMismatchError(f"expected a dim x count basis, got shape {b.shape}")
    return b @ b.conj().T


def gram_defect(basis: np.ndarray) -> float:
    """Frobenius distance of B†B from the identity (0 for an empty basis)."""
    b = np.asarray(basis, dtype=np.complex128)
    if b.shape[1] == 0:
        return 0.0
    return frobenius(b.conj().T @ b - np.eye(b.shape[1]))


def empty_basis(dim: int) -> np.ndarray:
    return np.zeros((dim, 0), dtype=np.complex128)


def subspace_intersection(a: np.ndarray, b: np.ndarray, tol: float) -> np.ndarray:
    """Orthonormal basis of span(A) ∩ span(B).

    A vector belongs to both spans iff it is fixed by both projectors,
    i.e. iff it is a unit singular vector of the stacked, scaled
    projector constraint [P_A; P_B] / sqrt(2). Right singular vectors
    with singular value >= 1 - tol are returned as basis columns.
    """
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.ndim != 2 or b.ndim != 2 or a.shape[0] != b.shape[0]:
        raise DimensionMismatchError(
            f"bases live on different spaces: shapes {a.shape} and {b.shape}"
        )
    dim = a.shape[0]
    if a.shape[1] == 0 or b.shape[1] == 0:
        return empty_basis(dim)
    stacked = np.vstack([projector(a), projector(b)]) / np.sqrt(2.0)
    _, s, vh = np.linalg.svd(stacked)
    keep = s >= 1.0 - tol
    if not np.any(keep):
        return empty_basis(dim)
    return vh[keep].conj().T


def residual_norm(m: np.ndarray, v: np.ndarray, a: float) -> float:
    """||(M - a*I) v||_2."""
    mm = as_square_matrix(m)
    vv = as_state_vector(v)
    if mm.shape[0] != vv.shape[0]:
        raise DimensionMismatchError(
            f"matrix dim {mm.shape[0]} vs vector dim {vv.shape[0]}"
        )
    return frobenius(mm @ vv - a * vv)


def rayleigh_quotient(m: np.ndarray, v: np.ndarray, tol: float = HERMITICITY_TOL) -> float:
    """Re <v, M v> for a unit vector v; the residual-minimizing eigenvalue estimate.

    The imaginary part of <v, M v> must vanish within the hermiticity
    tolerance, otherwise the matrix was not Hermitian to begin with.
    """
    mm = as_square_matrix(m)
    vv = normalized(v)
    if mm.shape[0] != vv.shape[0]:
        raise DimensionMismatchError(
            f"matrix dim {mm.shape[0]} vs vector dim {vv.shape[0]}"
        )
    z = complex(np.vdot(vv, mm @ vv))
    if abs(z.imag) > tol * (1.0 + abs(z.real)):
        raise NotHermitianError(f"<v, Mv> has imaginary part {z.imag:.3e}")
    return z.real
