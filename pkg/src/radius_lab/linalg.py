"""Dense complex matrix helpers: Cartesian parts, Hermitian eigensolvers, matrix functions.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Every function
validates its input through :func:`as_matrix`, so lists of lists work too.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_CONFIG
from .errors import MatrixFormatError, NegativeEigenvalue, NoConvergence, NotHermitian

HERMITIAN_TOL = 1e-12


def as_matrix(A) -> np.ndarray:
    """Coerce `A` to a finite square complex128 array."""
    M = np.asarray(A, dtype=np.complex128)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
        raise MatrixFormatError(f"expected a non-empty square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise MatrixFormatError("matrix entries must be finite")
    return M


def adjoint(A) -> np.ndarray:
    return as_matrix(A).conj().T


def re_part(A) -> np.ndarray:
    """Hermitian real part (A + A*)/2."""
    A = as_matrix(A)
    return (A + A.conj().T) / 2


def im_part(A) -> np.ndarray:
    """Hermitian imaginary part (A - A*)/2i."""
    A = as_matrix(A)
    return (A - A.conj().T) / 2j


def is_hermitian(A, tol: float = HERMITIAN_TOL) -> bool:
    A = as_matrix(A)
    scale = max(np.linalg.norm(A), np.finfo(float).tiny)
    return bool(np.linalg.norm(A - A.conj().T) <= tol * scale)


@dataclass(frozen=True)
class HermitianEigen:
    """Eigenvalues sorted descending and the matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        V = self.eigenvectors
        return (V * self.eigenvalues) @ V.conj().T


def _symmetrized(H) -> np.ndarray:
    H = as_matrix(H)
    if not is_hermitian(H):
        raise NotHermitian("matrix is not Hermitian within tolerance")
    return (H + H.conj().T) / 2


def jacobi_eigh(H, tol: float = DEFAULT_CONFIG.eig_tol, max_rotations: int | None = None) -> HermitianEigen:
    """Cyclic Jacobi eigensolver for a complex Hermitian matrix.

    Each rotation first removes the phase of the pivot entry, then applies the
    classical real rotation, so the pivot becomes exactly zero.

    Args:
        H: Hermitian matrix.
        tol: Stop once the off-diagonal Frobenius norm is at most
            ``tol * ||H||_F``.
        max_rotations: Rotation budget; defaults to ``100 * dim**2``.

    Raises:
        NotHermitian: If `H` is not Hermitian within ``1e-12`` relative.
        NoConvergence: If the rotation budget runs out.
    """
    A = _symmetrized(H).copy()
    n = A.shape[0]
    V = np.eye(n, dtype=np.complex128)
    if max_rotations is None:
        max_rotations = 100 * n * n
    target = tol * np.linalg.norm(A)
    rotations = 0

    off_mask = ~np.eye(n, dtype=bool)

    def off_norm() -> float:
        return float(np.linalg.norm(A[off_mask]))

    while off_norm() > target:
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = A[p, q]
                mag = abs(b)
                if mag <= target * 1e-3 / n or mag == 0.0:
                    continue
                if rotations >= max_rotations:
                    raise NoConvergence(f"Jacobi exceeded {max_rotations} rotations")
                phase = b / mag
                tau = (A[q, q].real - A[p, p].real) / (2.0 * mag)
                t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                G = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
                idx = [p, q]
                A[:, idx] = A[:, idx] @ G
                A[idx, :] = G.conj().T @ A[idx, :]
                A[p, q] = A[q, p] = 0.0
                V[:, idx] = V[:, idx] @ G
                rotations += 1
    lam = np.real(np.diag(A))
    order = np.argsort(-lam, kind="stable")
    return HermitianEigen(lam[order], V[:, order])


def hermitian_eigen(H, method: str = "lapack", tol: float = DEFAULT_CONFIG.eig_tol) -> HermitianEigen:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending.

    ``method="jacobi"`` runs :func:`jacobi_eigh`; ``"lapack"`` uses
    ``numpy.linalg.eigh`` on the symmetrized input.
    """
    if method == "jacobi":
        return jacobi_eigh(H, tol=tol)
    if method != "lapack":
        raise ValueError(f"unknown eigensolver {method!r}")
    lam, V = np.linalg.eigh(_symmetrized(H))
    return HermitianEigen(lam[::-1].copy(), V[:, ::-1].copy())


def max_eigenvalue(H) -> float:
    return float(np.linalg.eigvalsh(_symmetrized(H))[-1])


def operator_norm(A, method: str = "lapack") -> float:
    """Largest singular value, computed as sqrt(lambda_max(A* A))."""
    A = as_matrix(A)
    G = A.conj().T @ A
    if method == "lapack":
        top = np.linalg.eigvalsh((G + G.conj().T) / 2)[-1]
    else:
        top = hermitian_eigen(G, method=method).eigenvalues[0]
    return math.sqrt(max(float(top), 0.0))


def _clamped_spectrum(H, eig_tol: float, method: str) -> tuple[np.ndarray, np.ndarray, float]:
    eig = hermitian_eigen(H, method=method)
    lam, V = eig.eigenvalues, eig.eigenvectors
    scale = max(abs(lam[0]), abs(lam[-1])) if lam.size else 0.0
    window = eig_tol * scale
    if lam[-1] < -window:
        raise NegativeEigenvalue(f"eigenvalue {lam[-1]:.3e} below -{window:.3e}")
    return np.maximum(lam, 0.0), V, window


def psd_power(H, s: float, eig_tol: float = DEFAULT_CONFIG.eig_tol, method: str = "lapack") -> np.ndarray:
    """Fractional power of a Hermitian positive semidefinite matrix.

    Eigenvalues in ``[-eig_tol*||H||, 0)`` are clamped to zero. With ``s == 0``
    the result is the orthogonal projector onto the range of `H` (zero
    eigenvalues stay zero); eigenvalues within the clamping window count as
    zero for that purpose.
    """
    if s < 0:
        raise ValueError(f"exponent must be nonnegative, got {s}")
    H = as_matrix(H)
    if s == 1:
        _clamped_spectrum(H, eig_tol, method)
        return _symmetrized(H)
    lam, V, window = _clamped_spectrum(H, eig_tol, method)
    if s == 0:
        mapped = (lam > window).astype(float)
    else:
        mapped = lam**s
    return (V * mapped) @ V.conj().T


def matrix_abs(A, eig_tol: float = DEFAULT_CONFIG.eig_tol, method: str = "lapack") -> np.ndarray:
    """|A| = (A* A)^(1/2)."""
    A = as_matrix(A)
    return psd_power(A.conj().T @ A, 0.5, eig_tol=eig_tol, method=method)
