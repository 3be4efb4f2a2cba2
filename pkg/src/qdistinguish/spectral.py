"""Hermitian eigensystems, matrix functions on the support, and Schatten norms.

Matrix functions follow the support convention ``0**t == 0`` for every real
``t`` (so ``P**0`` is the support projector of ``P``) and ``0 log 0 == 0``.
Eigenvalues at or below the support cutoff are treated as exact zeros.
"""

from typing import NamedTuple, Optional

import numpy as np

from .errors import (
    InvalidExponent,
    NegativeEigenvalue,
    NonHermitianInput,
    NumericalFailure,
)

EPS = np.finfo(float).eps

TOL_HERM = 1e-10
TOL_PSD = 1e-10


def tol_recon(dim: int) -> float:
    return 1e-11 * dim


class SpectralDecomposition(NamedTuple):
    """Eigenvalues (descending) and orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        V = self.eigenvectors
        return (V * self.eigenvalues) @ V.conj().T


def as_hermitian(H, tol: float = TOL_HERM) -> np.ndarray:
    """Validate ``H`` as a square Hermitian matrix and return a symmetrized copy."""
    H = np.asarray(H, dtype=complex)
    if H.ndim != 2 or H.shape[0] != H.shape[1] or H.shape[0] < 1:
        raise NonHermitianInput(f"expected a non-empty square matrix, got shape {H.shape}")
    asym = np.max(np.abs(H - H.conj().T))
    if not np.isfinite(asym) or asym > tol:
        raise NonHermitianInput(f"matrix is not Hermitian (max |H - H*| = {asym:.3e})")
    return (H + H.conj().T) / 2


def support_cutoff(eigenvalues, dim: Optional[int] = None) -> float:
    """Relative rank tolerance ``dim * eps * max(|lambda_max|, 1)``."""
    eigenvalues = np.asarray(eigenvalues)
    if dim is None:
        dim = eigenvalues.size
    scale = max(float(np.max(np.abs(eigenvalues))) if eigenvalues.size else 0.0, 1.0)
    return dim * EPS * scale


def spectral_decompose(H) -> SpectralDecomposition:
    H = as_hermitian(H)
    try:
        lam, V = np.linalg.eigh(H)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"eigensolver failed: {exc}") from exc
    # eigh returns ascending order; a stable reversal keeps ties in solver order
    order = np.argsort(-lam, kind="stable")
    return SpectralDecomposition(lam[order], V[:, order])


def psd_spectrum(P, cutoff: Optional[float] = None):
    """Return ``(eigenvalues, eigenvectors, support_mask)`` for a PSD matrix.

    Eigenvalues in ``[-TOL_PSD, 0)`` are clipped to zero; anything more
    negative raises :class:`NegativeEigenvalue`.
    """
    lam, V = spectral_decompose(P)
    if lam.size and lam[-1] < -TOL_PSD:
        raise NegativeEigenvalue(f"matrix is not positive semidefinite (lambda_min = {lam[-1]:.3e})")
    lam = np.clip(lam, 0.0, None)
    if cutoff is None:
        cutoff = support_cutoff(lam)
    return lam, V, lam > cutoff


def _apply(lam, V, mask, values) -> np.ndarray:
    Vs = V[:, mask]
    return (Vs * values) @ Vs.conj().T


def fractional_power(P, t: float, cutoff: Optional[float] = None) -> np.ndarray:
    """``P**t`` on the support of ``P`` and zero on its kernel.

    >>> fractional_power(np.diag([4.0, 0.0]), 0.5).real
    array([[2., 0.],
           [0., 0.]])
    """
    lam, V, mask = psd_spectrum(P, cutoff)
    return _apply(lam, V, mask, lam[mask] ** t)


def support_projector(P, cutoff: Optional[float] = None) -> np.ndarray:
    lam, V, mask = psd_spectrum(P, cutoff)
    return _apply(lam, V, mask, np.ones(int(mask.sum())))


def log_on_support(P, cutoff: Optional[float] = None) -> np.ndarray:
    lam, V, mask = psd_spectrum(P, cutoff)
    return _apply(lam, V, mask, np.log(lam[mask]))


def jordan_parts(H):
    """Split ``H`` into PSD parts ``(H_plus, H_minus)`` with ``H = H_plus - H_minus``."""
    lam, V = spectral_decompose(H)
    pos = np.clip(lam, 0.0, None)
    neg = np.clip(-lam, 0.0, None)
    return (V * pos) @ V.conj().T, (V * neg) @ V.conj().T


def singular_values(M) -> np.ndarray:
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    try:
        return np.linalg.svd(M, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"singular value decomposition failed: {exc}") from exc


def schatten_norm(M, q: float) -> float:
    """Schatten ``q``-norm ``(sum_i sigma_i**q)**(1/q)``.

    For ``0 < q < 1`` this is only a quasi-norm. Singular values below the
    support cutoff count as exact zeros, otherwise rounding noise raised to a
    small power would dominate. The cutoff is relative to the largest
    singular value so that the norm scales exactly.
    """
    if not q > 0:
        raise InvalidExponent(f"Schatten exponent must be positive, got {q}")
    sv = singular_values(M)
    top = sv[0] if sv.size else 0.0
    if top == 0.0:
        return 0.0
    if np.isinf(q):
        return float(top)
    sv = sv[sv > sv.size * EPS * top]
    return float(top * np.sum((sv / top) ** q) ** (1.0 / q))
