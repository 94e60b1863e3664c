"""Dense eigen/SVD primitives with tolerance-based component retention.

The two workhorses here, :func:`tolerance_eigen` and :func:`tolerance_svd`,
wrap a standard dense solver and drop any eigen/singular value at or below a
threshold. The threshold can be disabled (``tol=None``, NaN, infinity, or any
negative value), in which case the full spectrum is returned, including
negative eigenvalues.

Also provides the PSD matrix square root / inverse square root helpers used
to turn constraint metrics into half and inverse-half forms.
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    ComplexOrNegativeEigenvalueError,
    EmptyMatrixError,
    NoConvergenceError,
    NonFiniteError,
    NonSquareError,
    NotPSDError,
    NotSymmetricError,
    UnsupportedError,
)

# Default retention thresholds (eigen uses sqrt(eps), svd uses eps).
EPS = float(np.finfo(np.float64).eps)
SQRT_EPS = float(np.sqrt(np.finfo(np.float64).eps))

# Relative floors for symmetry and PSD checks.
SYMMETRY_RTOL = 1e-10
PSD_RTOL = 1e-10


@dataclass(frozen=True)
class EigenOutput:
    """Eigenvalues (descending) and matching eigenvector columns."""

    values: np.ndarray
    vectors: np.ndarray


@dataclass(frozen=True)
class SvdOutput:
    """Left vectors, singular values (descending), and right vectors."""

    u: np.ndarray
    d: np.ndarray
    v: np.ndarray


def tolerance_active(tol):
    """True when `tol` is a usable nonnegative threshold.

    ``None``, NaN, +/-inf, and negative values all disable the tolerance,
    so the full spectrum is kept.
    """
    if tol is None:
        return False
    tol = float(tol)
    if np.isnan(tol) or np.isinf(tol) or tol < 0:
        return False
    return True


def _as_matrix(a, name="matrix"):
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2:
        raise EmptyMatrixError(f"{name} must be 2-dimensional, got ndim={a.ndim}")
    if a.size and not np.all(np.isfinite(a)):
        raise NonFiniteError(f"{name} contains NaN or Inf entries")
    return a


def _require_square(a, name="matrix"):
    if a.shape[0] != a.shape[1]:
        raise NonSquareError(f"{name} must be square, got shape {a.shape}")


def is_symmetric(s, rtol=SYMMETRY_RTOL):
    """Symmetry test with an absolute allowance of rtol * max|entry|."""
    s = np.asarray(s, dtype=np.float64)
    if s.shape[0] != s.shape[1]:
        return False
    if s.size == 0:
        return True
    scale = np.abs(s).max()
    return bool(np.abs(s - s.T).max() <= rtol * max(scale, 1e-300))


def canonical_signs(vectors):
    """Flip each column so its largest-magnitude entry is positive.

    Ties break toward the lowest row index (argmax on |column|). Returns the
    per-column sign multipliers applied.
    """
    if vectors.shape[1] == 0:
        return np.ones(0)
    idx = np.argmax(np.abs(vectors), axis=0)
    picked = vectors[idx, np.arange(vectors.shape[1])]
    signs = np.where(picked < 0, -1.0, 1.0)
    vectors *= signs
    return signs


def symmetric_eigen(s):
    """Eigendecomposition of a symmetric matrix, eigenvalues descending.

    Columns of the returned vectors follow the deterministic sign
    convention (largest-magnitude entry positive).
    """
    s = _as_matrix(s, "s")
    _require_square(s, "s")
    if not is_symmetric(s):
        raise NotSymmetricError("matrix is not symmetric within tolerance")
    try:
        values, vectors = np.linalg.eigh(s)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise NoConvergenceError(str(exc)) from exc
    order = np.argsort(values)[::-1]
    values = values[order]
    vectors = vectors[:, order]
    canonical_signs(vectors)
    return EigenOutput(values=values, vectors=vectors)


def tolerance_eigen(s, tol=SQRT_EPS, symmetric=None):
    """Eigendecomposition that drops eigenvalues at or below `tol`.

    With an active tolerance the retained spectrum must be strictly
    positive; an eigenvalue below ``-tol`` raises
    :class:`ComplexOrNegativeEigenvalueError`. Disabling the tolerance
    returns every eigenvalue, negatives included.
    """
    s = _as_matrix(s, "s")
    _require_square(s, "s")
    if symmetric is None:
        symmetric = is_symmetric(s)
    if not symmetric:
        # Only the symmetric path is supported; every standard use of the
        # generalized eigendecomposition in this package is symmetric.
        raise UnsupportedError("asymmetric eigendecomposition is not supported")
    out = symmetric_eigen(s)
    if not tolerance_active(tol):
        return out
    tol = float(tol)
    if out.values.size and out.values.min() < -tol:
        raise ComplexOrNegativeEigenvalueError(
            "eigenvalues are not all positive within tolerance "
            f"(min={out.values.min():.6g}); disable the tolerance to proceed"
        )
    keep = out.values > tol
    return EigenOutput(values=out.values[keep], vectors=out.vectors[:, keep])


def tolerance_svd(x, tol=EPS):
    """SVD that drops singular values at or below `tol`.

    Sign convention: each right singular vector has its largest-magnitude
    entry positive; the matching left vector is flipped jointly so the
    reconstruction is preserved.
    """
    x = _as_matrix(x, "x")
    if x.size == 0:
        raise EmptyMatrixError("cannot decompose an empty matrix")
    try:
        u, d, vt = np.linalg.svd(x, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(str(exc)) from exc
    v = vt.T
    signs = canonical_signs(v)
    u = u * signs
    if tolerance_active(tol):
        # Both the singular values and their squares (the eigenvalues) must
        # clear the threshold; collinear data leaves near-null singular
        # values whose squares are far below any sensible cutoff.
        t = float(tol)
        keep = (d > t) & (d * d > t)
        u, d, v = u[:, keep], d[keep], v[:, keep]
    return SvdOutput(u=u, d=d, v=v)


def _psd_eigen(w, name):
    w = _as_matrix(w, name)
    _require_square(w, name)
    if not is_symmetric(w):
        raise NotSymmetricError(f"{name} must be symmetric")
    out = symmetric_eigen((w + w.T) / 2.0)
    lam = out.values
    lam_max = lam[0] if lam.size else 0.0
    floor = -PSD_RTOL * max(lam_max, 0.0)
    if lam.size and lam.min() < floor:
        raise NotPSDError(
            f"{name} is not positive semi-definite (min eigenvalue {lam.min():.6g})"
        )
    return np.clip(lam, 0.0, None), out.vectors


def sqrt_psd_matrix(w):
    """Symmetric PSD square root: returns S with S @ S ~= w."""
    lam, vec = _psd_eigen(w, "w")
    s = (vec * np.sqrt(lam)) @ vec.T
    return (s + s.T) / 2.0


def invsqrt_psd_matrix(w):
    """Pseudo-inverse square root of a PSD matrix.

    Eigenvalues above a relative cutoff map to lambda**-0.5, the rest to
    zero, so singular directions are annihilated rather than amplified.
    """
    lam, vec = _psd_eigen(w, "w")
    lam_max = lam[0] if lam.size else 0.0
    cutoff = lam_max * w.shape[0] * EPS
    inv = np.where(lam > cutoff, 1.0 / np.sqrt(np.where(lam > cutoff, lam, 1.0)), 0.0)
    s = (vec * inv) @ vec.T
    return (s + s.T) / 2.0


def is_diagonal_matrix(w):
    """True iff every off-diagonal entry is exactly zero (no epsilon)."""
    w = np.asarray(w, dtype=np.float64)
    _require_square(w, "w")
    off = w - np.diag(np.diag(w))
    return bool(np.count_nonzero(off) == 0)


def is_empty_matrix(w):
    """True iff the matrix has no rows/columns or is entirely zero."""
    w = np.asarray(w, dtype=np.float64)
    return w.size == 0 or not np.any(w)
