"""The three generalized decompositions: geigen, gsvd, gplssvd.

Each function canonicalizes its constraint inputs, forms the metric-weighted
matrix, decomposes it with the tolerance-aware kernel, and maps the standard
vectors back to generalized vectors and component scores. All three return
the same :class:`DecompositionResult` record with the fields appropriate to
the method populated (see each function's docstring).

Rank truncation: ``k=0`` (the default) returns every retained component;
``k > 0`` keeps the first k columns of every per-component output while
``d_full``/``l_full`` always keep the whole above-tolerance spectrum. All
outputs are computed on the full retained set and then sliced, so a k-run
is bit-identical to the leading columns of a full run.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from . import kernel
from .constraints import (
    apply_invsqrt_metric,
    apply_metric,
    apply_sqrt_metric,
    normalize_constraint,
)
from .errors import EmptyMatrixError, DimensionMismatchError

GEIGEN = "geigen"
GSVD = "gsvd"
GPLSSVD = "gplssvd"


@dataclass
class DecompositionResult:
    """Unified output record for geigen / gsvd / gplssvd.

    Vector/score fields absent for a method are None:
    geigen lacks u, p, fi, lx, ly; gsvd lacks lx, ly; gplssvd has all.
    """

    method: str
    d: np.ndarray
    d_full: np.ndarray
    l: np.ndarray
    l_full: np.ndarray
    v: np.ndarray
    q: np.ndarray
    fj: np.ndarray
    u: np.ndarray = None
    p: np.ndarray = None
    fi: np.ndarray = None
    lx: np.ndarray = None
    ly: np.ndarray = None
    n_total_components: int = 0
    n_retained: int = 0

    def fields(self):
        """Populated per-component fields in a stable order."""
        names = ["d", "d_full", "l", "l_full", "u", "v", "p", "q", "fi", "fj", "lx", "ly"]
        return {n: getattr(self, n) for n in names if getattr(self, n) is not None}


def _resolve_k(k, n_total):
    k = int(k)
    if k <= 0 or k == n_total:
        return n_total
    if k > n_total:
        warnings.warn(
            f"requested k={k} exceeds the {n_total} retained components; clamping",
            stacklevel=3,
        )
        return n_total
    return k


def _validate_data(x, name="x"):
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 2 or x.size == 0:
        raise EmptyMatrixError(f"{name} must be a non-empty 2-d matrix")
    if not np.all(np.isfinite(x)):
        raise EmptyMatrixError(f"{name} contains non-finite entries")
    return x


def geigen(x, w=None, k=0, tol=kernel.SQRT_EPS, symmetric=None):
    """Generalized eigendecomposition of a square matrix under metric `w`.

    Decomposes x = Q L Q^T with Q^T w Q = I by eigendecomposing
    w^(1/2) x w^(1/2). Component scores are fj = w Q diag(d).

    Parameters
    ----------
    x : (J, J) array
        Square (symmetric) matrix to decompose.
    w : None, (J,) vector, or (J, J) PSD matrix
        Constraint metric; missing means identity.
    k : int
        Number of components to return; 0 means all retained.
    tol : float or None
        Eigenvalues at or below this are dropped; None (or NaN/inf/negative)
        disables the tolerance and keeps negative eigenvalues.
    symmetric : bool, optional
        Skip the symmetry test when the caller already knows.
    """
    x = _validate_data(x)
    if x.shape[0] != x.shape[1]:
        raise DimensionMismatchError(f"geigen requires a square matrix, got {x.shape}")
    c = normalize_constraint(w, x.shape[0])
    xt = apply_sqrt_metric(c, apply_sqrt_metric(c, x, "right"), "left")
    eig = kernel.tolerance_eigen(xt, tol=tol, symmetric=symmetric)

    l_full = eig.values
    d_full = np.sqrt(np.clip(l_full, 0.0, None))
    v = eig.vectors
    q = apply_invsqrt_metric(c, v, "left")
    fj = apply_metric(c, q, "left") * d_full[None, :]

    n_total = l_full.shape[0]
    kk = _resolve_k(k, n_total)
    return DecompositionResult(
        method=GEIGEN,
        d=d_full[:kk],
        d_full=d_full,
        l=l_full[:kk],
        l_full=l_full,
        v=v[:, :kk],
        q=q[:, :kk],
        fj=fj[:, :kk],
        n_total_components=n_total,
        n_retained=kk,
    )


def gsvd(x, lw=None, rw=None, k=0, tol=kernel.EPS):
    """Generalized SVD of a rectangular matrix under row/column metrics.

    Decomposes x = P diag(d) Q^T with P^T lw P = I = Q^T rw Q by taking the
    SVD of lw^(1/2) x rw^(1/2). Row scores fi = lw P diag(d), column scores
    fj = rw Q diag(d).
    """
    x = _validate_data(x)
    lwc = normalize_constraint(lw, x.shape[0])
    rwc = normalize_constraint(rw, x.shape[1])
    xt = apply_sqrt_metric(lwc, apply_sqrt_metric(rwc, x, "right"), "left")
    sv = kernel.tolerance_svd(xt, tol=tol)

    d_full = sv.d
    l_full = d_full**2
    p = apply_invsqrt_metric(lwc, sv.u, "left")
    q = apply_invsqrt_metric(rwc, sv.v, "left")
    fi = apply_metric(lwc, p, "left") * d_full[None, :]
    fj = apply_metric(rwc, q, "left") * d_full[None, :]

    n_total = d_full.shape[0]
    kk = _resolve_k(k, n_total)
    return DecompositionResult(
        method=GSVD,
        d=d_full[:kk],
        d_full=d_full,
        l=l_full[:kk],
        l_full=l_full,
        u=sv.u[:, :kk],
        v=sv.v[:, :kk],
        p=p[:, :kk],
        q=q[:, :kk],
        fi=fi[:, :kk],
        fj=fj[:, :kk],
        n_total_components=n_total,
        n_retained=kk,
    )


def gplssvd(x, y, xlw=None, ylw=None, xrw=None, yrw=None, k=0, tol=kernel.EPS):
    """Generalized PLS-SVD of the relationship between two data matrices.

    With Xt = xlw^(1/2) x xrw^(1/2) and Yt = ylw^(1/2) y yrw^(1/2), the SVD
    of Xt^T Yt yields u, d, v; generalized vectors are p = xrw^(-1/2) u and
    q = yrw^(-1/2) v. Latent variable scores are
    lx = xlw^(1/2) x xrw p and ly = ylw^(1/2) y yrw q, whose cross-product
    diagonal equals d.
    """
    x = _validate_data(x, "x")
    y = _validate_data(y, "y")
    if x.shape[0] != y.shape[0]:
        raise DimensionMismatchError(
            f"x and y must share rows: {x.shape[0]} vs {y.shape[0]}"
        )
    xlwc = normalize_constraint(xlw, x.shape[0])
    xrwc = normalize_constraint(xrw, x.shape[1])
    ylwc = normalize_constraint(ylw, y.shape[0])
    yrwc = normalize_constraint(yrw, y.shape[1])

    xt = apply_sqrt_metric(xlwc, apply_sqrt_metric(xrwc, x, "right"), "left")
    yt = apply_sqrt_metric(ylwc, apply_sqrt_metric(yrwc, y, "right"), "left")
    sv = kernel.tolerance_svd(xt.T @ yt, tol=tol)

    d_full = sv.d
    l_full = d_full**2
    p = apply_invsqrt_metric(xrwc, sv.u, "left")
    q = apply_invsqrt_metric(yrwc, sv.v, "left")
    fi = apply_metric(xrwc, p, "left") * d_full[None, :]
    fj = apply_metric(yrwc, q, "left") * d_full[None, :]
    lx = apply_sqrt_metric(xlwc, x @ apply_metric(xrwc, p, "left"), "left")
    ly = apply_sqrt_metric(ylwc, y @ apply_metric(yrwc, q, "left"), "left")

    n_total = d_full.shape[0]
    kk = _resolve_k(k, n_total)
    return DecompositionResult(
        method=GPLSSVD,
        d=d_full[:kk],
        d_full=d_full,
        l=l_full[:kk],
        l_full=l_full,
        u=sv.u[:, :kk],
        v=sv.v[:, :kk],
        p=p[:, :kk],
        q=q[:, :kk],
        fi=fi[:, :kk],
        fj=fj[:, :kk],
        lx=lx[:, :kk],
        ly=ly[:, :kk],
        n_total_components=n_total,
        n_retained=kk,
    )
