"""Method-level constructors built on geigen / gsvd / gplssvd.

Each recipe performs the preprocessing a method prescribes and delegates to
one of the three generalized decompositions with the right constraints:

- PCA (four equivalent routes through geigen and gsvd)
- classical and weighted multidimensional scaling
- correspondence analysis, multiple CA, and ridge-regularized MCA
- PLS, reduced rank regression, CCA, and PLS-CA
"""

from dataclasses import dataclass

import numpy as np

from . import kernel
from .decomp import DecompositionResult, geigen, gplssvd, gsvd
from .errors import (
    DimensionMismatchError,
    EmptyMarginError,
    NegativeCountError,
    NonPositiveWeightError,
    NotADistanceMatrixError,
    SingleLevelVariableError,
    ZeroVarianceColumnError,
)

PCA_ROUTES = ("eigen_cov", "eigen_cor", "triplet_scaled", "triplet_metric")

_UNSET = object()


# ---------------------------------------------------------------------------
# shared preprocessing helpers


def center_scale(data, center=True, scale=True):
    """Column-wise center and/or scale (unit variance, ddof=1)."""
    data = np.asarray(data, dtype=np.float64)
    out = data - data.mean(axis=0) if center else data.copy()
    if scale:
        sd = np.std(data, axis=0, ddof=1)
        if np.any(sd == 0):
            bad = int(np.flatnonzero(sd == 0)[0])
            raise ZeroVarianceColumnError(f"column {bad} has zero variance")
        out = out / sd
    return out


def pseudo_inverse(a):
    """Moore-Penrose pseudo-inverse with a relative singular value cutoff.

    The cutoff is sqrt(machine eps) times the largest singular value, which
    matches the generalized-inverse convention common in statistical code.
    """
    a = np.asarray(a, dtype=np.float64)
    u, d, vt = np.linalg.svd(a, full_matrices=False)
    if d.size == 0 or d[0] == 0:
        return np.zeros(a.T.shape)
    keep = d > kernel.SQRT_EPS * d[0]
    inv = np.where(keep, 1.0 / np.where(keep, d, 1.0), 0.0)
    return (vt.T * inv) @ u.T


# ---------------------------------------------------------------------------
# PCA


def pca(data, route="eigen_cor", k=0, tol=_UNSET):
    """Principal components analysis through a generalized decomposition.

    Routes:

    - ``eigen_cov``: geigen of the covariance matrix.
    - ``eigen_cor``: geigen of the correlation matrix.
    - ``triplet_scaled``: gsvd of the z-scored data with uniform row
      weights 1/(I-1).
    - ``triplet_metric``: gsvd of the centered data with row weights
      1/(I-1) and column weights (I-1)/sum(x_centered^2); same spectrum and
      row outputs as ``triplet_scaled``, different column metric.
    """
    data = np.asarray(data, dtype=np.float64)
    if route not in PCA_ROUTES:
        raise ValueError(f"unknown PCA route {route!r}; expected one of {PCA_ROUTES}")
    if data.shape[0] < 2:
        raise DimensionMismatchError("PCA needs at least 2 rows")
    n = data.shape[0]
    dof = n - 1
    centered = data - data.mean(axis=0)
    if route == "eigen_cov":
        cov = centered.T @ centered / dof
        return geigen(cov, k=k, tol=kernel.SQRT_EPS if tol is _UNSET else tol)
    if route == "eigen_cor":
        cov = centered.T @ centered / dof
        sd = np.sqrt(np.diag(cov))
        if np.any(sd == 0):
            raise ZeroVarianceColumnError("correlation PCA with a constant column")
        cor = cov / np.outer(sd, sd)
        return geigen(cor, k=k, tol=kernel.SQRT_EPS if tol is _UNSET else tol)
    row_constraints = np.full(n, 1.0 / dof)
    svd_tol = kernel.EPS if tol is _UNSET else tol
    if route == "triplet_scaled":
        scaled = center_scale(data, center=True, scale=True)
        return gsvd(scaled, lw=row_constraints, k=k, tol=svd_tol)
    col_sumsq = np.sum(centered**2, axis=0)
    if np.any(col_sumsq == 0):
        raise ZeroVarianceColumnError("metric-column PCA with a constant column")
    col_constraints = dof / col_sumsq
    return gsvd(centered, lw=row_constraints, rw=col_constraints, k=k, tol=svd_tol)


# ---------------------------------------------------------------------------
# multidimensional scaling


def _check_distance_matrix(dist):
    dist = np.asarray(dist, dtype=np.float64)
    if dist.ndim != 2 or dist.shape[0] != dist.shape[1]:
        raise NotADistanceMatrixError("distance matrix must be square")
    if not kernel.is_symmetric(dist):
        raise NotADistanceMatrixError("distance matrix must be symmetric")
    if np.any(np.abs(np.diag(dist)) > 1e-12):
        raise NotADistanceMatrixError("distance matrix must have a zero diagonal")
    if np.any(dist < 0):
        raise NotADistanceMatrixError("distances must be nonnegative")
    return dist


def double_centered_gram(dist):
    """-1/2 * C d^2 C' with C the uniform centering matrix, computed by
    subtracting row/column means and adding back the grand mean."""
    d2 = dist**2
    row = d2.mean(axis=1, keepdims=True)
    col = d2.mean(axis=0, keepdims=True)
    grand = d2.mean()
    return -0.5 * (d2 - row - col + grand)


def mds(dist, k=0, tol=kernel.SQRT_EPS):
    """Classical (Torgerson) metric MDS via geigen of the double-centered
    squared distances. Component scores fj hold the coordinates."""
    dist = _check_distance_matrix(dist)
    b = double_centered_gram(dist)
    b = (b + b.T) / 2.0
    return geigen(b, k=k, tol=tol)


def weighted_mds(dist, row_weights, k=0):
    """Weighted classical scaling with per-observation masses.

    Uses the weight-based centering Cw = I - 1 w^T (weights are taken as
    masses directly, so uniform masses 1/n reproduce the classical centering
    matrix) and runs geigen under the diagonal metric of the weights with
    the tolerance disabled: unless the weights sum to one, the doubly
    centered matrix is not PSD and the trailing eigenvalues are negative.
    """
    dist = _check_distance_matrix(dist)
    w = np.asarray(row_weights, dtype=np.float64)
    if w.ndim != 1 or w.shape[0] != dist.shape[0]:
        raise DimensionMismatchError("row_weights must be a vector of length n")
    if np.any(w <= 0):
        raise NonPositiveWeightError("row weights must be strictly positive")
    n = dist.shape[0]
    cw = np.eye(n) - np.outer(np.ones(n), w)
    b = -0.5 * cw @ (dist**2) @ cw.T
    b = (b + b.T) / 2.0
    return geigen(b, w=w, k=k, tol=None)


def mds_score_sets(result):
    """The three score conventions for (weighted) MDS plots.

    Returns singular-vector scores v*d, generalized-vector scores q*d, and
    the component scores fj = W q d.
    """
    return {
        "vector": result.v * result.d[None, :],
        "generalized": result.q * result.d[None, :],
        "component": result.fj,
    }


# ---------------------------------------------------------------------------
# correspondence analysis family


@dataclass(frozen=True)
class CaProfiles:
    """Observed/expected/deviation probability matrices of a contingency
    table, with the row and column margins and the original grand total."""

    observed: np.ndarray
    row_prob: np.ndarray
    col_prob: np.ndarray
    expected: np.ndarray
    deviations: np.ndarray
    n_total: float


def ca_preprocess(counts):
    """Turn a table of nonnegative counts into CA profiles."""
    counts = np.asarray(counts, dtype=np.float64)
    if counts.ndim != 2 or counts.size == 0:
        raise EmptyMarginError("counts must be a non-empty 2-d table")
    if np.any(counts < 0):
        raise NegativeCountError("counts must be nonnegative")
    total = counts.sum()
    if total <= 0:
        raise EmptyMarginError("grand total must be positive")
    observed = counts / total
    row_prob = observed.sum(axis=1)
    col_prob = observed.sum(axis=0)
    if np.any(row_prob == 0) or np.any(col_prob == 0):
        raise EmptyMarginError("table has an all-zero row or column")
    expected = np.outer(row_prob, col_prob)
    return CaProfiles(
        observed=observed,
        row_prob=row_prob,
        col_prob=col_prob,
        expected=expected,
        deviations=observed - expected,
        n_total=float(total),
    )


def ca(counts, k=0, tol=kernel.EPS):
    """Correspondence analysis: gsvd of the deviations-from-independence
    matrix under reciprocal row/column probability metrics. The eigenvalues
    sum to chi-square / N (the total inertia)."""
    prof = ca_preprocess(counts)
    return gsvd(
        prof.deviations,
        lw=1.0 / prof.row_prob,
        rw=1.0 / prof.col_prob,
        k=k,
        tol=tol,
    )


@dataclass(frozen=True)
class DisjunctiveTable:
    """Complete disjunctive (indicator) coding of categorical variables.

    `variable_spans` maps each variable name to its (start, stop) column
    range in the indicator; `level_labels` names every indicator column.
    """

    indicator: np.ndarray
    variable_spans: tuple
    level_labels: tuple


def disjunctive_coding(table, variable_names=None):
    """Expand categorical variables into 0/1 indicator columns.

    Levels are ordered by first appearance; each variable contributes one
    column per observed level and exactly one 1 per row.
    """
    rows = [list(r) for r in table]
    if not rows:
        raise SingleLevelVariableError("no rows to code")
    n_vars = len(rows[0])
    if any(len(r) != n_vars for r in rows):
        raise DimensionMismatchError("ragged categorical table")
    if variable_names is None:
        variable_names = [f"var{j + 1}" for j in range(n_vars)]
    blocks, spans, labels = [], [], []
    start = 0
    for j in range(n_vars):
        col = [r[j] for r in rows]
        levels = list(dict.fromkeys(col))
        if len(levels) < 2:
            raise SingleLevelVariableError(
                f"variable {variable_names[j]!r} has fewer than 2 observed levels"
            )
        index = {lev: i for i, lev in enumerate(levels)}
        block = np.zeros((len(rows), len(levels)))
        block[np.arange(len(rows)), [index[v] for v in col]] = 1.0
        blocks.append(block)
        spans.append((variable_names[j], start, start + len(levels)))
        labels.extend(f"{variable_names[j]}{lev}" for lev in levels)
        start += len(levels)
    return DisjunctiveTable(
        indicator=np.hstack(blocks),
        variable_spans=tuple(spans),
        level_labels=tuple(labels),
    )


def mca(categorical, k=0, tol=kernel.EPS, variable_names=None):
    """Multiple correspondence analysis: CA of the complete disjunctive
    table. The coding is rank deficient (one null dimension per variable
    beyond the first), so the tolerance discards those dimensions."""
    tab = disjunctive_coding(categorical, variable_names=variable_names)
    return ca(tab.indicator, k=k, tol=tol)


def rmca(disjunctive, omega, k=0, tol=kernel.EPS):
    """Ridge-regularized MCA with regularization strength `omega`.

    Row constraints are I + omega * pinv(X X^T) and the raw column
    constraints are diag(column sums) + omega * X^T pinv(X X^T) X, with X
    the column-centered indicator; the transpose of the pseudo-inverse of
    the raw column constraints is what gets passed to gsvd. omega = 0
    reproduces standard MCA up to a per-component scaling factor.
    """
    if isinstance(disjunctive, DisjunctiveTable):
        indicator = disjunctive.indicator
    else:
        indicator = np.asarray(disjunctive, dtype=np.float64)
    omega = float(omega)
    if omega < 0:
        raise ValueError("omega must be nonnegative")
    centered = indicator - indicator.mean(axis=0)
    cross_inv = pseudo_inverse(centered @ centered.T)
    lw = np.eye(centered.shape[0]) + omega * cross_inv
    projector = centered.T @ cross_inv @ centered
    rw_raw = np.diag(indicator.sum(axis=0)) + omega * projector
    rw = pseudo_inverse(rw_raw).T
    return gsvd(centered, lw=lw, rw=rw, k=k, tol=tol)


# ---------------------------------------------------------------------------
# two-table methods


def pls(x, y, k=0, tol=kernel.EPS, center=True, scale=True):
    """Partial least squares SVD: gplssvd of the two (preprocessed) data
    matrices with identity constraints."""
    xp = center_scale(x, center=center, scale=scale)
    yp = center_scale(y, center=center, scale=scale)
    return gplssvd(xp, yp, k=k, tol=tol)


def rrr(x, y, k=0, tol=kernel.EPS, center=True, scale=True):
    """Reduced rank regression (redundancy analysis): gplssvd with the
    pseudo-inverse of X'X as the column metric for x."""
    xp = center_scale(x, center=center, scale=scale)
    yp = center_scale(y, center=center, scale=scale)
    return gplssvd(xp, yp, xrw=pseudo_inverse(xp.T @ xp), k=k, tol=tol)


def cca(x, y, k=0, tol=kernel.EPS, center=True, scale=True):
    """Canonical correlation analysis: gplssvd with pseudo-inverse
    cross-product metrics on both column sides. The singular values are the
    canonical correlations."""
    xp = center_scale(x, center=center, scale=scale)
    yp = center_scale(y, center=center, scale=scale)
    return gplssvd(
        xp,
        yp,
        xrw=pseudo_inverse(xp.T @ xp),
        yrw=pseudo_inverse(yp.T @ yp),
        k=k,
        tol=tol,
    )


def canonical_correlations(result):
    """Canonical correlations of a CCA run (the retained singular values)."""
    return result.d.copy()


def cca_coefficients(result):
    """Canonical coefficient matrices (per set of variables).

    Equal to W_X P and W_Y Q, recovered as fi diag(d)^-1 and fj diag(d)^-1.
    """
    inv_d = 1.0 / result.d
    return result.fi * inv_d[None, :], result.fj * inv_d[None, :]


def rrr_coefficients(result):
    """Reduced-rank regression coefficients, P diag(d)."""
    return result.p * result.d[None, :]


def plsca(cat_x, cat_y, k=0, tol=kernel.EPS, x_variable_names=None, y_variable_names=None):
    """Partial least squares correspondence analysis for two categorical
    tables sharing their rows.

    Both tables are disjunctively coded and CA-preprocessed independently;
    the deviation matrices go through gplssvd with reciprocal row/column
    probability constraints on all four slots.
    """
    tab_x = disjunctive_coding(cat_x, variable_names=x_variable_names)
    tab_y = disjunctive_coding(cat_y, variable_names=y_variable_names)
    if tab_x.indicator.shape[0] != tab_y.indicator.shape[0]:
        raise DimensionMismatchError("categorical tables must share rows")
    prof_x = ca_preprocess(tab_x.indicator)
    prof_y = ca_preprocess(tab_y.indicator)
    return gplssvd(
        prof_x.deviations,
        prof_y.deviations,
        xlw=1.0 / prof_x.row_prob,
        ylw=1.0 / prof_y.row_prob,
        xrw=1.0 / prof_x.col_prob,
        yrw=1.0 / prof_y.col_prob,
        k=k,
        tol=tol,
    )
