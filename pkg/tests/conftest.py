import numpy as np
import pytest


def align_signs(a, b):
    """Flip columns of `a` to match the signs of `b` (for comparisons that
    are only defined up to per-column reflection)."""
    a = np.asarray(a, dtype=float).copy()
    for j in range(a.shape[1]):
        if np.dot(a[:, j], b[:, j]) < 0:
            a[:, j] = -a[:, j]
    return a


def random_spd(rng, n, ridge=0.5):
    """Random symmetric positive-definite matrix."""
    a = rng.normal(size=(n, n))
    return a.T @ a + ridge * np.eye(n)


def chi_square_over_n(counts):
    """chi-square statistic of a contingency table divided by the grand
    total, by direct summation over cells."""
    counts = np.asarray(counts, dtype=float)
    total = counts.sum()
    acc = 0.0
    for i in range(counts.shape[0]):
        for j in range(counts.shape[1]):
            expected = counts[i].sum() * counts[:, j].sum() / total
            acc += (counts[i, j] - expected) ** 2 / expected
    return acc / total


def categorical_table(rng, n_rows, level_counts):
    """Random categorical table where every level of every variable appears
    at least once (the first rows cycle through all levels)."""
    table = []
    for i in range(n_rows):
        row = []
        for n_lev in level_counts:
            if i < n_lev:
                row.append(f"L{i + 1}")
            else:
                row.append(f"L{rng.integers(1, n_lev + 1)}")
        table.append(row)
    return table


def mca_fixture(seed=20240817, n_rows=60):
    """Four categorical variables with 4+4+4+3 = 15 indicator columns."""
    rng = np.random.default_rng(seed)
    return categorical_table(rng, n_rows, (4, 4, 4, 3))


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
