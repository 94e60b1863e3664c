"""Two-table methods: PLS, reduced rank regression, CCA, and PLS-CA.

Run with: python3 demos/04_two_table_methods.py
"""

import numpy as np

from gmdecomp import (
    canonical_correlations,
    cca,
    cca_coefficients,
    pls,
    plsca,
    rrr,
    rrr_coefficients,
)

rng = np.random.default_rng(7)
n = 60
latent = rng.normal(size=(n, 2))
x = latent @ rng.normal(size=(2, 5)) + 0.5 * rng.normal(size=(n, 5))
y = latent @ rng.normal(size=(2, 3)) + 0.5 * rng.normal(size=(n, 3))

print("=== PLS: covariance-maximizing latent variables ===")
res = pls(x, y)
print("singular values:", np.round(res.d, 4))
print("diag(lx' ly) = d?", np.allclose(np.diag(res.lx.T @ res.ly), res.d))

print("\n=== RRR: predicting y from x with a rank constraint ===")
res = rrr(x, y)
print("singular values:", np.round(res.d, 4))
print("coefficient matrix shape (P D):", rrr_coefficients(res).shape)

print("\n=== CCA: correlation-maximizing latent variables ===")
res = cca(x, y)
rho = canonical_correlations(res)
print("canonical correlations:", np.round(rho, 4))
ax, ay = cca_coefficients(res)
print("coefficients recover latent scores?",
      np.allclose((x - x.mean(0)) / x.std(0, ddof=1) @ ax, res.lx))

print("\n=== PLS-CA: the PLS idea for two categorical tables ===")
group = rng.choice(["g1", "g2", "g3"], size=n)
cat_x = [[g, rng.choice(["u", "v"])] for g in group]
cat_y = [[{"g1": "p", "g2": "q", "g3": "r"}[g]
          if rng.random() < 0.8 else rng.choice(["p", "q", "r"]),
          rng.choice(["s", "t"])] for g in group]
res = plsca(cat_x, cat_y)
print("singular values (association strength):", np.round(res.d, 4))
