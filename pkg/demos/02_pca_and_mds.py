"""PCA through four equivalent routes, plus classical and weighted MDS.

Run with: python3 demos/02_pca_and_mds.py
"""

import numpy as np

from gmdecomp import mds, mds_score_sets, pca, weighted_mds

rng = np.random.default_rng(7)
data = rng.normal(size=(50, 6)) @ np.diag([3.0, 2.0, 1.5, 1.0, 0.5, 0.25])

print("=== PCA: four routes, one spectrum ===")
runs = {route: pca(data, route=route) for route in
        ("eigen_cov", "eigen_cor", "triplet_scaled", "triplet_metric")}
for route, res in runs.items():
    print(f"{route:16s} eigenvalues: {np.round(res.l_full, 3)}")
print("correlation-based routes share scores fj?",
      np.allclose(runs["eigen_cor"].fj, runs["triplet_scaled"].fj))

print("\n=== classical MDS recovers a configuration from distances ===")
pts = rng.normal(size=(12, 3))
dist = np.sqrt(((pts[:, None, :] - pts[None, :, :]) ** 2).sum(-1))
res = mds(dist)
print("retained dimensions:", res.n_retained)
coords = res.fj
recovered = np.sqrt(((coords[:, None, :] - coords[None, :, :]) ** 2).sum(-1))
print("distances reproduced?", np.allclose(recovered, dist))

print("\n=== weighted MDS: per-observation masses, tolerance disabled ===")
ages = rng.uniform(20.0, 70.0, size=12)
wres = weighted_mds(dist, 1.0 / ages)
print("eigenvalues (note the negative tail):", np.round(wres.l_full, 3))
sets = mds_score_sets(wres)
print("score conventions available:", sorted(sets))

uniform = weighted_mds(dist, np.full(12, 1.0 / 12))
gen = mds_score_sets(uniform)["generalized"][:, : res.n_retained]
match = np.allclose(np.abs(gen), np.abs(res.fj))
print("uniform masses reproduce classical coordinates (up to sign)?", match)
