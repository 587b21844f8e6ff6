"""Hamming distance on permutations is not Euclidean, and that is fine.

The centered MDS kernel of S_4 with Hamming distance has negative
eigenvalues, so no point configuration in ordinary Euclidean space
realizes these distances. Keeping the negative directions and measuring
squared distance as (positive block) - (negative block) reconstructs the
metric exactly at full rank. Strain measures what truncation discards.
"""

import numpy as np

from groupmds import (
    build_distance_matrix,
    classical_embedding,
    double_center,
    eigendecompose,
    full_rank_pseudo_embedding,
    hamming_metric,
    strain,
    symmetric,
)
from groupmds.dense import pseudo_distance_sq_matrix

s4 = symmetric(4)
dm = build_distance_matrix(s4, hamming_metric(s4))
dec = eigendecompose(double_center(dm))

negatives = dec.eigenvalues[dec.eigenvalues < -dec.zero_threshold]
print(f"distinct negative eigenvalues: {sorted({float(v) for v in np.round(negatives, 9)})}")
print("so the 24 permutations of S_4 admit no exact Euclidean configuration.")

emb = full_rank_pseudo_embedding(dec)
p, q = emb.signature
print(f"\nfull-rank pseudo-Euclidean embedding signature: ({p}, {q})")

recon = pseudo_distance_sq_matrix(emb)
err = np.max(np.abs(recon - dm.values.astype(float) ** 2))
print(f"max |pseudo-d^2 - d^2| over all pairs: {err:.3e}")

print("\nEuclidean-only embedding (positive eigenvalues) is an approximation:")
for k in (3, 9):
    cls = classical_embedding(dec, k)
    x = cls.coordinates
    approx = np.sqrt(np.maximum(
        (x ** 2).sum(1)[:, None] + (x ** 2).sum(1)[None, :] - 2 * x @ x.T, 0))
    worst = np.max(np.abs(approx - dm.values))
    print(f"  k={k}: worst distance error {worst:.3f}")

print("\nstrain(k) = sum of squared discarded eigenvalues:")
for k in (0, 9, 18, 24):
    print(f"  k={k:>2}: strain = {strain(dec, k):.1f}")
