"""Classical multidimensional scaling on arbitrary finite metric spaces.

This is the brute-force pipeline every character-predicted spectrum is
checked against: square the distances entrywise, double-center, take the
full eigendecomposition, and read embeddings off the eigenpairs. Both the
Euclidean (positive eigenvalues only) and the pseudo-Euclidean embedding
(positive block plus negative block, squared distances subtract) are
provided.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

ZERO_EIGENVALUE_REL_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class MdsKernel:
    """A symmetric kernel matrix; ``centered`` records whether the
    double-centering projection has been applied."""

    matrix: np.ndarray
    centered: bool

    @property
    def size(self) -> int:
        return self.matrix.shape[0]


def _as_matrix(distance_matrix) -> np.ndarray:
    values = getattr(distance_matrix, "values", distance_matrix)
    d = np.asarray(values, dtype=float)
    if d.ndim != 2 or d.shape[0] != d.shape[1]:
        raise ValueError("distance matrix must be square")
    return d


def double_center(distance_matrix) -> MdsKernel:
    """-(1/2) H (D o D) H with H the centering projection; the entrywise
    square is applied before centering."""
    d = _as_matrix(distance_matrix)
    sq = d * d
    row_mean = sq.mean(axis=1, keepdims=True)
    col_mean = sq.mean(axis=0, keepdims=True)
    grand_mean = sq.mean()
    return MdsKernel(matrix=-0.5 * (sq - row_mean - col_mean + grand_mean), centered=True)


def noncentered_kernel(distance_matrix) -> MdsKernel:
    """-(1/2) D o D, no centering; exact in floating point for integer
    distances."""
    d = _as_matrix(distance_matrix)
    return MdsKernel(matrix=-0.5 * d * d, centered=False)


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """Full eigensystem of a symmetric kernel, eigenvalues descending.

    ``zero_threshold`` is the magnitude below which an eigenvalue is
    treated as zero (relative to the spectral radius).
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # columns aligned with eigenvalues
    zero_threshold: float

    @property
    def size(self) -> int:
        return self.eigenvalues.shape[0]

    def positive_indices(self) -> np.ndarray:
        return np.where(self.eigenvalues > self.zero_threshold)[0]

    def negative_indices(self) -> np.ndarray:
        return np.where(self.eigenvalues < -self.zero_threshold)[0]

    def nonzero_count(self) -> int:
        return int(np.sum(np.abs(self.eigenvalues) > self.zero_threshold))


def eigendecompose(kernel, symmetry_tol: float = 1e-8) -> SpectralDecomposition:
    """Eigendecompose a symmetric kernel.

    Eigenvalues come back in descending order. Each eigenvector is sign-fixed
    so its largest-magnitude entry (lowest index on ties) is positive.
    """
    m = kernel.matrix if isinstance(kernel, MdsKernel) else np.asarray(kernel, dtype=float)
    scale = float(np.max(np.abs(m))) if m.size else 0.0
    if scale and float(np.max(np.abs(m - m.T))) > symmetry_tol * scale:
        raise ValueError("kernel is not symmetric within tolerance")
    eigenvalues, eigenvectors = np.linalg.eigh((m + m.T) / 2.0)
    order = np.argsort(eigenvalues)[::-1]
    eigenvalues = eigenvalues[order]
    eigenvectors = eigenvectors[:, order]
    for col in range(eigenvectors.shape[1]):
        v = eigenvectors[:, col]
        pivot = int(np.argmax(np.abs(v)))  # argmax takes the lowest index on ties
        if v[pivot] < 0:
            eigenvectors[:, col] = -v
    spectral_radius = float(np.max(np.abs(eigenvalues))) if eigenvalues.size else 0.0
    return SpectralDecomposition(
        eigenvalues=eigenvalues,
        eigenvectors=eigenvectors,
        zero_threshold=ZERO_EIGENVALUE_REL_TOL * spectral_radius,
    )


@dataclass(frozen=True, eq=False)
class EmbeddingResult:
    """Coordinates with signature (p, q): the first p columns carry
    positive eigenvalues, the last q negative ones, each block ordered by
    descending |eigenvalue|."""

    coordinates: np.ndarray  # (n, p + q)
    eigenvalues: Tuple[float, ...]  # per coordinate column
    signature: Tuple[int, int]
    truncated: bool = False
    row_labels: Optional[Tuple[str, ...]] = None
    weights: Optional[Tuple[int, ...]] = None

    @property
    def k(self) -> int:
        return self.coordinates.shape[1]


def classical_embedding(dec: SpectralDecomposition, k: int) -> EmbeddingResult:
    """Euclidean embedding from the top-k positive eigenpairs.

    If fewer than k positive eigenvalues exist, k is truncated to the
    available count and the result is flagged ``truncated``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    pos = dec.positive_indices()
    kept = pos[: min(k, len(pos))]
    coords = dec.eigenvectors[:, kept] * np.sqrt(dec.eigenvalues[kept])
    return EmbeddingResult(
        coordinates=coords,
        eigenvalues=tuple(float(v) for v in dec.eigenvalues[kept]),
        signature=(len(kept), 0),
        truncated=len(kept) < k,
    )


def pseudo_embedding(dec: SpectralDecomposition, k: int) -> EmbeddingResult:
    """Pseudo-Euclidean embedding on the k largest-|eigenvalue| nonzero
    directions, positive block first."""
    nonzero = np.where(np.abs(dec.eigenvalues) > dec.zero_threshold)[0]
    if k > len(nonzero):
        raise ValueError(f"k={k} exceeds the {len(nonzero)} nonzero eigenvalues")
    by_magnitude = nonzero[np.argsort(-np.abs(dec.eigenvalues[nonzero]), kind="stable")]
    kept = by_magnitude[:k]
    kept_vals = dec.eigenvalues[kept]
    pos_kept = kept[kept_vals > 0]
    neg_kept = kept[kept_vals < 0]
    ordered = np.concatenate([pos_kept, neg_kept]).astype(int)
    coords = dec.eigenvectors[:, ordered] * np.sqrt(np.abs(dec.eigenvalues[ordered]))
    return EmbeddingResult(
        coordinates=coords,
        eigenvalues=tuple(float(v) for v in dec.eigenvalues[ordered]),
        signature=(len(pos_kept), len(neg_kept)),
    )


def full_rank_pseudo_embedding(dec: SpectralDecomposition) -> EmbeddingResult:
    return pseudo_embedding(dec, dec.nonzero_count())


def pseudo_distance_sq(emb: EmbeddingResult, i: int, j: int) -> float:
    """Squared pseudo-distance between rows i and j: positive-block squared
    distance minus negative-block squared distance."""
    p, _ = emb.signature
    diff = emb.coordinates[i] - emb.coordinates[j]
    return float(np.sum(diff[:p] ** 2) - np.sum(diff[p:] ** 2))


def pseudo_distance_sq_matrix(emb: EmbeddingResult) -> np.ndarray:
    p, _ = emb.signature
    signs = np.ones(emb.k)
    signs[p:] = -1.0
    x = emb.coordinates
    sq_norms = (x * x * signs).sum(axis=1)
    gram = (x * signs) @ x.T
    return sq_norms[:, None] + sq_norms[None, :] - 2.0 * gram


def strain(dec: SpectralDecomposition, k: int) -> float:
    """Sum of squared discarded eigenvalues when the top k (descending
    eigenvalue order) are retained."""
    if not 0 <= k <= dec.size:
        raise ValueError("k must be between 0 and n")
    tail = dec.eigenvalues[k:]
    return float(np.sum(tail * tail))


def spectrum_to_json(dec: SpectralDecomposition) -> str:
    doc = {
        "eigenvalues": [float(v) for v in dec.eigenvalues],
        "zero_threshold": dec.zero_threshold,
    }
    return json.dumps(doc, indent=2) + "\n"


def embedding_to_csv(emb: EmbeddingResult) -> str:
    """CSV form: id, label, weight, then one column per coordinate, the
    header marking each column's eigenvalue sign (x1:+, x2:-, ...)."""
    import csv
    import io

    n, k = emb.coordinates.shape
    p, _ = emb.signature
    header = ["id", "label", "weight"]
    for col in range(k):
        header.append(f"x{col + 1}:{'+' if col < p else '-'}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    labels = emb.row_labels if emb.row_labels is not None else tuple(str(i) for i in range(n))
    weights = emb.weights if emb.weights is not None else (1,) * n
    for i in range(n):
        row = [i, labels[i], weights[i]]
        row.extend(repr(float(v)) for v in emb.coordinates[i])
        writer.writerow(row)
    return buf.getvalue()
