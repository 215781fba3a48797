"""Small numeric helpers over vector collections.

Enough to sanity-check that documents with different grammatical
profiles land in separable regions of feature space; full classifier
experiments stay out of this package.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .engine import StyloVector


def to_matrix(vectors: Sequence[StyloVector]) -> np.ndarray:
    """Stack vectors into an (n_docs, n_metrics) float64 matrix."""
    if not vectors:
        raise ValueError("no vectors")
    schema = vectors[0].metric_ids
    for vec in vectors:
        if vec.metric_ids != schema:
            raise ValueError(f"mixed schemas: {vec.doc_id!r}")
    return np.array([vec.values for vec in vectors], dtype=np.float64)


def nearest_centroid_loo(matrix: np.ndarray, labels: Sequence[str]) -> float:
    """Leave-one-out accuracy of a nearest-centroid rule (Euclidean)."""
    if matrix.ndim != 2 or len(labels) != matrix.shape[0]:
        raise ValueError("matrix rows and labels must align")
    labels = list(labels)
    classes = sorted(set(labels))
    if len(classes) < 2:
        raise ValueError("need at least two classes")
    y = np.array([classes.index(label) for label in labels])
    sums = np.zeros((len(classes), matrix.shape[1]))
    counts = np.zeros(len(classes))
    for row, cls in zip(matrix, y):
        sums[cls] += row
        counts[cls] += 1
    if np.any(counts < 2):
        raise ValueError("every class needs at least two members for leave-one-out")
    hits = 0
    for i, (row, cls) in enumerate(zip(matrix, y)):
        centroids = sums.copy()
        sizes = counts.copy()
        centroids[cls] -= row
        sizes[cls] -= 1
        centroids /= sizes[:, None]
        dists = np.linalg.norm(centroids - row, axis=1)
        if int(np.argmin(dists)) == cls:
            hits += 1
    return hits / matrix.shape[0]
