"""k-means clustering with k-means++ seeding and Lloyd refinement."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class KMeansModel:
    centroids: np.ndarray
    inertia: float
    iterations_run: int

    def assign(self, points: np.ndarray) -> np.ndarray:
        """Nearest centroid per point (Euclidean); ties go to the lowest index."""
        return _assign(np.asarray(points, dtype=np.float64), self.centroids)[0]


def _assign(points: np.ndarray, centroids: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    sq = ((points[:, None, :] - centroids[None, :, :]) ** 2).sum(axis=2)
    labels = np.argmin(sq, axis=1)
    return labels, sq[np.arange(len(points)), labels]


def _plus_plus_seed(points: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n = len(points)
    centroids = np.empty((k, points.shape[1]), dtype=np.float64)
    centroids[0] = points[rng.integers(n)]
    min_sq = ((points - centroids[0]) ** 2).sum(axis=1)
    for i in range(1, k):
        total = min_sq.sum()
        if total > 0:
            probs = min_sq / total
            idx = rng.choice(n, p=probs)
        else:  # all remaining distances zero: duplicate points
            idx = rng.integers(n)
        centroids[i] = points[idx]
        min_sq = np.minimum(min_sq, ((points - centroids[i]) ** 2).sum(axis=1))
    return centroids


def kmeans_fit(
    points: np.ndarray,
    k: int,
    seed: int = 0,
    max_iter: int = 300,
    tol: float = 1e-6,
) -> KMeansModel:
    """Fit k centroids with D^2-sampled seeding and Lloyd iterations.

    Stops when the largest centroid shift drops below ``tol`` or after
    ``max_iter`` iterations.  Empty clusters are reseeded onto the point
    farthest from its current centroid.
    """
    points = np.asarray(points, dtype=np.float64)
    if points.ndim != 2:
        raise ValueError("points must be a 2-D array")
    n = len(points)
    if k < 2:
        raise ValueError("k must be >= 2")
    if n < k:
        raise ValueError(f"need at least k={k} points, got {n}")

    rng = np.random.default_rng(seed)
    centroids = _plus_plus_seed(points, k, rng)

    prev_inertia = np.inf
    iterations = 0
    for iterations in range(1, max_iter + 1):
        labels, sq = _assign(points, centroids)
        for j in range(k):
            if not np.any(labels == j):
                idx = int(np.argmax(sq))
                centroids[j] = points[idx]
                labels[idx] = j
                sq[idx] = 0.0
        inertia = float(sq.sum())
        # Lloyd never increases the objective; tolerate only float noise.
        assert inertia <= prev_inertia * (1 + 1e-12) + 1e-12, "inertia increased"
        prev_inertia = inertia

        new_centroids = centroids.copy()
        for j in range(k):
            members = points[labels == j]
            if len(members):
                new_centroids[j] = members.mean(axis=0)
        shift = float(np.sqrt(((new_centroids - centroids) ** 2).sum(axis=1)).max())
        centroids = new_centroids
        if shift < tol:
            break

    labels, sq = _assign(points, centroids)
    return KMeansModel(centroids=centroids, inertia=float(sq.sum()), iterations_run=iterations)
