"""Distance-matrix clustering (medoid variant of k-means, DBSCAN),
silhouette and Gini validation, and grid-based Pareto hyper-parameter
selection.

"K-means" over arbitrary string distances has no defined centroid, so the
k-means configuration runs a PAM-style k-medoids on the precomputed matrix.
DBSCAN noise points become singleton clusters so that no data point (and
hence no coverage objective) is ever dropped downstream.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field

import numpy as np

logger = logging.getLogger(__name__)

_MAX_KMEDOID_ITER = 100


@dataclass(frozen=True)
class DistanceMatrix:
    values: np.ndarray

    def __post_init__(self):
        v = self.values
        if v.ndim != 2 or v.shape[0] != v.shape[1]:
            raise ValueError("distance matrix must be square")
        if not np.allclose(v, v.T):
            raise ValueError("distance matrix must be symmetric")
        if not np.allclose(np.diag(v), 0.0):
            raise ValueError("distance matrix must have a zero diagonal")
        if (v < 0).any():
            raise ValueError("distances must be non-negative")

    @property
    def n(self) -> int:
        return self.values.shape[0]


def _canonical_labels(labels) -> list[int]:
    """Relabel cluster ids contiguously from 0 in order of first occurrence."""
    mapping: dict[int, int] = {}
    out = []
    for lab in labels:
        if lab not in mapping:
            mapping[lab] = len(mapping)
        out.append(mapping[lab])
    return out


def kmedoids(dm: DistanceMatrix, k: int, seed: int = 0) -> list[int]:
    """PAM-style alternation: assign points to the nearest medoid, then move
    each medoid to the point minimizing its cluster's total distance."""
    n = dm.n
    if not 1 <= k <= n:
        raise ValueError(f"k must be in [1, {n}], got {k}")
    rng = random.Random(seed)
    medoids = sorted(rng.sample(range(n), k))
    v = dm.values
    assign = [0] * n
    for _ in range(_MAX_KMEDOID_ITER):
        # Medoids stay in their own cluster so none ever empties.
        for i in range(n):
            if i in medoids:
                assign[i] = medoids.index(i)
            else:
                dists = [v[i, m] for m in medoids]
                assign[i] = int(np.argmin(dists))
        new_medoids = []
        for c in range(k):
            members = [i for i in range(n) if assign[i] == c]
            totals = [v[np.ix_([m], members)].sum() for m in members]
            new_medoids.append(members[int(np.argmin(totals))])
        new_medoids = sorted(new_medoids)
        if new_medoids == medoids:
            break
        medoids = new_medoids
    return _canonical_labels(assign)


def kmedoids_objective(dm: DistanceMatrix, labels) -> float:
    """Sum of point-to-medoid distances for the best medoid of each cluster."""
    total = 0.0
    for c in set(labels):
        members = [i for i, lab in enumerate(labels) if lab == c]
        total += min(dm.values[np.ix_([m], members)].sum() for m in members)
    return total


def dbscan(dm: DistanceMatrix, eps: float, min_neighbors: int) -> list[int]:
    """Density clustering on a precomputed matrix. The eps-neighborhood
    excludes the point itself; noise points become singleton clusters."""
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    if min_neighbors < 1:
        raise ValueError(f"min_neighbors must be >= 1, got {min_neighbors}")
    n = dm.n
    v = dm.values
    neighborhoods = [
        [j for j in range(n) if j != i and v[i, j] <= eps] for i in range(n)
    ]
    core = [len(nb) >= min_neighbors for nb in neighborhoods]
    labels = [-1] * n
    cluster = 0
    for i in range(n):
        if labels[i] != -1 or not core[i]:
            continue
        labels[i] = cluster
        queue = list(neighborhoods[i])
        while queue:
            j = queue.pop(0)
            if labels[j] != -1:
                continue
            labels[j] = cluster
            if core[j]:
                queue.extend(neighborhoods[j])
        cluster += 1
    for i in range(n):
        if labels[i] == -1:
            labels[i] = cluster
            cluster += 1
    return _canonical_labels(labels)


def silhouette(dm: DistanceMatrix, labels) -> np.ndarray:
    """Per-point (b - a) / max(a, b); points in singleton clusters score 0."""
    n = dm.n
    if len(labels) != n:
        raise ValueError("one label per point required")
    v = dm.values
    clusters: dict[int, list[int]] = {}
    for i, lab in enumerate(labels):
        clusters.setdefault(lab, []).append(i)
    scores = np.zeros(n)
    if len(clusters) < 2:
        return scores
    for i in range(n):
        own = clusters[labels[i]]
        if len(own) == 1:
            continue
        a = sum(v[i, j] for j in own if j != i) / (len(own) - 1)
        b = min(
            v[i, members].mean()
            for lab, members in clusters.items()
            if lab != labels[i]
        )
        denom = max(a, b)
        scores[i] = 0.0 if denom == 0 else (b - a) / denom
    return scores


def gini(scores) -> float:
    """Dispersion of silhouette scores, shifted by +1 into [0, 2] so that
    negative scores cannot break the ratio."""
    x = np.asarray(scores, dtype=float) + 1.0
    n = len(x)
    if n == 0:
        raise ValueError("gini requires at least one score")
    mean = x.mean()
    if mean == 0:
        return 0.0
    diffs = np.abs(x[:, None] - x[None, :]).sum()
    return float(diffs / (2 * n * n * mean))


@dataclass(frozen=True)
class HyperParamGrid:
    algo: str  # "kmeans" or "dbscan"
    k_range: tuple[int, int] = (1, 70)
    eps_range: tuple[float, float] = (2.0, 10.0)
    eps_step: float | None = None  # default: 1.0 for integer matrices else 0.5
    min_neighbors_range: tuple[int, int] = (1, 5)

    def __post_init__(self):
        if self.algo not in ("kmeans", "dbscan"):
            raise ValueError(f"unknown clustering algorithm: {self.algo!r}")


@dataclass(frozen=True)
class HyperParamChoice:
    algo: str
    params: dict = field(hash=False)
    labels: list[int] = field(hash=False)
    silhouette_mean: float = 0.0
    gini: float = 0.0


def _grid_points(dm: DistanceMatrix, grid: HyperParamGrid):
    if grid.algo == "kmeans":
        lo, hi = grid.k_range
        hi = min(hi, dm.n)
        for k in range(max(1, lo), hi + 1):
            yield {"k": k}
    else:
        step = grid.eps_step
        if step is None:
            step = 1.0 if np.allclose(dm.values, np.round(dm.values)) else 0.5
        lo, hi = grid.eps_range
        eps = lo
        while eps <= hi + 1e-9:
            for mn in range(grid.min_neighbors_range[0], grid.min_neighbors_range[1] + 1):
                yield {"eps": round(eps, 9), "min_neighbors": mn}
            eps += step


def select_hyperparams(dm: DistanceMatrix, grid: HyperParamGrid, seed: int = 0) -> HyperParamChoice:
    """Evaluate every grid point, keep the non-dominated set for (silhouette
    up, Gini down), and return the front member with the highest silhouette.
    Ties break toward lower Gini, then grid order."""
    candidates: list[HyperParamChoice] = []
    for params in _grid_points(dm, grid):
        if grid.algo == "kmeans":
            labels = kmedoids(dm, params["k"], seed=seed)
        else:
            labels = dbscan(dm, params["eps"], params["min_neighbors"])
        scores = silhouette(dm, labels)
        candidates.append(HyperParamChoice(
            algo=grid.algo,
            params=params,
            labels=labels,
            silhouette_mean=float(scores.mean()),
            gini=gini(scores),
        ))
    if not candidates:
        raise ValueError("empty hyper-parameter grid")

    def dominated(c: HyperParamChoice) -> bool:
        return any(
            o.silhouette_mean >= c.silhouette_mean and o.gini <= c.gini
            and (o.silhouette_mean > c.silhouette_mean or o.gini < c.gini)
            for o in candidates
        )

    front = [c for c in candidates if not dominated(c)]
    best = max(front, key=lambda c: (c.silhouette_mean, -c.gini))
    return best
