"""Exact ordered k-nearest-neighbor queries, plus shadowed (perturbed-
distance) ranking.

The index is a kd-tree, periodic on torus domains, and its answers are
contractually identical to a brute-force sort by (distance, point id): ties
are broken by ascending id so grid layouts query deterministically.

Shadowed queries divide each geometric distance by an independent log-normal
draw of mean 1 per (point, query) pair and rank by the result; they evaluate
all candidates because unbounded perturbations defeat metric pruning.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from .errors import DataError
from .geometry import TORUS, Domain, PointSet, as_coords


@dataclass(frozen=True)
class ShadowConfig:
    """Log-normal shadowing with E[S] = 1: the underlying normal has location
    -sigma^2/2 and scale sigma. sigma = 0 reduces to the geometric ranking."""

    sigma: float
    seed: int | None = None

    def __post_init__(self):
        if self.sigma < 0:
            raise DataError("sigma must be >= 0")

    def draw(self, rng: np.random.Generator, size) -> np.ndarray:
        if self.sigma == 0.0:
            return np.ones(size)
        return rng.lognormal(mean=-0.5 * self.sigma**2, sigma=self.sigma, size=size)


@dataclass(frozen=True)
class NnIndex:
    points: PointSet
    tree: cKDTree

    @property
    def n(self) -> int:
        return self.points.n


def build_index(points: PointSet) -> NnIndex:
    """Index a point set for repeated nearest-neighbor queries."""
    boxsize = points.domain.extent if points.domain.boundary == TORUS else None
    return NnIndex(points, cKDTree(points.coords, boxsize=boxsize))


def _prepare_queries(index: NnIndex, query) -> tuple[np.ndarray, bool]:
    domain = index.points.domain
    q = as_coords(query, domain.dimension)
    single = np.asarray(query, dtype=float).ndim < 2 and q.shape[0] == 1
    if domain.boundary == TORUS:
        ext = domain.extent_array()
        q = np.mod(q, ext)
        q[q >= ext] = 0.0
    return q, single


def _tie_sorted(ids: np.ndarray, dists: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    order = np.lexsort((ids, dists), axis=-1)
    return np.take_along_axis(ids, order, axis=-1), np.take_along_axis(dists, order, axis=-1)


def k_nearest(index: NnIndex, query, k: int, *, workers: int = 1):
    """Ordered ids and distances of the k nearest points to each query.

    ``query`` is one point or an (m, dim) batch; results have a matching
    leading shape. Distances are non-decreasing and exact.
    """
    if not 1 <= k <= index.n:
        raise DataError(f"k must be in [1, {index.n}], got {k}")
    q, single = _prepare_queries(index, query)
    dists, ids = index.tree.query(q, k=k, workers=workers)
    if k == 1:
        dists = dists[:, None]
        ids = ids[:, None]
    ids, dists = _tie_sorted(ids.astype(np.int64), dists)
    if single:
        return ids[0], dists[0]
    return ids, dists


def all_distances(points: PointSet, query) -> np.ndarray:
    """(m, n) matrix of domain distances from each query to every point."""
    domain = points.domain
    q = as_coords(query, domain.dimension)
    delta = np.abs(q[:, None, :] - points.coords[None, :, :])
    if domain.boundary == TORUS:
        ext = domain.extent_array()
        delta = np.minimum(delta, ext - delta)
    return np.sqrt(np.einsum("mnd,mnd->mn", delta, delta))


def k_nearest_shadowed(
    index: NnIndex, query, k: int, shadow: ShadowConfig, rng: np.random.Generator
):
    """Ordered ids and effective distances d/S under log-normal shadowing.

    Each (point, query) pair gets an independent mean-1 draw S from ``rng``;
    the caller owns the stream, so parallel users never share state. With
    sigma = 0 the ranking (ids) equals :func:`k_nearest`.
    """
    if not 1 <= k <= index.n:
        raise DataError(f"k must be in [1, {index.n}], got {k}")
    q, single = _prepare_queries(index, query)
    eff = all_distances(index.points, q)
    eff /= shadow.draw(rng, eff.shape)
    m, n = eff.shape
    if k < n:
        part = np.argpartition(eff, k - 1, axis=1)[:, :k]
    else:
        part = np.broadcast_to(np.arange(n), (m, n)).copy()
    part_eff = np.take_along_axis(eff, part, axis=1)
    ids, eff_k = _tie_sorted(part, part_eff)
    if single:
        return ids[0], eff_k[0]
    return ids, eff_k
