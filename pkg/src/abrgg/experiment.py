"""Monte Carlo degree experiments: build the k-connected bipartite graph,
count how many users each station serves, aggregate over replicates, and
compare against the analytic laws.

Each replicate draws users as a Poisson process on the domain and connects
every user to its k nearest (or shadowed-nearest) stations; a station's
degree is the number of users it serves. Zero-degree stations are counted,
and per replicate the degrees sum to exactly k times the user count.

Replicate r derives its streams from the master seed with counter-based keys
(stations, users, shadowing), so results are reproducible and independent of
thread count; pooling is plain addition, so it is schedule-independent too.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from . import analytic
from .errors import DataError
from .geometry import (
    CLIPPED,
    TORUS,
    Domain,
    GridSpec,
    PointSet,
    gen_hex_grid,
    gen_line_grid,
    gen_poisson,
    spawn_rng,
)
from .knn import NnIndex, ShadowConfig, all_distances, build_index, k_nearest

POISSON_1D = "poisson1d"
POISSON_2D = "poisson2d"
LINE_GRID = "line_grid"
HEX_GRID = "hex_grid"
FILE_LAYOUT = "file"

LAYOUTS = (POISSON_1D, POISSON_2D, LINE_GRID, HEX_GRID, FILE_LAYOUT)

_STATION_STREAM = 0
_USER_STREAM = 1
_SHADOW_STREAM = 2

_SHADOW_CHUNK = 4096


@dataclass(frozen=True)
class ExperimentConfig:
    """Full description of one degree experiment.

    ``lambda_a`` is the user intensity (per m in 1D, per m^2 in 2D). Station
    layout parameters: ``lambda_b`` for Poisson layouts, ``spacing`` for the
    1D lattice, ``n_points`` for the 2D lattice, ``b_points`` for ingested
    station sets (the domain then comes from the point set). Poisson station
    layouts are redrawn every replicate; lattices and files are fixed.
    """

    layout: str
    lambda_a: float
    k_values: tuple[int, ...]
    replicates: int = 1
    seed: int = 0
    extent: tuple[float, ...] | None = None
    boundary: str = TORUS
    lambda_b: float | None = None
    spacing: float | None = None
    n_points: int | None = None
    shadow_sigma: float = 0.0
    b_points: PointSet | None = None

    def __post_init__(self):
        if self.layout not in LAYOUTS:
            raise DataError(f"layout must be one of {LAYOUTS}, got {self.layout!r}")
        if self.lambda_a <= 0:
            raise DataError("lambda_a must be positive")
        ks = tuple(int(k) for k in self.k_values)
        if not ks or any(k < 1 for k in ks):
            raise DataError("k_values must be a non-empty list of integers >= 1")
        object.__setattr__(self, "k_values", ks)
        if self.replicates < 1:
            raise DataError("replicates must be >= 1")
        if self.shadow_sigma < 0:
            raise DataError("shadow_sigma must be >= 0")
        if self.layout == FILE_LAYOUT:
            if self.b_points is None:
                raise DataError("file layout needs b_points")
        elif self.extent is None:
            raise DataError(f"layout {self.layout} needs an extent")
        needs = {POISSON_1D: "lambda_b", POISSON_2D: "lambda_b",
                 LINE_GRID: "spacing", HEX_GRID: "n_points"}
        if self.layout in needs and getattr(self, needs[self.layout]) is None:
            raise DataError(f"layout {self.layout} needs {needs[self.layout]}")

    @property
    def domain(self) -> Domain:
        if self.layout == FILE_LAYOUT:
            return self.b_points.domain
        return Domain(self.extent, self.boundary)

    def to_metadata(self) -> dict:
        meta = {
            "layout": self.layout,
            "lambda_a": self.lambda_a,
            "k_values": list(self.k_values),
            "replicates": self.replicates,
            "seed": self.seed,
            "boundary": self.domain.boundary,
            "extent": list(self.domain.extent),
            "shadow_sigma": self.shadow_sigma,
        }
        for name in ("lambda_b", "spacing", "n_points"):
            if getattr(self, name) is not None:
                meta[name] = getattr(self, name)
        if self.b_points is not None:
            meta["station_count"] = self.b_points.n
        return meta


@dataclass
class DegreeHistogram:
    """Degree counts over stations: ``counts[d]`` stations observed with
    degree d. ``n_edges`` tracks the exact edge total k * |users|."""

    counts: np.ndarray
    k: int
    total_points: int
    n_edges: int
    replicates: int = 1

    @classmethod
    def from_degrees(cls, degrees: np.ndarray, k: int, n_users: int) -> "DegreeHistogram":
        counts = np.bincount(degrees)
        return cls(counts=counts, k=k, total_points=int(degrees.size),
                   n_edges=k * int(n_users))

    def merge(self, other: "DegreeHistogram") -> "DegreeHistogram":
        if other.k != self.k:
            raise DataError("cannot merge histograms of different k")
        size = max(len(self.counts), len(other.counts))
        counts = np.zeros(size, dtype=np.int64)
        counts[: len(self.counts)] += self.counts
        counts[: len(other.counts)] += other.counts
        return DegreeHistogram(
            counts=counts,
            k=self.k,
            total_points=self.total_points + other.total_points,
            n_edges=self.n_edges + other.n_edges,
            replicates=self.replicates + other.replicates,
        )

    @property
    def probabilities(self) -> np.ndarray:
        return self.counts / self.counts.sum()

    def moments(self) -> tuple[float, float]:
        degrees = np.arange(len(self.counts), dtype=float)
        p = self.probabilities
        mean = float(degrees @ p)
        var = float((degrees - mean) ** 2 @ p)
        return mean, var

    def cv(self) -> float:
        mean, var = self.moments()
        if mean <= 0:
            return math.nan
        return math.sqrt(var) / mean


def _station_points(config: ExperimentConfig, replicate: int) -> PointSet:
    domain = config.domain
    if config.layout == FILE_LAYOUT:
        return config.b_points
    if config.layout in (POISSON_1D, POISSON_2D):
        want = 1 if config.layout == POISSON_1D else 2
        if domain.dimension != want:
            raise DataError(f"layout {config.layout} needs a {want}D extent")
        rng = spawn_rng(config.seed, _STATION_STREAM, replicate)
        return gen_poisson(domain, config.lambda_b, rng)
    if config.layout == LINE_GRID:
        return gen_line_grid(domain, config.spacing)
    return gen_hex_grid(domain, GridSpec(target_n=config.n_points))


def _shadowed_degree_counts(
    b_points: PointSet,
    users: np.ndarray,
    k_values: tuple[int, ...],
    sigma: float,
    rng: np.random.Generator,
) -> dict[int, np.ndarray]:
    """Per-station degree arrays for every k, under shadowed ranking.

    One shadowing realization serves every k: each user's stations are
    ranked once by d/S and prefixes of the ranking give the k-connected
    graphs. Users are processed in chunks to bound the m x n draw matrix.
    """
    n = b_points.n
    k_max = max(k_values)
    shadow = ShadowConfig(sigma)
    degrees = {k: np.zeros(n, dtype=np.int64) for k in k_values}
    for lo in range(0, len(users), _SHADOW_CHUNK):
        chunk = users[lo : lo + _SHADOW_CHUNK]
        eff = all_distances(b_points, chunk)
        eff /= shadow.draw(rng, eff.shape)
        if k_max < n:
            part = np.argpartition(eff, k_max - 1, axis=1)[:, :k_max]
            part_eff = np.take_along_axis(eff, part, axis=1)
            order = np.lexsort((part, part_eff), axis=-1)
            ranked = np.take_along_axis(part, order, axis=-1)
        else:
            order = np.lexsort((np.broadcast_to(np.arange(n), eff.shape), eff), axis=-1)
            ranked = order[:, :k_max]
        for k in k_values:
            degrees[k] += np.bincount(ranked[:, :k].ravel(), minlength=n)
    return degrees


def degrees_one_replicate(
    b_points: PointSet,
    config: ExperimentConfig,
    replicate: int = 0,
    *,
    index: NnIndex | None = None,
    workers: int = 1,
) -> dict[int, DegreeHistogram]:
    """One replicate: draw users, connect each to its k nearest stations,
    histogram the station degrees. Returns one histogram per configured k."""
    k_max = max(config.k_values)
    if b_points.n < k_max:
        raise DataError(f"need at least k={k_max} stations, got {b_points.n}")
    domain = b_points.domain
    user_rng = spawn_rng(config.seed, _USER_STREAM, replicate)
    n_users = int(user_rng.poisson(config.lambda_a * domain.total_measure))
    users = user_rng.uniform(0.0, domain.extent_array(), size=(n_users, domain.dimension))

    if n_users == 0:
        zero = np.zeros(b_points.n, dtype=np.int64)
        return {k: DegreeHistogram.from_degrees(zero, k, 0) for k in config.k_values}

    if config.shadow_sigma > 0.0:
        shadow_rng = spawn_rng(config.seed, _SHADOW_STREAM, replicate)
        degs = _shadowed_degree_counts(
            b_points, users, config.k_values, config.shadow_sigma, shadow_rng
        )
    else:
        if index is None:
            index = build_index(b_points)
        ids, _ = k_nearest(index, users, k_max, workers=workers)
        degs = {
            k: np.bincount(ids[:, :k].ravel(), minlength=b_points.n)
            for k in config.k_values
        }
    return {
        k: DegreeHistogram.from_degrees(degs[k], k, n_users) for k in config.k_values
    }


@dataclass
class KSummary:
    """Pooled histogram and summary statistics for one connectivity level.

    Standard errors are delete-one jackknife over replicates (nan for a
    single replicate)."""

    k: int
    histogram: DegreeHistogram
    mean: float
    variance: float
    cv: float
    mean_se: float
    cv_se: float


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    per_k: dict[int, KSummary]
    replicate_histograms: dict[int, list[DegreeHistogram]]


def _jackknife_se(values: np.ndarray) -> float:
    r = len(values)
    if r < 2:
        return math.nan
    return math.sqrt((r - 1) / r * np.sum((values - values.mean()) ** 2))


def _summarize(k: int, parts: list[DegreeHistogram]) -> KSummary:
    pooled = parts[0]
    for p in parts[1:]:
        pooled = pooled.merge(p)
    mean, var = pooled.moments()

    r = len(parts)
    if r >= 2:
        loo_mean = np.empty(r)
        loo_cv = np.empty(r)
        size = len(pooled.counts)
        degrees = np.arange(size, dtype=float)
        for i, part in enumerate(parts):
            counts = pooled.counts.astype(float).copy()
            counts[: len(part.counts)] -= part.counts
            total = counts.sum()
            m = degrees @ counts / total
            v = (degrees - m) ** 2 @ counts / total
            loo_mean[i] = m
            loo_cv[i] = math.sqrt(v) / m if m > 0 else math.nan
        mean_se = _jackknife_se(loo_mean)
        cv_se = _jackknife_se(loo_cv)
    else:
        mean_se = cv_se = math.nan
    return KSummary(
        k=k, histogram=pooled, mean=mean, variance=var, cv=pooled.cv(),
        mean_se=mean_se, cv_se=cv_se,
    )


def run_experiment(config: ExperimentConfig, *, workers: int = 1) -> ExperimentResult:
    """Run all replicates and pool per-k histograms with jackknife errors.

    Deterministic for a fixed master seed; ``workers`` only parallelizes
    neighbor queries and cannot change any count.
    """
    fixed_layout = config.layout not in (POISSON_1D, POISSON_2D)
    b_points = _station_points(config, 0) if fixed_layout else None
    index = build_index(b_points) if (fixed_layout and config.shadow_sigma == 0.0) else None

    parts: dict[int, list[DegreeHistogram]] = {k: [] for k in config.k_values}
    for r in range(config.replicates):
        pts = b_points if fixed_layout else _station_points(config, r)
        hists = degrees_one_replicate(
            pts, config, r, index=index if fixed_layout else None, workers=workers
        )
        for k, h in hists.items():
            parts[k].append(h)

    per_k = {k: _summarize(k, parts[k]) for k in config.k_values}
    return ExperimentResult(config=config, per_k=per_k, replicate_histograms=parts)


@dataclass
class ComparisonReport:
    """Divergences between an empirical histogram and an analytic law."""

    tv_distance: float
    ks_distance: float
    empirical: analytic.SummaryStats
    reference: analytic.SummaryStats

    def rows(self) -> list[tuple[str, float, float]]:
        return [
            ("mean", self.empirical.mean, self.reference.mean),
            ("variance", self.empirical.variance, self.reference.variance),
            ("cv", self.empirical.cv, self.reference.cv),
        ]


def compare(histogram: DegreeHistogram, spec: analytic.DistSpec) -> ComparisonReport:
    """Total-variation and Kolmogorov-Smirnov distance of a pooled degree
    histogram to an analytic degree law, plus a moment table."""
    if histogram.counts.sum() <= 0:
        raise DataError("histogram is empty")
    hi = max(len(histogram.counts) - 1, analytic.support_bound(spec))
    ns = np.arange(hi + 1)
    ana = analytic.degree_pmf(ns, spec)
    emp = np.zeros(hi + 1)
    emp[: len(histogram.counts)] = histogram.probabilities
    tv = 0.5 * float(np.abs(emp - ana).sum()) + 0.5 * max(0.0, 1.0 - float(ana.sum()))
    ks = float(np.max(np.abs(np.cumsum(emp) - np.cumsum(ana))))
    mean, var = histogram.moments()
    emp_stats = analytic.SummaryStats(mean, var, histogram.cv())
    return ComparisonReport(
        tv_distance=tv,
        ks_distance=ks,
        empirical=emp_stats,
        reference=analytic.coefficient_of_variation(spec),
    )
