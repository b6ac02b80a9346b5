"""One-parameter gamma fit of normalized cumulative-area samples, and the
sampling pipeline that regenerates the shipped shape table.

The fit minimizes a chi-square goodness-of-fit statistic over the gamma
shape a, with the rate constrained to a/k so the mean is exactly k. Bin
edges are sample quantiles; when the samples are lattice-valued (multiples
of the sampling-cell measure) the edges are snapped to the lattice so bins
never split an atom, which keeps the statistic meaningful. Bins are merged
until each expects at least 5 counts. The minimizer is golden-section search
on log a inside the bracket found by a coarse grid scan.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammainc

from .areas import UNIT_MEAN, area_samples, estimate_areas_2d
from .errors import DataError, NumericError
from .geometry import Domain, gen_uniform, spawn_rng

LOG_SHAPE_LO = math.log(0.5)
LOG_SHAPE_HI = math.log(1e4)
_GRID_POINTS = 41
_MIN_MERGED_BINS = 6
_MIN_EXPECTED = 5.0
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class FitResult:
    """Fitted shape for one connectivity level, with the binning evidence."""

    k: int
    shape: float
    chi2: float
    sample_size: int
    bin_count: int
    bin_edges: np.ndarray
    observed: np.ndarray
    expected: np.ndarray
    lattice_width: float | None = None
    metadata: dict = field(default_factory=dict)

    def to_json(self) -> str:
        payload = {
            "k": self.k,
            "a_k": self.shape,
            "chi2": self.chi2,
            "sample_size": self.sample_size,
            "bin_count": self.bin_count,
            "merged_bins": int(len(self.observed)),
            "lattice_width": self.lattice_width,
            "metadata": self.metadata,
        }
        return json.dumps(payload, indent=2, sort_keys=True)


def _quantile_edges(samples: np.ndarray, bin_count: int, lattice_width: float | None):
    qs = np.linspace(0.0, 1.0, bin_count + 1)[1:-1]
    edges = np.quantile(samples, qs)
    if lattice_width is not None:
        # place edges between lattice atoms so no bin splits one
        edges = (np.floor(edges / lattice_width) + 0.5) * lattice_width
    edges = np.unique(edges)
    observed = np.bincount(
        np.searchsorted(edges, samples), minlength=len(edges) + 1
    ).astype(float)
    return edges, observed


def _merged_chi2(observed: np.ndarray, expected: np.ndarray) -> float:
    obs_m, exp_m = [], []
    o_acc = e_acc = 0.0
    for o, e in zip(observed, expected):
        o_acc += o
        e_acc += e
        if e_acc >= _MIN_EXPECTED:
            obs_m.append(o_acc)
            exp_m.append(e_acc)
            o_acc = e_acc = 0.0
    if e_acc > 0.0 and exp_m:
        obs_m[-1] += o_acc
        exp_m[-1] += e_acc
    if len(exp_m) < _MIN_MERGED_BINS:
        # a near-degenerate candidate collapses the binning; not comparable
        return math.inf
    obs_a = np.asarray(obs_m)
    exp_a = np.asarray(exp_m)
    return float(np.sum((obs_a - exp_a) ** 2 / exp_a))


def _chi2_curve(edges, observed, n, k):
    def objective(log_a: float) -> float:
        a = math.exp(log_a)
        cdf = gammainc(a, edges * (a / k))
        probs = np.diff(np.concatenate(([0.0], cdf, [1.0])))
        return _merged_chi2(observed, probs * n)

    return objective


def fit_ak(
    samples,
    k: int,
    bin_count: int = 100,
    *,
    lattice_width: float | None = None,
    metadata: dict | None = None,
) -> FitResult:
    """Fit the gamma shape of unit-mean-k cumulative-area samples.

    ``samples`` must be normalized so their mean is k (checked to 5%).
    ``lattice_width`` is the sample quantum of a lattice sampler (cell
    measure over mean cell measure); pass it whenever the samples come from
    :func:`abrgg.areas.estimate_areas_2d`.
    """
    samples = np.asarray(samples, dtype=float)
    if samples.ndim != 1 or samples.size < 100:
        raise DataError("need a flat array of at least 100 samples")
    if np.any(samples < 0) or not np.all(np.isfinite(samples)):
        raise DataError("samples must be finite and >= 0")
    if k < 1:
        raise DataError("k must be >= 1")
    if bin_count < _MIN_MERGED_BINS:
        raise DataError(f"bin_count must be >= {_MIN_MERGED_BINS}")
    if np.ptp(samples) == 0.0:
        raise NumericError("degenerate samples: all values are equal")
    mean = samples.mean()
    if abs(mean - k) > 0.05 * k:
        raise DataError(
            f"sample mean {mean:.4g} is not within 5% of k={k}; "
            f"normalize to unit-mean cells first"
        )

    edges, observed = _quantile_edges(samples, bin_count, lattice_width)
    objective = _chi2_curve(edges, observed, samples.size, k)

    grid = np.linspace(LOG_SHAPE_LO, LOG_SHAPE_HI, _GRID_POINTS)
    values = [objective(g) for g in grid]
    best = int(np.argmin(values))
    if not math.isfinite(values[best]):
        raise NumericError("chi-square is degenerate for every candidate shape")
    lo = grid[max(best - 1, 0)]
    hi = grid[min(best + 1, _GRID_POINTS - 1)]

    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = objective(c), objective(d)
    while d - c > 1e-5:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = objective(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = objective(d)
    log_a = 0.5 * (a + b)
    shape = math.exp(log_a)

    cdf = gammainc(shape, edges * (shape / k))
    expected = np.diff(np.concatenate(([0.0], cdf, [1.0]))) * samples.size
    return FitResult(
        k=k,
        shape=shape,
        chi2=objective(log_a),
        sample_size=int(samples.size),
        bin_count=bin_count,
        bin_edges=edges,
        observed=observed,
        expected=expected,
        lattice_width=lattice_width,
        metadata=dict(metadata or {}),
    )


def extrapolate_ak(k: int, fitted) -> float:
    """Shape for connectivity k from fitted values: exact where fitted,
    least-squares linear in k beyond.

    ``fitted`` is a mapping k -> shape or a sequence of :class:`FitResult`.
    """
    if k < 1:
        raise DataError("k must be >= 1")
    if isinstance(fitted, dict):
        table = {int(kk): float(v) for kk, v in fitted.items()}
    else:
        table = {int(r.k): float(r.shape) for r in fitted}
    if k in table:
        return table[k]
    if len(table) < 2:
        raise DataError("need at least 2 fitted shapes to extrapolate")
    ks = np.array(sorted(table))
    shapes = np.array([table[kk] for kk in ks], dtype=float)
    slope, intercept = np.polyfit(ks, shapes, 1)
    return float(intercept + slope * k)


def sample_cumulative_areas(
    *,
    n_points: int = 100,
    k_max: int = 5,
    iterations: int = 10_000,
    epsilon2: float = 0.1,
    seed: int = 0,
    workers: int = 1,
) -> tuple[dict[int, np.ndarray], float, dict]:
    """Pooled unit-mean cumulative-area samples from fixed-count uniform
    layouts on a sqrt(n) x sqrt(n) torus (unit station density).

    Each iteration draws ``n_points`` uniform points and lattice-samples
    their areas with cell measure ``epsilon2``; one pass serves every order
    up to ``k_max``. Returns samples per k, the sample quantum in unit-mean
    units, and run metadata.
    """
    if iterations < 1:
        raise DataError("iterations must be >= 1")
    side = math.sqrt(float(n_points))
    domain = Domain((side, side))
    epsilon = math.sqrt(epsilon2)
    mean_cell = domain.total_measure / n_points

    pooled = {k: [] for k in range(1, k_max + 1)}
    lattice_width = None
    for it in range(iterations):
        pts = gen_uniform(domain, n_points, spawn_rng(seed, it))
        table = estimate_areas_2d(pts, k_max, epsilon, workers=workers)
        lattice_width = table.cell_measure / mean_cell
        for k in range(1, k_max + 1):
            pooled[k].append(area_samples(table, upto=k, normalization=UNIT_MEAN))

    samples = {k: np.concatenate(chunks) for k, chunks in pooled.items()}
    meta = {
        "n_points": n_points,
        "k_max": k_max,
        "iterations": iterations,
        "epsilon2": epsilon2,
        "seed": seed,
        "samples_per_k": int(iterations * n_points),
    }
    return samples, lattice_width, meta


def fit_poisson_voronoi_shapes(
    *,
    k_max: int = 5,
    iterations: int = 10_000,
    n_points: int = 100,
    epsilon2: float = 0.1,
    seed: int = 0,
    bin_count: int = 100,
    workers: int = 1,
) -> list[FitResult]:
    """End-to-end pipeline: sample cumulative areas of a Poisson layout and
    fit the gamma shape for every k up to ``k_max``."""
    samples, width, meta = sample_cumulative_areas(
        n_points=n_points,
        k_max=k_max,
        iterations=iterations,
        epsilon2=epsilon2,
        seed=seed,
        workers=workers,
    )
    return [
        fit_ak(samples[k], k, bin_count, lattice_width=width, metadata=meta)
        for k in range(1, k_max + 1)
    ]
