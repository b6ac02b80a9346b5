"""Order-k cell areas: the measure of the region where each point is the
j-th nearest, for j = 1..k_max.

2D areas are estimated by lattice sampling: the domain is tiled with cells of
side ~epsilon, each cell's center is queried for its ordered nearest points,
and the cell's area is credited to the j-th nearest point at order j. Every
cell is assigned exactly once per order, so per-order totals equal the domain
measure by construction.

1D areas are exact: with cyclic gaps D between sorted points, the order-k
cell of a point is half the gap k-1 steps behind plus half the gap k steps
ahead.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DataError
from .geometry import CLIPPED, TORUS, Domain, PointSet
from .knn import NnIndex, build_index, k_nearest

RAW = "raw"
UNIT_MEAN = "unit-mean"


@dataclass(frozen=True)
class AreaTable:
    """Per-point areas X_j(i) for orders j = 1..k_max.

    ``values[i, j-1]`` is the order-j area of point i in m (1D) or m^2 (2D).
    ``epsilon`` is the sampling pitch (None for the exact 1D computation);
    ``cell_measure`` the quantum every sampled value is a multiple of.
    """

    points: PointSet
    values: np.ndarray
    k_max: int
    epsilon: float | None = None
    cell_measure: float | None = None

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.shape != (self.points.n, self.k_max):
            raise DataError(f"values must have shape (n, k_max), got {values.shape}")
        values = values.copy()
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    def cumulative(self, k: int) -> np.ndarray:
        """Per-point X_{<=k}(i), the union of orders 1..k."""
        if not 1 <= k <= self.k_max:
            raise DataError(f"order must be in [1, {self.k_max}], got {k}")
        return self.values[:, :k].sum(axis=1)

    def order_totals(self) -> np.ndarray:
        """Sum over points of X_j, per order; equals the domain measure."""
        return self.values.sum(axis=0)


def estimate_areas_2d(
    points: PointSet,
    k_max: int,
    epsilon: float,
    index: NnIndex | None = None,
    *,
    workers: int = 1,
    chunk_cells: int = 1 << 18,
) -> AreaTable:
    """Estimate order-k areas on a 2D domain by cell-center sampling.

    The tile pitch per axis is the nearest exact divisor of the extent to
    ``epsilon``, so the tiling is exact and conservation holds to rounding.
    Discretization error per point is O(epsilon * cell perimeter).
    """
    domain = points.domain
    if domain.dimension != 2:
        raise DataError("estimate_areas_2d needs a 2D point set (1D areas are exact)")
    if epsilon <= 0 or epsilon > min(domain.extent):
        raise DataError(f"epsilon must be in (0, {min(domain.extent)}], got {epsilon}")
    if not 1 <= k_max <= points.n:
        raise DataError(f"k_max must be in [1, {points.n}], got {k_max}")
    if index is None:
        index = build_index(points)
    elif index.points is not points:
        raise DataError("index was built for a different point set")

    lx, ly = domain.extent
    ncx = max(1, round(lx / epsilon))
    ncy = max(1, round(ly / epsilon))
    px, py = lx / ncx, ly / ncy
    cell = px * py

    counts = np.zeros((points.n, k_max), dtype=np.int64)
    xs = (np.arange(ncx) + 0.5) * px
    rows_per_chunk = max(1, chunk_cells // ncx)
    for y0 in range(0, ncy, rows_per_chunk):
        ys = (np.arange(y0, min(y0 + rows_per_chunk, ncy)) + 0.5) * py
        gx, gy = np.meshgrid(xs, ys, indexing="ij")
        centers = np.column_stack([gx.ravel(), gy.ravel()])
        ids, _ = k_nearest(index, centers, k_max, workers=workers)
        for j in range(k_max):
            counts[:, j] += np.bincount(ids[:, j], minlength=points.n)

    return AreaTable(points, counts * cell, k_max, epsilon=max(px, py), cell_measure=cell)


def exact_areas_1d(points: PointSet, k_max: int) -> AreaTable:
    """Exact order-k interval lengths on a 1D torus.

    With sorted coordinates and cyclic gaps D[i] = x[i] - x[i-1], the order-k
    cell of sorted point i is (D[i-k+1] + D[i+k]) / 2. Needs
    n >= 2*k_max + 1 so the two gaps are distinct for every order.
    """
    domain = points.domain
    if domain.dimension != 1:
        raise DataError("exact_areas_1d needs a 1D point set")
    if domain.boundary != TORUS:
        raise DataError("exact 1D areas are defined on a torus")
    n = points.n
    if n < 2 * k_max + 1:
        raise DataError(f"need n >= 2*k_max + 1 points, got n={n}, k_max={k_max}")

    x = points.coords[:, 0]
    order = np.argsort(x, kind="stable")
    xs = x[order]
    length = domain.extent[0]
    gaps = np.empty(n)
    gaps[1:] = np.diff(xs)
    gaps[0] = xs[0] - xs[-1] + length

    values_sorted = np.empty((n, k_max))
    for k in range(1, k_max + 1):
        # roll(+k-1)[i] = gaps[i-k+1]; roll(-k)[i] = gaps[i+k]
        values_sorted[:, k - 1] = 0.5 * (np.roll(gaps, k - 1) + np.roll(gaps, -k))

    values = np.empty_like(values_sorted)
    values[order] = values_sorted
    return AreaTable(points, values, k_max)


def area_samples(
    table: AreaTable,
    *,
    order: int | None = None,
    upto: int | None = None,
    normalization: str = RAW,
    guard_band: float = 0.0,
) -> np.ndarray:
    """Flatten an area table into per-point samples.

    Select either a single order (``order=j``) or the cumulative union
    (``upto=k``). ``normalization="unit-mean"`` divides by measure/n so the
    cumulative order-k mean is exactly k, the convention used before shape
    fitting. ``guard_band`` drops points within that distance of a clipped
    boundary, whose cells are truncated.
    """
    if (order is None) == (upto is None):
        raise DataError("select exactly one of order=j, upto=k")
    if normalization not in (RAW, UNIT_MEAN):
        raise DataError(f"normalization must be '{RAW}' or '{UNIT_MEAN}'")
    if order is not None:
        if not 1 <= order <= table.k_max:
            raise DataError(f"order must be in [1, {table.k_max}], got {order}")
        values = table.values[:, order - 1]
    else:
        values = table.cumulative(upto)

    if guard_band > 0.0:
        domain = table.points.domain
        if domain.boundary != CLIPPED:
            raise DataError("guard_band applies to clipped domains only")
        coords = table.points.coords
        ext = domain.extent_array()
        keep = np.all((coords >= guard_band) & (coords <= ext - guard_band), axis=1)
        values = values[keep]
        if values.size == 0:
            raise DataError("guard band removed every point")

    if normalization == UNIT_MEAN:
        values = values / (table.points.domain.total_measure / table.points.n)
    return np.asarray(values, dtype=float)
