"""Spatial domains and point layouts for k-connected AB random geometric graphs.

Coordinates are in meters. Layouts live on a 1- or 2-dimensional box that is
either a torus (wrap-around, so spatial statistics are stationary and free of
edge effects) or clipped (hard edges, used for ingested station data).

Every generator is a pure function of (domain, parameters, seed): the same
arguments always produce byte-identical coordinates. Independent streams are
derived from one master seed with :func:`spawn_rng`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DataError

TORUS = "torus"
CLIPPED = "clipped"

_BOUNDARIES = (TORUS, CLIPPED)


def spawn_rng(seed: int | np.random.Generator, *key: int) -> np.random.Generator:
    """Independent child generator for stream ``key`` of a master ``seed``.

    Splitting is counter-based: stream ``(i, j)`` is
    ``SeedSequence(seed, spawn_key=(i, j))`` feeding PCG64, so replicate
    streams are reproducible across platforms and thread counts, and distinct
    keys give statistically independent streams. Passing a Generator returns
    it unchanged (``key`` must then be empty).
    """
    if isinstance(seed, np.random.Generator):
        if key:
            raise ValueError("cannot re-key an existing Generator")
        return seed
    seq = np.random.SeedSequence(int(seed), spawn_key=key)
    return np.random.Generator(np.random.PCG64(seq))


@dataclass(frozen=True)
class Domain:
    """A 1- or 2-dimensional box with a boundary rule.

    ``extent`` holds the per-axis lengths in meters; ``total_measure`` is
    their product (length in 1D, area in 2D).
    """

    extent: tuple[float, ...]
    boundary: str = TORUS

    def __post_init__(self):
        ext = tuple(float(e) for e in np.atleast_1d(np.asarray(self.extent, dtype=float)))
        if len(ext) not in (1, 2):
            raise DataError(f"domain must be 1- or 2-dimensional, got extent {ext}")
        if any(e <= 0 or not math.isfinite(e) for e in ext):
            raise DataError(f"extents must be positive and finite, got {ext}")
        if self.boundary not in _BOUNDARIES:
            raise DataError(f"boundary must be one of {_BOUNDARIES}, got {self.boundary!r}")
        object.__setattr__(self, "extent", ext)

    @property
    def dimension(self) -> int:
        return len(self.extent)

    @property
    def total_measure(self) -> float:
        """Total length (1D) or area (2D) of the box, in m or m^2."""
        return float(np.prod(self.extent))

    def extent_array(self) -> np.ndarray:
        return np.asarray(self.extent, dtype=float)


def as_coords(points, dimension: int) -> np.ndarray:
    """Coerce point input to an (n, dimension) float array.

    A 1-d array is read as n points when ``dimension == 1`` and as a single
    point when it has length ``dimension`` otherwise; scalars are a single
    1D point.
    """
    arr = np.asarray(points, dtype=float)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    elif arr.ndim == 1:
        arr = arr[:, None] if dimension == 1 else arr[None, :]
    if arr.ndim != 2 or arr.shape[1] != dimension:
        raise DataError(f"expected points of dimension {dimension}, got shape {arr.shape}")
    return arr


@dataclass(frozen=True)
class PointSet:
    """An immutable, ordered collection of points tied to a domain.

    Torus coordinates are wrapped into [0, extent) on construction; clipped
    coordinates must already lie inside the box. ``coords`` is read-only and
    row i is point id i everywhere downstream.
    """

    domain: Domain
    coords: np.ndarray
    provenance: str
    seed: int | None = None

    def __post_init__(self):
        coords = as_coords(self.coords, self.domain.dimension).copy()
        if coords.shape[0] == 0:
            raise DataError("point set is empty")
        if not np.all(np.isfinite(coords)):
            raise DataError("point coordinates must be finite")
        ext = self.domain.extent_array()
        if self.domain.boundary == TORUS:
            coords = np.mod(coords, ext)
            coords[coords >= ext] = 0.0  # mod can return the modulus itself
        elif np.any(coords < 0.0) or np.any(coords > ext):
            raise DataError("coordinates outside the clipped domain")
        coords.flags.writeable = False
        object.__setattr__(self, "coords", coords)

    def __len__(self) -> int:
        return self.coords.shape[0]

    @property
    def n(self) -> int:
        return self.coords.shape[0]


@dataclass(frozen=True)
class GridSpec:
    """Lattice parameters: a pitch in meters, or an exact point count.

    Exactly one of ``pitch`` and ``target_n`` must be set. With ``pitch`` the
    domain must fit whole rows and columns of the ideal triangular lattice;
    with ``target_n`` the lattice is stretched to realize exactly that many
    points (see :func:`gen_hex_grid`).
    """

    pitch: float | None = None
    target_n: int | None = None

    def __post_init__(self):
        if (self.pitch is None) == (self.target_n is None):
            raise DataError("specify exactly one of pitch, target_n")
        if self.pitch is not None and self.pitch <= 0:
            raise DataError("pitch must be positive")
        if self.target_n is not None and self.target_n < 1:
            raise DataError("target_n must be >= 1")


def distance(p, q, domain: Domain):
    """Euclidean distance between points, wrapping per axis on a torus.

    ``p`` and ``q`` broadcast; the result drops the final axis.
    """
    dim = domain.dimension
    dp = as_coords(p, dim)
    dq = as_coords(q, dim)
    delta = np.abs(dp - dq)
    if domain.boundary == TORUS:
        ext = domain.extent_array()
        delta = np.mod(delta, ext)
        delta = np.minimum(delta, ext - delta)
    d = np.sqrt(np.sum(delta * delta, axis=-1))
    return float(d[0]) if d.shape == (1,) else d


def gen_poisson(domain: Domain, density: float, seed) -> PointSet:
    """Homogeneous Poisson layout: Poisson(density * measure) points, i.i.d.
    uniform over the domain.

    ``density`` is points per meter (1D) or per square meter (2D). Raises
    :class:`DataError` when the sampled count is zero, since every consumer
    needs at least one point.
    """
    if density <= 0:
        raise DataError("density must be positive")
    rng = spawn_rng(seed)
    n = int(rng.poisson(density * domain.total_measure))
    if n == 0:
        raise DataError("Poisson layout sampled zero points; raise density or measure")
    coords = rng.uniform(0.0, domain.extent_array(), size=(n, domain.dimension))
    return PointSet(domain, coords, "poisson", seed if isinstance(seed, int) else None)


def gen_uniform(domain: Domain, n: int, seed) -> PointSet:
    """Exactly ``n`` i.i.d. uniform points (a Poisson layout conditioned on
    its count; used by the fixed-count area-fit pipeline)."""
    if n < 1:
        raise DataError("n must be >= 1")
    rng = spawn_rng(seed)
    coords = rng.uniform(0.0, domain.extent_array(), size=(n, domain.dimension))
    return PointSet(domain, coords, "uniform", seed if isinstance(seed, int) else None)


def gen_line_grid(domain: Domain, spacing: float) -> PointSet:
    """Equally spaced points on a 1D domain, starting at 0.

    The extent must be an integer multiple of ``spacing`` so the grid closes
    on the torus.
    """
    if domain.dimension != 1:
        raise DataError("line grid needs a 1D domain")
    if spacing <= 0:
        raise DataError("spacing must be positive")
    length = domain.extent[0]
    n = round(length / spacing)
    if n < 1 or abs(n * spacing - length) > 1e-9 * length:
        raise DataError(
            f"extent {length} is not an integer multiple of spacing {spacing}; "
            f"nearest compatible extent is {max(n, 1) * spacing}"
        )
    coords = np.arange(n, dtype=float) * spacing
    return PointSet(domain, coords, "line_grid")


def _hex_factorization(n: int, lx: float, ly: float) -> tuple[int, int]:
    """Columns x rows factorization of n whose cell aspect is closest to the
    ideal triangular row height sqrt(3)/2 * pitch."""
    ideal = math.sqrt(3.0) / 2.0
    best = None
    for nx in range(1, n + 1):
        if n % nx:
            continue
        ny = n // nx
        score = abs(math.log((ly / ny) / ((lx / nx) * ideal)))
        if best is None or score < best[0]:
            best = (score, nx, ny)
    return best[1], best[2]


def _hex_coords(nx: int, ny: int, lx: float, ly: float, shear_steps: int) -> np.ndarray:
    """Lattice of nx columns and ny rows; each row is shifted by
    shear_steps/ny column pitches so the pattern closes on the torus."""
    dx, dy = lx / nx, ly / ny
    rows = np.arange(ny, dtype=float)
    cols = np.arange(nx, dtype=float)
    xs = np.mod(cols[None, :] * dx + rows[:, None] * (dx * shear_steps / ny), lx)
    ys = np.broadcast_to((rows * dy)[:, None], (ny, nx))
    return np.column_stack([xs.ravel(), ys.ravel()])


def gen_hex_grid(domain: Domain, spec: GridSpec) -> PointSet:
    """Triangular point lattice (hexagonal first-order cells) on a 2D domain.

    The lattice is built from ``ny`` rows sheared by a fixed fraction of the
    column pitch per row, which makes it a genuine Bravais lattice on the
    torus: every point sees the same environment, so all order-k cells are
    congruent regardless of aspect ratio.

    With ``pitch`` given, the domain must fit whole columns and an even
    number of ideal-height rows, giving six equidistant nearest neighbors.
    With ``target_n`` the point count is realized exactly by stretching the
    row height (and shear) as needed; neighbor distances then spread by the
    stretch factor but cell congruence is preserved.
    """
    if domain.dimension != 2:
        raise DataError("hex grid needs a 2D domain")
    lx, ly = domain.extent

    if spec.pitch is not None:
        p = spec.pitch
        row_h = p * math.sqrt(3.0) / 2.0
        nx = round(lx / p)
        ny = round(ly / row_h)
        ny_even = 2 * max(1, round(ly / (2.0 * row_h)))
        suggestion = max(nx, 1) * ny_even
        if (
            nx < 1
            or ny < 1
            or ny % 2
            or abs(nx * p - lx) > 1e-9 * lx
            or abs(ny * row_h - ly) > 1e-9 * ly
        ):
            raise DataError(
                f"pitch {p} does not tile the {lx} x {ly} torus with whole "
                f"columns and an even number of rows; nearest compatible "
                f"N is {suggestion}"
            )
        coords = _hex_coords(nx, ny, lx, ly, shear_steps=ny // 2)
    else:
        nx, ny = _hex_factorization(spec.target_n, lx, ly)
        coords = _hex_coords(nx, ny, lx, ly, shear_steps=round(ny / 2))

    return PointSet(domain, coords, "hex_grid")
