"""File formats: station ingestion, point-set round-tripping, result
serialization with metadata sidecars and a hashed manifest.

Station files are delimited text with a header and longitude/latitude
columns (WGS84 degrees). Records inside a bounding box are projected to
local planar meters with an equirectangular projection about the box center
latitude: x = R * dlon * cos(lat0), y = R * dlat, R = 6371000 m. At city
scale (< 10 km) the distortion is below 0.1%, which is ample for degree
statistics and avoids a geodesy dependency.
"""

from __future__ import annotations

import csv
import hashlib
import importlib.resources
import io
import json
import math
import warnings
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .areas import AreaTable, area_samples
from .errors import DataError
from .experiment import DegreeHistogram
from .fitting import FitResult
from .geometry import CLIPPED, Domain, PointSet

EARTH_RADIUS_M = 6_371_000.0

BUILTIN = "builtin"


@dataclass(frozen=True)
class BoundingBox:
    lon_min: float
    lat_min: float
    lon_max: float
    lat_max: float

    def __post_init__(self):
        if not (-180 <= self.lon_min < self.lon_max <= 180):
            raise DataError("need -180 <= lon_min < lon_max <= 180")
        if not (-90 <= self.lat_min < self.lat_max <= 90):
            raise DataError("need -90 <= lat_min < lat_max <= 90")

    @property
    def center_lat(self) -> float:
        return 0.5 * (self.lat_min + self.lat_max)

    @classmethod
    def parse(cls, text: str) -> "BoundingBox":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise DataError("bbox must be 'lon_min,lat_min,lon_max,lat_max'")
        return cls(*(float(p) for p in parts))


@dataclass(frozen=True)
class StationRecord:
    longitude: float
    latitude: float
    tags: dict = field(default_factory=dict)

    def __post_init__(self):
        if not -180 <= self.longitude <= 180:
            raise DataError(f"longitude {self.longitude} out of [-180, 180]")
        if not -90 <= self.latitude <= 90:
            raise DataError(f"latitude {self.latitude} out of [-90, 90]")


def project_lonlat(lon, lat, bbox: BoundingBox) -> tuple[np.ndarray, np.ndarray]:
    """Equirectangular projection to meters, origin at the box's SW corner."""
    scale = math.cos(math.radians(bbox.center_lat))
    x = EARTH_RADIUS_M * np.radians(np.asarray(lon, float) - bbox.lon_min) * scale
    y = EARTH_RADIUS_M * np.radians(np.asarray(lat, float) - bbox.lat_min)
    return x, y


def unproject_xy(x, y, bbox: BoundingBox) -> tuple[np.ndarray, np.ndarray]:
    scale = math.cos(math.radians(bbox.center_lat))
    lon = bbox.lon_min + np.degrees(np.asarray(x, float) / (EARTH_RADIUS_M * scale))
    lat = bbox.lat_min + np.degrees(np.asarray(y, float) / EARTH_RADIUS_M)
    return lon, lat


def projected_domain(bbox: BoundingBox) -> Domain:
    w, h = project_lonlat(bbox.lon_max, bbox.lat_max, bbox)
    return Domain((float(w), float(h)), boundary=CLIPPED)


def read_station_records(
    path, lon_col: str = "lon", lat_col: str = "lat", *,
    delimiter: str = ",", strict: bool = False,
) -> list[StationRecord]:
    """Parse a delimited station file. Malformed rows are skipped with a
    warning (line numbers reported), or fatal with ``strict=True``."""
    path = Path(path)
    records: list[StationRecord] = []
    bad: list[int] = []
    with path.open(newline="") as fh:
        reader = csv.DictReader(fh, delimiter=delimiter)
        if reader.fieldnames is None or lon_col not in reader.fieldnames \
                or lat_col not in reader.fieldnames:
            raise DataError(
                f"{path} is missing required columns {lon_col!r}/{lat_col!r}; "
                f"found {reader.fieldnames}"
            )
        for lineno, row in enumerate(reader, start=2):
            try:
                lon = float(row[lon_col])
                lat = float(row[lat_col])
                tags = {k: v for k, v in row.items() if k not in (lon_col, lat_col)}
                records.append(StationRecord(lon, lat, tags))
            except (TypeError, ValueError, DataError) as exc:
                if strict:
                    raise DataError(f"{path}:{lineno}: malformed row ({exc})") from exc
                bad.append(lineno)
    if bad:
        warnings.warn(f"{path}: skipped {len(bad)} malformed rows (lines {bad[:10]}...)"
                      if len(bad) > 10 else
                      f"{path}: skipped malformed rows at lines {bad}")
    return records


def stations_to_pointset(
    records, bbox: BoundingBox, *, dedup_distance: float | None = None
) -> PointSet:
    """Project in-box records to a clipped planar point set, preserving file
    order. ``dedup_distance`` merges points closer than that many meters
    (keeps the first of each pair; off by default)."""
    inside = [
        r for r in records
        if bbox.lon_min <= r.longitude <= bbox.lon_max
        and bbox.lat_min <= r.latitude <= bbox.lat_max
    ]
    if not inside:
        raise DataError("no stations inside the bounding box")
    x, y = project_lonlat(
        [r.longitude for r in inside], [r.latitude for r in inside], bbox
    )
    coords = np.column_stack([x, y])
    if dedup_distance is not None and dedup_distance > 0:
        keep = np.ones(len(coords), dtype=bool)
        for i in range(len(coords)):
            if not keep[i]:
                continue
            later = coords[i + 1 :]
            close = np.hypot(later[:, 0] - coords[i, 0], later[:, 1] - coords[i, 1])
            keep[i + 1 :] &= close >= dedup_distance
        coords = coords[keep]
    return PointSet(projected_domain(bbox), coords, "file")


def load_stations(
    path, bbox: BoundingBox, *, lon_col: str = "lon", lat_col: str = "lat",
    delimiter: str = ",", strict: bool = False, dedup_distance: float | None = None,
) -> PointSet:
    """Read, select and project a station file into a clipped point set."""
    records = read_station_records(
        path, lon_col, lat_col, delimiter=delimiter, strict=strict
    )
    return stations_to_pointset(records, bbox, dedup_distance=dedup_distance)


def builtin_fixture_path() -> Path:
    """Shipped synthetic clustered station fixture (599 rows)."""
    return Path(importlib.resources.files("abrgg") / "data" / "stations_fixture.csv")


FIXTURE_BBOX = BoundingBox(6.87, 52.205, 6.92, 52.235)


def load_ak_constants(source=BUILTIN) -> dict[int, float]:
    """Fitted gamma shapes per connectivity level, from the shipped table or
    a ``k,a_k`` CSV file."""
    if source == BUILTIN:
        path = Path(importlib.resources.files("abrgg") / "data" / "ak_table.csv")
    else:
        path = Path(source)
    table: dict[int, float] = {}
    with path.open(newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != ["k", "a_k"]:
            raise DataError(f"{path}: expected header 'k,a_k', got {reader.fieldnames}")
        for row in reader:
            k = int(row["k"])
            a = float(row["a_k"])
            if k in table:
                raise DataError(f"{path}: duplicate entry for k={k}")
            if a <= 0:
                raise DataError(f"{path}: a_k must be positive, got {a} at k={k}")
            table[k] = a
    if not table:
        raise DataError(f"{path}: no entries")
    return table


# ---------------------------------------------------------------------------
# serializers (all deterministic: same object -> same bytes)


def _fmt(v: float) -> str:
    return repr(float(v))


def pointset_csv(points: PointSet) -> str:
    header = "x" if points.domain.dimension == 1 else "x,y"
    lines = [header]
    lines.extend(",".join(_fmt(c) for c in row) for row in points.coords)
    return "\n".join(lines) + "\n"


def pointset_metadata(points: PointSet) -> dict:
    return {
        "extent": list(points.domain.extent),
        "boundary": points.domain.boundary,
        "provenance": points.provenance,
        "seed": points.seed,
        "n": points.n,
    }


def load_pointset(csv_path) -> PointSet:
    """Rebuild a point set from a CSV written by :func:`pointset_csv` and its
    ``.meta.json`` sidecar."""
    csv_path = Path(csv_path)
    meta_path = csv_path.with_name(csv_path.name + ".meta.json")
    if not meta_path.exists():
        raise DataError(f"missing metadata sidecar {meta_path}")
    meta = json.loads(meta_path.read_text())
    info = meta.get("pointset", meta)
    domain = Domain(tuple(info["extent"]), info["boundary"])
    rows = []
    with csv_path.open(newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header not in (["x"], ["x", "y"]):
            raise DataError(f"{csv_path}: expected header 'x' or 'x,y', got {header}")
        for row in reader:
            rows.append([float(v) for v in row])
    return PointSet(domain, np.asarray(rows), info.get("provenance", "file"),
                    info.get("seed"))


def area_table_csv(table: AreaTable) -> str:
    lines = ["point_id,order,area"]
    for j in range(1, table.k_max + 1):
        col = table.values[:, j - 1]
        lines.extend(f"{i},{j},{_fmt(v)}" for i, v in enumerate(col))
    return "\n".join(lines) + "\n"


def area_cdf_csv(table: AreaTable, xs, *, normalization: str = "unit-mean") -> str:
    """Empirical CDF of the cumulative areas per k on a grid of abscissae."""
    xs = np.asarray(xs, dtype=float)
    lines = ["k,x,F"]
    for k in range(1, table.k_max + 1):
        samples = np.sort(area_samples(table, upto=k, normalization=normalization))
        cdf = np.searchsorted(samples, xs, side="right") / samples.size
        lines.extend(f"{k},{_fmt(x)},{_fmt(f)}" for x, f in zip(xs, cdf))
    return "\n".join(lines) + "\n"


def histogram_csv(hist: DegreeHistogram, analytic_p: np.ndarray | None = None) -> str:
    lines = ["degree,count,empirical_p,analytic_p"]
    emp = hist.probabilities
    for d, (c, p) in enumerate(zip(hist.counts, emp)):
        a = "" if analytic_p is None else _fmt(analytic_p[d])
        lines.append(f"{d},{int(c)},{_fmt(p)},{a}")
    return "\n".join(lines) + "\n"


def summary_csv(rows) -> str:
    """Rows of (k, mean, var, cv, cv_analytic)."""
    lines = ["k,mean,var,cv,cv_analytic"]
    for k, mean, var, cv, cv_ana in rows:
        lines.append(f"{k},{_fmt(mean)},{_fmt(var)},{_fmt(cv)},{_fmt(cv_ana)}")
    return "\n".join(lines) + "\n"


def pmf_csv(table: np.ndarray) -> str:
    lines = ["n,p"]
    lines.extend(f"{int(n)},{_fmt(p)}" for n, p in table)
    return "\n".join(lines) + "\n"


def cdf_csv(xs, values) -> str:
    lines = ["x,F"]
    lines.extend(f"{_fmt(x)},{_fmt(v)}" for x, v in zip(xs, values))
    return "\n".join(lines) + "\n"


def ak_table_csv(table: dict[int, float]) -> str:
    lines = ["k,a_k"]
    lines.extend(f"{k},{_fmt(a)}" for k, a in sorted(table.items()))
    return "\n".join(lines) + "\n"


def fit_result_json(result: FitResult) -> str:
    return result.to_json() + "\n"


# ---------------------------------------------------------------------------
# result writing


MANIFEST_NAME = "manifest.txt"
INCOMPLETE_MARKER = "# INCOMPLETE RUN\n"


def _sha256(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def write_results(files: dict[str, str], outdir, metadata: dict) -> list[tuple[str, str]]:
    """Write data files plus per-file metadata sidecars and a hashed manifest.

    ``files`` maps file name to full text content; every file gets a
    ``<name>.meta.json`` sidecar carrying the run metadata and package
    versions (no timestamps, so reruns hash identically). The manifest lists
    ``sha256  name`` for every file and is written last; if any write fails,
    whatever manifest can be written is marked incomplete.

    Returns the (hash, name) manifest entries.
    """
    import scipy

    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    sidecar = dict(metadata)
    sidecar["versions"] = {
        "abrgg": __version__,
        "numpy": np.__version__,
        "scipy": scipy.__version__,
    }
    sidecar_text = json.dumps(sidecar, indent=2, sort_keys=True) + "\n"

    entries: list[tuple[str, str]] = []
    try:
        for name in sorted(files):
            content = files[name]
            (outdir / name).write_text(content)
            entries.append((_sha256(content), name))
            meta_name = f"{name}.meta.json"
            (outdir / meta_name).write_text(sidecar_text)
            entries.append((_sha256(sidecar_text), meta_name))
    except OSError as exc:
        manifest = INCOMPLETE_MARKER + "".join(f"{h}  {n}\n" for h, n in entries)
        try:
            (outdir / MANIFEST_NAME).write_text(manifest)
        except OSError:
            pass
        raise DataError(f"failed writing results under {outdir}: {exc}") from exc

    (outdir / MANIFEST_NAME).write_text("".join(f"{h}  {n}\n" for h, n in entries))
    return entries
