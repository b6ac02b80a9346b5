"""Regenerate the shipped synthetic station fixture.

The fixture stands in for a crowd-sourced base-station extract of a city
centre: 599 stations in a ~3.4 x 3.3 km box around 52.22N 6.895E, laid out
as a Thomas cluster process (cluster parents with Gaussian offspring) plus a
uniform background, which reproduces the strong clustering of real deployments
without redistributing any real dataset. A few rows carry a radio tag to
exercise tag passthrough, and coordinates are rounded to ~1 m so the file
looks like typical crowd-sourced data.

Deterministic: rerunning this script reproduces the committed file byte for
byte.

Usage: python scripts/make_station_fixture.py [output.csv]
"""

import sys
from pathlib import Path

import numpy as np

LON_MIN, LAT_MIN, LON_MAX, LAT_MAX = 6.87, 52.205, 6.92, 52.235
N_STATIONS = 599
N_PARENTS = 22
N_CLUSTERED = 509
CLUSTER_SD_DEG = 0.0022  # ~190 m of offspring scatter
SEED = 599


def main(out_path: Path) -> None:
    rng = np.random.default_rng(SEED)
    lo = np.array([LON_MIN, LAT_MIN])
    hi = np.array([LON_MAX, LAT_MAX])

    parents = rng.uniform(lo, hi, size=(N_PARENTS, 2))
    weights = rng.dirichlet(np.full(N_PARENTS, 1.5))
    per_parent = rng.multinomial(N_CLUSTERED, weights)

    points = []
    for parent, count in zip(parents, per_parent):
        placed = 0
        while placed < count:
            q = rng.normal(parent, CLUSTER_SD_DEG)
            if np.all(q >= lo) and np.all(q <= hi):
                points.append(q)
                placed += 1
    points.extend(rng.uniform(lo, hi, size=(N_STATIONS - N_CLUSTERED, 2)))
    points = np.asarray(points)

    radios = rng.choice(["LTE", "UMTS", "NR"], size=N_STATIONS, p=[0.6, 0.25, 0.15])
    lines = ["lon,lat,radio"]
    for (lon, lat), radio in zip(points, radios):
        lines.append(f"{lon:.5f},{lat:.5f},{radio}")
    out_path.write_text("\n".join(lines) + "\n")
    print(f"wrote {N_STATIONS} stations to {out_path}")


if __name__ == "__main__":
    default = Path(__file__).resolve().parent.parent / "src/abrgg/data/stations_fixture.csv"
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else default)
