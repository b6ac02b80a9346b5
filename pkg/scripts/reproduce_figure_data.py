"""Emit the CSV data behind the published degree-distribution and cv figures.

Four runs, each writing histograms plus a summary into results/<name>/:

  hex        lattice layout, 22785 stations on 3000x3000 m, k = 1, 5, 50
  poisson2d  Poisson stations at 0.01 /m^2, users at 0.1 /m^2, k = 1, 5, 50
  shadow01   clustered station fixture, weak shadowing (sigma = 0.1)
  shadow1    clustered station fixture, strong shadowing (sigma = 1)

plus cv_curves.csv with the three analytic cv-vs-k lines. Histogram CSVs
carry the matching analytic pmf column, so any plotting tool can overlay
markers and lines directly. Total runtime is a few minutes.

Usage: python scripts/reproduce_figure_data.py [outroot]
"""

import sys
from pathlib import Path

import numpy as np

from abrgg import analytic, dataio
from abrgg.cli import dispatch
from abrgg.dataio import builtin_fixture_path
from abrgg.fitting import extrapolate_ak

SEED = 20250810


def run(argv) -> None:
    code = dispatch([str(a) for a in argv])
    if code != 0:
        raise SystemExit(code)


def cv_curves(outdir: Path) -> None:
    shapes = dict(dataio.load_ak_constants())
    lines = ["family,k,cv"]
    for k in range(1, 51):
        lattice = analytic.DistSpec(analytic.POISSON_DEGREE, k=k, lambda_a=0.1,
                                    total_measure=9e6, n_points=90_000)
        one_d = analytic.DistSpec(analytic.CPE, k=k, lambda_a=0.1, lambda_b=0.01)
        a_k = shapes[k] if k in shapes else extrapolate_ak(k, shapes)
        fitted = analytic.DistSpec(analytic.CPG, k=k, lambda_a=0.1, lambda_b=0.01,
                                   shape=a_k)
        for name, spec in (("lattice", lattice), ("poisson-1d", one_d),
                           ("poisson-2d-fit", fitted)):
            cv = analytic.coefficient_of_variation(spec).cv
            lines.append(f"{name},{k},{cv!r}")
    dataio.write_results({"cv_curves.csv": "\n".join(lines) + "\n"}, outdir,
                         {"script": "reproduce_figure_data", "seed": SEED})


def main(root: Path) -> None:
    run(["simulate", "--layout", "hex", "--k", "1,5,50", "--lambda-a", "0.1",
         "--n", "22785", "--extent", "3000x3000", "--replicates", "8",
         "--seed", SEED, "--threads", "-1", "--out", root / "hex"])
    run(["simulate", "--layout", "poisson2d", "--k", "1,5,50",
         "--lambda-a", "0.1", "--lambda-b", "0.01", "--extent", "3000x3000",
         "--replicates", "4", "--seed", SEED, "--threads", "-1",
         "--out", root / "poisson2d"])

    stations = root / "stations"
    run(["ingest", "--input", builtin_fixture_path(),
         "--bbox", "6.87,52.205,6.92,52.235", "--out", stations])
    fixture = dataio.load_pointset(stations / "stations.csv")
    lam_b = fixture.n / fixture.domain.total_measure
    for name, sigma in (("shadow01", 0.1), ("shadow1", 1.0)):
        run(["simulate", "--layout", "file", "--stations", stations / "stations.csv",
             "--k", "1,5,50", "--lambda-a", repr(10.0 * lam_b),
             "--shadow-sigma", sigma, "--replicates", "20", "--seed", SEED,
             "--out", root / name])

    cv_curves(root / "cv")
    print(f"figure data under {root}/")


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else Path("results"))
