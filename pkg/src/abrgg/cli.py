"""Command-line surface: every workflow needed to regenerate the published
tables and figure data as CSV (plot with any external tool).

Subcommands: generate, areas, fit, analytic, simulate, compare, ingest.
Exit codes: 0 success, 1 usage error, 2 data error, 3 numeric failure.
Option precedence: built-in defaults < --config JSON file < flags; the
resolved configuration is echoed into every output's metadata sidecar.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from types import SimpleNamespace

import numpy as np

from . import analytic, dataio, experiment, fitting
from .areas import area_samples, estimate_areas_2d, exact_areas_1d
from .errors import DataError, NumericError
from .geometry import CLIPPED, TORUS, Domain, GridSpec, gen_hex_grid, gen_line_grid, gen_poisson

_LAYOUT_ALIASES = {
    "hex": experiment.HEX_GRID,
    "hex-grid": experiment.HEX_GRID,
    "hex_grid": experiment.HEX_GRID,
    "line-grid": experiment.LINE_GRID,
    "line_grid": experiment.LINE_GRID,
    "poisson1d": experiment.POISSON_1D,
    "poisson2d": experiment.POISSON_2D,
    "file": experiment.FILE_LAYOUT,
}

_FAMILY_ALIASES = {
    "poisson-degree": analytic.POISSON_DEGREE,
    "poisson_degree": analytic.POISSON_DEGREE,
    "cpe": analytic.CPE,
    "compound_poisson_erlang": analytic.CPE,
    "cpg": analytic.CPG,
    "compound_poisson_gamma": analytic.CPG,
    "gamma-area": analytic.GAMMA_AREA,
    "gamma_area": analytic.GAMMA_AREA,
    "erlang-area": analytic.ERLANG_AREA,
    "erlang_area": analytic.ERLANG_AREA,
}


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_extent(text: str) -> tuple[float, ...]:
    parts = [p for p in str(text).lower().replace("x", " ").split() if p]
    try:
        extent = tuple(float(p) for p in parts)
    except ValueError as exc:
        raise DataError(f"cannot parse extent {text!r}; use '100' or '3000x3000'") from exc
    if len(extent) not in (1, 2):
        raise DataError(f"extent must have 1 or 2 axes, got {text!r}")
    return extent


def _parse_k_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in str(text).split(","))
    except ValueError as exc:
        raise DataError(f"cannot parse k list {text!r}; use e.g. '1,5,50'") from exc


def _resolve(args: argparse.Namespace, defaults: dict) -> SimpleNamespace:
    """defaults < config file < flags, with the winner per key."""
    cfg = {}
    if getattr(args, "config", None):
        cfg = json.loads(Path(args.config).read_text())
        unknown = set(cfg) - set(defaults)
        if unknown:
            raise DataError(f"unknown config keys: {sorted(unknown)}")
    resolved = {}
    for key, default in defaults.items():
        value = getattr(args, key, None)
        if value is None:
            value = cfg.get(key, default)
        resolved[key] = value
    return SimpleNamespace(**resolved)


def _echo(ns: SimpleNamespace) -> dict:
    # resolved run parameters; the output path is IO plumbing, not a parameter,
    # and would break byte-identical reruns into different directories
    return {k: (list(v) if isinstance(v, tuple) else v)
            for k, v in vars(ns).items() if k != "out"}


def _emit(files: dict[str, str], out: str | None, metadata: dict) -> None:
    if out is None:
        for name, content in files.items():
            sys.stdout.write(content)
    else:
        entries = dataio.write_results(files, out, metadata)
        data_files = [n for _, n in entries if not n.endswith(".meta.json")]
        print(f"wrote {len(data_files)} data file(s) to {out}")


# ---------------------------------------------------------------------------
# subcommands


def _cmd_generate(args) -> int:
    ns = _resolve(args, dict(layout=None, extent=None, lambda_b=None, spacing=None,
                             n=None, pitch=None, boundary=TORUS, seed=0, out=None))
    if ns.layout is None or ns.layout not in _LAYOUT_ALIASES:
        raise DataError(f"--layout must be one of {sorted(set(_LAYOUT_ALIASES) - {'file'})}")
    layout = _LAYOUT_ALIASES[ns.layout]
    if layout == experiment.FILE_LAYOUT:
        raise DataError("use the ingest subcommand for station files")
    if ns.extent is None:
        raise DataError("--extent is required")
    domain = Domain(_parse_extent(ns.extent), ns.boundary)
    if layout in (experiment.POISSON_1D, experiment.POISSON_2D):
        if ns.lambda_b is None:
            raise DataError("--lambda-b is required for Poisson layouts")
        points = gen_poisson(domain, ns.lambda_b, int(ns.seed))
    elif layout == experiment.LINE_GRID:
        if ns.spacing is None:
            raise DataError("--spacing is required for line-grid")
        points = gen_line_grid(domain, ns.spacing)
    else:
        spec = GridSpec(pitch=ns.pitch, target_n=None if ns.pitch else ns.n)
        points = gen_hex_grid(domain, spec)
    meta = {"command": "generate", "config": _echo(ns),
            "pointset": dataio.pointset_metadata(points)}
    _emit({"points.csv": dataio.pointset_csv(points)}, ns.out, meta)
    return 0


def _load_or_generate_points(ns):
    if ns.points is not None:
        return dataio.load_pointset(ns.points)
    if ns.layout is None:
        raise DataError("give --points FILE or generation flags (--layout ...)")
    layout = _LAYOUT_ALIASES.get(ns.layout)
    domain = Domain(_parse_extent(ns.extent), ns.boundary)
    if layout in (experiment.POISSON_1D, experiment.POISSON_2D):
        return gen_poisson(domain, ns.lambda_b, int(ns.seed))
    if layout == experiment.LINE_GRID:
        return gen_line_grid(domain, ns.spacing)
    if layout == experiment.HEX_GRID:
        return gen_hex_grid(domain, GridSpec(target_n=ns.n))
    raise DataError(f"unsupported layout {ns.layout!r}")


def _cmd_areas(args) -> int:
    ns = _resolve(args, dict(points=None, layout=None, extent=None, lambda_b=None,
                             spacing=None, n=None, boundary=TORUS, seed=0,
                             k_max=5, epsilon=None, cdf_points=200,
                             normalization="unit-mean", threads=1, out=None))
    points = _load_or_generate_points(ns)
    if points.domain.dimension == 1:
        table = exact_areas_1d(points, int(ns.k_max))
    else:
        epsilon = ns.epsilon
        if epsilon is None:
            # default pitch: >= ~100 sample cells per mean first-order cell
            epsilon = float(np.sqrt(points.domain.total_measure / points.n / 100.0))
        table = estimate_areas_2d(points, int(ns.k_max), epsilon,
                                  workers=int(ns.threads))
    top = max(area_samples(table, upto=table.k_max, normalization=ns.normalization))
    xs = np.linspace(0.0, float(top), int(ns.cdf_points))
    files = {
        "areas.csv": dataio.area_table_csv(table),
        "area_cdf.csv": dataio.area_cdf_csv(table, xs, normalization=ns.normalization),
    }
    meta = {"command": "areas", "config": _echo(ns),
            "epsilon": table.epsilon, "k_max": table.k_max, "n": points.n}
    _emit(files, ns.out, meta)
    return 0


def _cmd_fit(args) -> int:
    ns = _resolve(args, dict(k=5, iterations=10_000, n_points=100, epsilon2=0.1,
                             bins=100, seed=0, pilot=False, samples=None,
                             threads=1, out=None))
    files: dict[str, str] = {}
    if ns.samples is not None:
        values = np.loadtxt(ns.samples, dtype=float, ndmin=1)
        result = fitting.fit_ak(values, int(ns.k), int(ns.bins))
        files[f"fit_k{result.k}.json"] = dataio.fit_result_json(result)
        fitted = {result.k: result.shape}
    else:
        iterations = 100 if ns.pilot else int(ns.iterations)
        results = fitting.fit_poisson_voronoi_shapes(
            k_max=int(ns.k), iterations=iterations, n_points=int(ns.n_points),
            epsilon2=float(ns.epsilon2), seed=int(ns.seed),
            bin_count=int(ns.bins), workers=int(ns.threads),
        )
        for r in results:
            files[f"fit_k{r.k}.json"] = dataio.fit_result_json(r)
        fitted = {r.k: r.shape for r in results}
    files["ak_fitted.csv"] = dataio.ak_table_csv(fitted)
    meta = {"command": "fit", "config": _echo(ns), "fitted": fitted}
    _emit(files, ns.out, meta)
    return 0


def _build_dist_spec(ns, k: int) -> analytic.DistSpec:
    family = _FAMILY_ALIASES.get(ns.family)
    if family is None:
        raise DataError(f"--family must be one of {sorted(_FAMILY_ALIASES)}")
    shape = ns.shape
    if shape is None and family in (analytic.CPG, analytic.GAMMA_AREA):
        shape = fitting.extrapolate_ak(k, dataio.load_ak_constants())
    return analytic.DistSpec(
        family=family, k=k, lambda_a=ns.lambda_a, lambda_b=ns.lambda_b,
        total_measure=ns.a_tot, n_points=ns.n, spacing=ns.spacing, shape=shape,
    )


_ANALYTIC_DEFAULTS = dict(family=None, k=1, lambda_a=None, lambda_b=None,
                          a_tot=None, n=None, spacing=None, shape=None,
                          nmax=None, x_max=None, x_points=200,
                          cv_max_k=None, out=None)


def _cmd_analytic(args) -> int:
    ns = _resolve(args, _ANALYTIC_DEFAULTS)
    files: dict[str, str] = {}
    if ns.cv_max_k is not None:
        lines = []
        for k in range(1, int(ns.cv_max_k) + 1):
            spec = _build_dist_spec(ns, k)
            stats = analytic.coefficient_of_variation(spec)
            lines.append((k, stats.mean, stats.variance, stats.cv, stats.cv))
        files["cv_curve.csv"] = dataio.summary_csv(lines)
    else:
        spec = _build_dist_spec(ns, int(ns.k))
        if spec.family in analytic.DEGREE_FAMILIES:
            table, tail = analytic.pmf_table(spec, None if ns.nmax is None else int(ns.nmax))
            files["pmf.csv"] = dataio.pmf_csv(table)
            files["pmf_tail.txt"] = f"tail_mass,{tail!r}\n"
        else:
            x_max = ns.x_max if ns.x_max is not None else 4.0 * spec.k / (spec.lambda_b or 1.0)
            xs = np.linspace(0.0, float(x_max), int(ns.x_points))
            if spec.family == analytic.GAMMA_AREA:
                pdf, cdf = analytic.gamma_area_pdf_cdf(xs, spec)
                files["area_cdf.csv"] = dataio.cdf_csv(xs, cdf)
            else:
                pdf = analytic.erlang_area_pdf(xs, spec)
            files["area_pdf.csv"] = dataio.cdf_csv(xs, pdf)
    meta = {"command": "analytic", "config": _echo(ns)}
    _emit(files, ns.out, meta)
    return 0


def _reference_spec(config: experiment.ExperimentConfig, k: int,
                    b_n: int | None = None) -> analytic.DistSpec:
    """Natural analytic reference for a layout: lattice laws for grids, the
    1D compound law for 1D Poisson, the fitted compound-gamma otherwise."""
    domain = config.domain
    if config.layout in (experiment.HEX_GRID, experiment.LINE_GRID):
        if config.layout == experiment.LINE_GRID:
            return analytic.DistSpec(analytic.POISSON_DEGREE, k=k,
                                     lambda_a=config.lambda_a, spacing=config.spacing)
        return analytic.DistSpec(analytic.POISSON_DEGREE, k=k, lambda_a=config.lambda_a,
                                 total_measure=domain.total_measure,
                                 n_points=config.n_points)
    if config.layout == experiment.POISSON_1D:
        return analytic.DistSpec(analytic.CPE, k=k, lambda_a=config.lambda_a,
                                 lambda_b=config.lambda_b)
    lambda_b = config.lambda_b
    if lambda_b is None:
        lambda_b = b_n / domain.total_measure
    shape = fitting.extrapolate_ak(k, dataio.load_ak_constants())
    return analytic.DistSpec(analytic.CPG, k=k, lambda_a=config.lambda_a,
                             lambda_b=lambda_b, shape=shape)


def _cmd_simulate(args) -> int:
    ns = _resolve(args, dict(layout=None, k="1", lambda_a=None, lambda_b=None,
                             n=None, spacing=None, extent=None, boundary=TORUS,
                             replicates=1, seed=0, shadow_sigma=0.0,
                             stations=None, threads=1, out=None))
    if ns.layout is None or ns.layout not in _LAYOUT_ALIASES:
        raise DataError(f"--layout must be one of {sorted(_LAYOUT_ALIASES)}")
    if ns.lambda_a is None:
        raise DataError("--lambda-a is required")
    layout = _LAYOUT_ALIASES[ns.layout]
    b_points = None
    if layout == experiment.FILE_LAYOUT:
        if ns.stations is None:
            raise DataError("--stations FILE is required for --layout file")
        b_points = dataio.load_pointset(ns.stations)
    config = experiment.ExperimentConfig(
        layout=layout,
        lambda_a=float(ns.lambda_a),
        k_values=_parse_k_list(ns.k),
        replicates=int(ns.replicates),
        seed=int(ns.seed),
        extent=None if ns.extent is None else _parse_extent(ns.extent),
        boundary=ns.boundary,
        lambda_b=ns.lambda_b,
        spacing=ns.spacing,
        n_points=None if ns.n is None else int(ns.n),
        shadow_sigma=float(ns.shadow_sigma),
        b_points=b_points,
    )
    result = experiment.run_experiment(config, workers=int(ns.threads))

    files: dict[str, str] = {}
    summary_rows = []
    for k, summ in result.per_k.items():
        spec = _reference_spec(config, k, b_n=None if b_points is None else b_points.n)
        ana = analytic.degree_pmf(np.arange(len(summ.histogram.counts)), spec)
        files[f"histogram_k{k}.csv"] = dataio.histogram_csv(summ.histogram, ana)
        cv_ana = analytic.coefficient_of_variation(spec).cv
        summary_rows.append((k, summ.mean, summ.variance, summ.cv, cv_ana))
    files["summary.csv"] = dataio.summary_csv(summary_rows)
    meta = {"command": "simulate", "config": _echo(ns),
            "experiment": config.to_metadata()}
    _emit(files, ns.out, meta)
    return 0


def _cmd_compare(args) -> int:
    ns = _resolve(args, dict(histogram=None, **_ANALYTIC_DEFAULTS))
    if ns.histogram is None:
        raise DataError("--histogram FILE is required")
    rows = np.loadtxt(ns.histogram, delimiter=",", skiprows=1, usecols=(0, 1), ndmin=2)
    counts = np.zeros(int(rows[:, 0].max()) + 1, dtype=np.int64)
    counts[rows[:, 0].astype(int)] = rows[:, 1].astype(np.int64)
    hist = experiment.DegreeHistogram(counts=counts, k=int(ns.k),
                                      total_points=int(counts.sum()), n_edges=0)
    spec = _build_dist_spec(ns, int(ns.k))
    report = experiment.compare(hist, spec)
    payload = {
        "tv_distance": report.tv_distance,
        "ks_distance": report.ks_distance,
        "moments": {
            name: {"empirical": emp, "analytic": ana}
            for name, emp, ana in report.rows()
        },
    }
    _emit({"report.json": json.dumps(payload, indent=2, sort_keys=True) + "\n"},
          ns.out, {"command": "compare", "config": _echo(ns)})
    return 0


def _cmd_ingest(args) -> int:
    ns = _resolve(args, dict(input=None, bbox=None, lon_col="lon", lat_col="lat",
                             delimiter=",", strict=False, dedup_distance=None,
                             out=None))
    if ns.input is None or ns.bbox is None:
        raise DataError("--input FILE and --bbox are required")
    bbox = dataio.BoundingBox.parse(ns.bbox)
    points = dataio.load_stations(
        ns.input, bbox, lon_col=ns.lon_col, lat_col=ns.lat_col,
        delimiter=ns.delimiter, strict=bool(ns.strict),
        dedup_distance=ns.dedup_distance,
    )
    meta = {"command": "ingest", "config": _echo(ns),
            "bbox": vars(bbox), "pointset": dataio.pointset_metadata(points)}
    _emit({"stations.csv": dataio.pointset_csv(points)}, ns.out, meta)
    return 0


# ---------------------------------------------------------------------------
# parser wiring


def build_parser() -> _Parser:
    parser = _Parser(prog="abrgg", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="JSON file of option defaults (flags win)")
        p.add_argument("--out", help="output directory (omit to print to stdout)")
        return p

    g = add("generate", "write a station layout as CSV")
    g.add_argument("--layout", help="poisson1d | poisson2d | line-grid | hex-grid")
    g.add_argument("--extent", help="domain size in meters, e.g. '100' or '3000x3000'")
    g.add_argument("--lambda-b", type=float, dest="lambda_b",
                   help="station intensity (per m in 1D, per m^2 in 2D)")
    g.add_argument("--spacing", type=float, help="line-grid pitch in meters")
    g.add_argument("--n", type=int, help="exact point count for hex-grid")
    g.add_argument("--pitch", type=float, help="hex-grid pitch in meters (alternative to --n)")
    g.add_argument("--boundary", choices=[TORUS, CLIPPED], help="boundary rule")
    g.add_argument("--seed", type=int, help="64-bit seed (dimensionless)")

    a = add("areas", "order-k cell areas of a layout, plus per-k CDF grid")
    a.add_argument("--points", help="points.csv written by generate/ingest")
    a.add_argument("--layout", help="generate inline instead of --points")
    a.add_argument("--extent", help="domain size in meters for inline generation")
    a.add_argument("--lambda-b", type=float, dest="lambda_b",
                   help="station intensity for inline Poisson layouts (per m or m^2)")
    a.add_argument("--spacing", type=float, help="line-grid pitch in meters")
    a.add_argument("--n", type=int, help="hex-grid point count")
    a.add_argument("--boundary", choices=[TORUS, CLIPPED], help="boundary rule")
    a.add_argument("--seed", type=int, help="seed for inline generation")
    a.add_argument("--k-max", type=int, dest="k_max", help="highest order (default 5)")
    a.add_argument("--epsilon", type=float,
                   help="2D sampling pitch in meters (default: ~100 cells per mean cell)")
    a.add_argument("--cdf-points", type=int, dest="cdf_points",
                   help="abscissae in the CDF grid (default 200)")
    a.add_argument("--normalization", choices=["raw", "unit-mean"],
                   help="CDF x units: raw m/m^2 or mean-cell units (default unit-mean)")
    a.add_argument("--threads", type=int, help="neighbor-query worker cap")

    f = add("fit", "sample cumulative areas of a Poisson layout and fit gamma shapes")
    f.add_argument("--k", type=int, help="fit orders 1..k (default 5)")
    f.add_argument("--iterations", type=int,
                   help="layouts to sample; samples = iterations * n-points (default 10000)")
    f.add_argument("--n-points", type=int, dest="n_points",
                   help="points per layout (default 100)")
    f.add_argument("--epsilon2", type=float,
                   help="sampling cell area in mean-cell units (default 0.1)")
    f.add_argument("--bins", type=int, help="chi-square bin count (default 100)")
    f.add_argument("--seed", type=int, help="master seed")
    f.add_argument("--pilot", action="store_const", const=True,
                   help="quick run: 100 iterations (10^4 samples per k)")
    f.add_argument("--samples", help="fit a file of one sample per line instead")
    f.add_argument("--threads", type=int, help="neighbor-query worker cap")

    an = add("analytic", "tabulate a degree/area law or its cv curve as CSV")
    an.add_argument("--family",
                    help="poisson-degree | cpe | cpg | gamma-area | erlang-area")
    an.add_argument("--k", type=int, help="connectivity level (default 1)")
    an.add_argument("--lambda-a", type=float, dest="lambda_a",
                    help="user intensity (per m or m^2)")
    an.add_argument("--lambda-b", type=float, dest="lambda_b",
                    help="station intensity (per m or m^2)")
    an.add_argument("--a-tot", type=float, dest="a_tot",
                    help="total measure for lattice laws (m or m^2)")
    an.add_argument("--n", type=int, help="station count for lattice laws")
    an.add_argument("--spacing", type=float, help="1D lattice pitch in meters")
    an.add_argument("--shape", type=float,
                    help="gamma shape (default: shipped table, extrapolated beyond)")
    an.add_argument("--nmax", type=int, help="pmf rows 0..nmax (default: mean + 20 sd)")
    an.add_argument("--x-max", type=float, dest="x_max",
                    help="area grid upper end (mean-cell units or m/m^2)")
    an.add_argument("--x-points", type=int, dest="x_points",
                    help="area grid size (default 200)")
    an.add_argument("--cv-max-k", type=int, dest="cv_max_k",
                    help="emit the cv curve for k = 1..K instead of one law")

    s = add("simulate", "Monte Carlo degree histograms and summaries")
    s.add_argument("--layout", help="hex | poisson1d | poisson2d | line-grid | file")
    s.add_argument("--k", help="comma-separated connectivity levels, e.g. '1,5,50'")
    s.add_argument("--lambda-a", type=float, dest="lambda_a",
                   help="user intensity (per m in 1D, per m^2 in 2D)")
    s.add_argument("--lambda-b", type=float, dest="lambda_b",
                   help="station intensity for Poisson layouts (per m or m^2)")
    s.add_argument("--n", type=int, help="hex-grid station count")
    s.add_argument("--spacing", type=float, help="line-grid pitch in meters")
    s.add_argument("--extent", help="domain size in meters, e.g. '3000x3000'")
    s.add_argument("--boundary", choices=[TORUS, CLIPPED], help="boundary rule")
    s.add_argument("--replicates", type=int, help="independent replicates (default 1)")
    s.add_argument("--seed", type=int, help="master seed; replicates split from it")
    s.add_argument("--shadow-sigma", type=float, dest="shadow_sigma",
                   help="log-normal shadowing parameter (dimensionless, default 0)")
    s.add_argument("--stations", help="stations.csv from ingest (with --layout file)")
    s.add_argument("--threads", type=int, help="neighbor-query worker cap")

    c = add("compare", "divergence report: histogram CSV vs analytic law")
    c.add_argument("--histogram", help="histogram_k*.csv from simulate")
    for flag, kw in (
        ("--family", {}), ("--k", dict(type=int)),
        ("--lambda-a", dict(type=float, dest="lambda_a")),
        ("--lambda-b", dict(type=float, dest="lambda_b")),
        ("--a-tot", dict(type=float, dest="a_tot")), ("--n", dict(type=int)),
        ("--spacing", dict(type=float)), ("--shape", dict(type=float)),
    ):
        c.add_argument(flag, **kw, help="see the analytic subcommand")

    i = add("ingest", "project a lon/lat station file into planar meters")
    i.add_argument("--input", help="delimited text file with a header row")
    i.add_argument("--bbox", help="selection box 'lon_min,lat_min,lon_max,lat_max' (degrees)")
    i.add_argument("--lon-col", dest="lon_col", help="longitude column name (default lon)")
    i.add_argument("--lat-col", dest="lat_col", help="latitude column name (default lat)")
    i.add_argument("--delimiter", help="field delimiter (default ',')")
    i.add_argument("--strict", action="store_const", const=True,
                   help="fail on malformed rows instead of skipping")
    i.add_argument("--dedup-distance", type=float, dest="dedup_distance",
                   help="merge stations closer than this many meters (default off)")

    return parser


_COMMANDS = {
    "generate": _cmd_generate,
    "areas": _cmd_areas,
    "fit": _cmd_fit,
    "analytic": _cmd_analytic,
    "simulate": _cmd_simulate,
    "compare": _cmd_compare,
    "ingest": _cmd_ingest,
}


def dispatch(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command is None:
        parser.print_help()
        return 1
    try:
        return _COMMANDS[args.command](args)
    except DataError as exc:
        print(f"abrgg {args.command}: {exc}", file=sys.stderr)
        return 2
    except NumericError as exc:
        print(f"abrgg {args.command}: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))
