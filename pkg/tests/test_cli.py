import json

import numpy as np
import pytest

from abrgg.cli import dispatch
from abrgg.dataio import builtin_fixture_path


def run(argv):
    return dispatch([str(a) for a in argv])


# --- spec'd end-to-end invocations (double as smoke tests) --------------------


def test_simulate_hex_figure_parameters(tmp_path):
    out = tmp_path / "hex"
    code = run(["simulate", "--layout", "hex", "--k", "1,5,50",
                "--lambda-a", "0.1", "--n", "22785", "--extent", "3000x3000",
                "--seed", "7", "--threads", "-1", "--out", out])
    assert code == 0
    for k in (1, 5, 50):
        assert (out / f"histogram_k{k}.csv").exists()
    header = (out / "histogram_k1.csv").read_text().splitlines()[0]
    assert header == "degree,count,empirical_p,analytic_p"
    summary = (out / "summary.csv").read_text().splitlines()
    assert summary[0] == "k,mean,var,cv,cv_analytic"
    assert len(summary) == 4


def test_analytic_cpe_table(capsys):
    assert run(["analytic", "--family", "cpe", "--k", "1",
                "--lambda-a", "1", "--lambda-b", "1", "--nmax", "10"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n,p"
    n0, p0 = lines[1].split(",")
    assert n0 == "0"
    assert float(p0) == pytest.approx(4 / 9, abs=1e-12)
    assert len(lines) >= 12


def test_fit_pilot_recovers_first_shape(tmp_path):
    out = tmp_path / "fit"
    assert run(["fit", "--k", "1", "--pilot", "--seed", "3", "--out", out]) == 0
    result = json.loads((out / "fit_k1.json").read_text())
    assert 3.0 <= result["a_k"] <= 4.1
    assert result["sample_size"] == 10_000


# --- reproducibility ---------------------------------------------------------


def test_generate_is_byte_reproducible(tmp_path):
    argv = ["generate", "--layout", "poisson2d", "--extent", "50x50",
            "--lambda-b", "0.05", "--seed", "11"]
    assert run(argv + ["--out", tmp_path / "a"]) == 0
    assert run(argv + ["--out", tmp_path / "b"]) == 0
    ma = (tmp_path / "a" / "manifest.txt").read_text()
    mb = (tmp_path / "b" / "manifest.txt").read_text()
    assert ma == mb and ma.strip()


def test_config_file_precedence(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"layout": "poisson2d", "extent": "50x50",
                               "lambda_b": 0.05, "seed": 1}))
    a = run(["generate", "--config", cfg, "--out", tmp_path / "a"])
    b = run(["generate", "--config", cfg, "--seed", "2", "--out", tmp_path / "b"])
    assert a == 0 and b == 0
    pa = (tmp_path / "a" / "points.csv").read_text()
    pb = (tmp_path / "b" / "points.csv").read_text()
    assert pa != pb  # flag overrode the config seed
    meta = json.loads((tmp_path / "b" / "points.csv.meta.json").read_text())
    assert meta["config"]["seed"] == 2  # resolved config echoed


# --- remaining subcommands ----------------------------------------------------


def test_areas_1d_exact_and_2d_sampled(tmp_path):
    assert run(["areas", "--layout", "line-grid", "--extent", "12",
                "--spacing", "2", "--k-max", "2", "--out", tmp_path / "d1"]) == 0
    body = (tmp_path / "d1" / "areas.csv").read_text().splitlines()
    assert body[0] == "point_id,order,area"
    areas = {float(line.split(",")[2]) for line in body[1:]}
    assert areas == {2.0}

    assert run(["areas", "--layout", "poisson2d", "--extent", "20x20",
                "--lambda-b", "0.25", "--seed", "4", "--k-max", "3",
                "--out", tmp_path / "d2"]) == 0
    cdf = (tmp_path / "d2" / "area_cdf.csv").read_text().splitlines()
    assert cdf[0] == "k,x,F"


def test_ingest_then_simulate_file_layout(tmp_path):
    st = tmp_path / "stations"
    assert run(["ingest", "--input", builtin_fixture_path(),
                "--bbox", "6.87,52.205,6.92,52.235", "--out", st]) == 0
    rows = (st / "stations.csv").read_text().splitlines()
    assert rows[0] == "x,y" and len(rows) == 600

    sim = tmp_path / "sim"
    assert run(["simulate", "--layout", "file", "--stations", st / "stations.csv",
                "--k", "1", "--lambda-a", "0.00005", "--replicates", "2",
                "--seed", "1", "--shadow-sigma", "1", "--out", sim]) == 0
    assert (sim / "histogram_k1.csv").exists()


def test_compare_subcommand(tmp_path):
    sim = tmp_path / "sim"
    assert run(["simulate", "--layout", "poisson1d", "--extent", "500",
                "--lambda-b", "1", "--lambda-a", "2", "--k", "2",
                "--replicates", "4", "--seed", "9", "--out", sim]) == 0
    assert run(["compare", "--histogram", sim / "histogram_k2.csv",
                "--family", "cpe", "--k", "2", "--lambda-a", "2",
                "--lambda-b", "1", "--out", tmp_path / "cmp"]) == 0
    report = json.loads((tmp_path / "cmp" / "report.json").read_text())
    assert 0 <= report["tv_distance"] <= 1
    assert report["moments"]["mean"]["analytic"] == pytest.approx(4.0)
    assert report["tv_distance"] < 0.2


def test_cv_curve_emission(tmp_path):
    assert run(["analytic", "--family", "cpg", "--lambda-a", "0.1",
                "--lambda-b", "0.01", "--cv-max-k", "8",
                "--out", tmp_path / "cv"]) == 0
    lines = (tmp_path / "cv" / "cv_curve.csv").read_text().splitlines()
    assert lines[0] == "k,mean,var,cv,cv_analytic"
    cvs = [float(l.split(",")[3]) for l in lines[1:]]
    assert len(cvs) == 8 and all(a > b for a, b in zip(cvs, cvs[1:]))


# --- error paths --------------------------------------------------------------


def test_usage_error_exit_code_1():
    assert run(["simulate", "--no-such-flag"]) == 1
    assert run(["nonsense"]) == 1
    assert run([]) == 1


def test_data_error_exit_code_2(tmp_path):
    assert run(["simulate", "--layout", "hex", "--k", "1"]) == 2  # missing lambda-a
    assert run(["ingest", "--input", builtin_fixture_path(),
                "--bbox", "0,0,1,1", "--out", tmp_path]) == 2  # empty selection
    assert run(["generate", "--layout", "line-grid", "--extent", "10",
                "--spacing", "3", "--out", tmp_path]) == 2  # non-divisible


def test_numeric_error_exit_code_3(tmp_path):
    degenerate = tmp_path / "samples.txt"
    degenerate.write_text("\n".join(["1.0"] * 5000) + "\n")
    assert run(["fit", "--samples", degenerate, "--k", "1"]) == 3


def test_help_documents_units(capsys):
    assert run(["simulate", "--help"]) == 0
    text = capsys.readouterr().out
    assert "meters" in text and "per m" in text
    assert run(["analytic", "--help"]) == 0
    assert "per m" in capsys.readouterr().out
