import math

import numpy as np
import pytest

from abrgg.analytic import CPE, CPG, POISSON_DEGREE, DistSpec, coefficient_of_variation
from abrgg.errors import DataError
from abrgg.experiment import (
    HEX_GRID,
    LINE_GRID,
    POISSON_1D,
    POISSON_2D,
    DegreeHistogram,
    ExperimentConfig,
    compare,
    degrees_one_replicate,
    run_experiment,
)
from abrgg.geometry import Domain, gen_uniform, spawn_rng

HEX_SMALL = dict(layout=HEX_GRID, extent=(200.0, 200.0), n_points=400)


def small_hex_config(**overrides):
    base = dict(HEX_SMALL, lambda_a=0.05, k_values=(1, 3), replicates=3, seed=5)
    base.update(overrides)
    return ExperimentConfig(**base)


# --- one replicate ----------------------------------------------------------


def test_edge_total_is_exactly_k_times_users():
    config = small_hex_config()
    hists = degrees_one_replicate(
        gen_uniform(Domain((200.0, 200.0)), 400, 1), config, replicate=0
    )
    for k, h in hists.items():
        degrees = np.arange(len(h.counts))
        assert (degrees * h.counts).sum() == h.n_edges
        assert h.n_edges % k == 0
        assert h.counts.sum() == h.total_points == 400


def test_k_equals_station_count_gives_degree_n_users():
    stations = gen_uniform(Domain((50.0, 50.0)), 6, 2)
    config = ExperimentConfig(layout=HEX_GRID, extent=(50.0, 50.0), n_points=6,
                              lambda_a=0.01, k_values=(6,), seed=3)
    (h,) = degrees_one_replicate(stations, config).values()
    n_users = h.n_edges // 6
    assert np.all(np.flatnonzero(h.counts) == [n_users])
    assert h.counts[n_users] == 6


def test_zero_users_gives_all_zero_degrees():
    stations = gen_uniform(Domain((10.0, 10.0)), 5, 2)
    config = ExperimentConfig(layout=HEX_GRID, extent=(10.0, 10.0), n_points=5,
                              lambda_a=1e-9, k_values=(2,), seed=0)
    (h,) = degrees_one_replicate(stations, config).values()
    assert h.counts.tolist() == [5]
    assert h.n_edges == 0


def test_hex_replicate_mean_within_three_sigma():
    config = small_hex_config(k_values=(1,), replicates=1)
    result = run_experiment(config)
    summ = result.per_k[1]
    mu = config.lambda_a * 1 * 200.0 * 200.0 / 400
    n_users = summ.histogram.n_edges
    sigma = math.sqrt(mu / 400)  # Poisson count noise spread over stations
    assert abs(summ.mean - mu) < 3 * max(sigma, mu / math.sqrt(n_users))


def test_too_few_stations_rejected():
    stations = gen_uniform(Domain((10.0, 10.0)), 3, 1)
    config = ExperimentConfig(layout=HEX_GRID, extent=(10.0, 10.0), n_points=3,
                              lambda_a=0.1, k_values=(5,), seed=0)
    with pytest.raises(DataError, match="stations"):
        degrees_one_replicate(stations, config)


# --- full runs --------------------------------------------------------------


def test_run_is_deterministic_and_thread_invariant():
    config = small_hex_config()
    a = run_experiment(config, workers=1)
    b = run_experiment(config, workers=4)
    c = run_experiment(config, workers=1)
    for k in config.k_values:
        assert np.array_equal(a.per_k[k].histogram.counts, b.per_k[k].histogram.counts)
        assert np.array_equal(a.per_k[k].histogram.counts, c.per_k[k].histogram.counts)


def test_poisson_layout_redraws_stations_each_replicate():
    config = ExperimentConfig(layout=POISSON_2D, extent=(50.0, 50.0), lambda_b=0.05,
                              lambda_a=0.05, k_values=(1,), replicates=4, seed=9)
    result = run_experiment(config)
    totals = [h.total_points for h in result.replicate_histograms[1]]
    assert len(set(totals)) > 1  # Poisson counts differ across replicates


def test_shadowing_leaves_pooled_mean_unchanged():
    base = small_hex_config(k_values=(2,), replicates=2)
    shadowed = small_hex_config(k_values=(2,), replicates=2, shadow_sigma=1.0)
    r0 = run_experiment(base)
    r1 = run_experiment(shadowed)
    # same user streams, every user still contributes exactly k edges
    assert r0.per_k[2].histogram.n_edges == r1.per_k[2].histogram.n_edges
    assert r0.per_k[2].mean == pytest.approx(r1.per_k[2].mean, rel=1e-12)
    assert not np.array_equal(r0.per_k[2].histogram.counts, r1.per_k[2].histogram.counts)


def test_jackknife_errors_have_sane_scale():
    config = small_hex_config(k_values=(1,), replicates=6)
    summ = run_experiment(config).per_k[1]
    mu = config.lambda_a * 200.0 * 200.0 / 400
    assert summ.mean_se > 0
    assert abs(summ.mean - mu) < 5 * summ.mean_se
    assert summ.cv_se > 0


def test_hex_empirical_cv_tracks_lattice_law():
    config = small_hex_config(k_values=(1, 3), replicates=8, lambda_a=0.25)
    result = run_experiment(config)
    for k in (1, 3):
        spec = DistSpec(POISSON_DEGREE, k=k, lambda_a=0.25,
                        total_measure=4e4, n_points=400)
        want = coefficient_of_variation(spec).cv
        assert abs(result.per_k[k].cv - want) / want < 0.05


def test_poisson_1d_degrees_follow_compound_poisson_erlang():
    # the 1D law is exact, so the direct simulation is an oracle for cpe
    config = ExperimentConfig(layout=POISSON_1D, extent=(2000.0,), lambda_b=1.0,
                              lambda_a=5.0, k_values=(2,), replicates=30, seed=14)
    result = run_experiment(config)
    spec = DistSpec(CPE, k=2, lambda_a=5.0, lambda_b=1.0)
    report = compare(result.per_k[2].histogram, spec)
    assert report.tv_distance < 0.02
    assert report.empirical.mean == pytest.approx(report.reference.mean, rel=0.05)


def test_fixed_count_windows_follow_fitted_compound_gamma():
    # under the calibration ensemble (exactly 100 stations per window) the
    # fitted one-parameter law holds tightly for k = 1 and 5
    domain = Domain((100.0, 100.0))
    lam = 10.0
    parts = {1: [], 5: []}
    config = ExperimentConfig(layout=HEX_GRID, extent=(100.0, 100.0), n_points=100,
                              lambda_a=lam * 0.01, k_values=(1, 5), seed=77)
    for rep in range(800):
        stations = gen_uniform(domain, 100, spawn_rng(77, 10, rep))
        hists = degrees_one_replicate(stations, config, replicate=rep)
        for k in (1, 5):
            parts[k].append(hists[k])
    table = {1: 3.53, 5: 21.17}
    for k in (1, 5):
        pooled = parts[k][0]
        for h in parts[k][1:]:
            pooled = pooled.merge(h)
        spec = DistSpec(CPG, k=k, lambda_a=0.1, lambda_b=0.01, shape=table[k])
        assert compare(pooled, spec).tv_distance < 0.03


# --- comparisons ------------------------------------------------------------


def test_compare_vanishes_for_samples_of_the_law_itself():
    spec = DistSpec(CPE, k=1, lambda_a=2.0, lambda_b=1.0)
    ns = np.arange(0, 200)
    from abrgg.analytic import cpe_pmf

    p = cpe_pmf(ns, spec)
    rng = spawn_rng(55)
    draws = rng.choice(ns, size=1_000_000, p=p / p.sum())
    hist = DegreeHistogram(counts=np.bincount(draws), k=1,
                           total_points=draws.size, n_edges=0)
    assert compare(hist, spec).tv_distance < 0.01


def test_compare_degenerate_histogram_is_far_from_spread_law():
    hist = DegreeHistogram(counts=np.array([0, 0, 0, 10_000]), k=1,
                           total_points=10_000, n_edges=0)
    spec = DistSpec(CPE, k=1, lambda_a=10.0, lambda_b=1.0)
    assert compare(hist, spec).tv_distance > 0.9


def test_compare_rejects_empty_histogram():
    hist = DegreeHistogram(counts=np.zeros(3, dtype=int), k=1,
                           total_points=0, n_edges=0)
    with pytest.raises(DataError):
        compare(hist, DistSpec(CPE, k=1, lambda_a=1.0, lambda_b=1.0))


def test_config_validation():
    with pytest.raises(DataError):
        ExperimentConfig(layout="nope", lambda_a=1.0, k_values=(1,))
    with pytest.raises(DataError):
        ExperimentConfig(layout=POISSON_2D, lambda_a=1.0, k_values=(1,),
                         extent=(10.0, 10.0))  # missing lambda_b
    with pytest.raises(DataError):
        ExperimentConfig(layout=LINE_GRID, lambda_a=1.0, k_values=(),
                         extent=(10.0,), spacing=1.0)
