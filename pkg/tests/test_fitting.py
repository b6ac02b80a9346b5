import numpy as np
import pytest

from abrgg.errors import DataError, NumericError
from abrgg.fitting import (
    extrapolate_ak,
    fit_ak,
    fit_poisson_voronoi_shapes,
    sample_cumulative_areas,
)
from abrgg.geometry import spawn_rng

TABLE = {1: 3.53, 2: 7.19, 3: 11.06, 4: 15.21, 5: 21.17}


def gamma_draws(shape, k, size, seed):
    rng = spawn_rng(seed)
    return rng.gamma(shape, k / shape, size=size)


@pytest.mark.parametrize("shape", [2.0, 3.5, 7.0, 20.0])
def test_fit_recovers_generating_shape(shape):
    k = 3
    samples = gamma_draws(shape, k, 100_000, seed=int(shape * 10))
    result = fit_ak(samples, k)
    assert result.shape == pytest.approx(shape, rel=0.05)
    assert result.chi2 >= 0
    assert result.sample_size == 100_000


def test_fit_recovers_shape_from_lattice_valued_samples():
    # samples quantized to a coarse measurement grid, as the 2D sampler emits
    width = 0.1
    raw = gamma_draws(3.5, 1, 200_000, seed=7)
    quantized = np.rint(raw / width) * width
    result = fit_ak(quantized, 1, lattice_width=width)
    assert result.shape == pytest.approx(3.5, rel=0.05)


def test_fit_is_bin_robust():
    samples = gamma_draws(7.0, 2, 1_000_000, seed=11)
    a50 = fit_ak(samples, 2, bin_count=50).shape
    a200 = fit_ak(samples, 2, bin_count=200).shape
    assert abs(a200 - a50) / a50 < 0.03


def test_fit_is_deterministic():
    samples = gamma_draws(3.5, 1, 50_000, seed=3)
    assert fit_ak(samples, 1).shape == fit_ak(samples, 1).shape


def test_fit_input_validation():
    with pytest.raises(NumericError, match="degenerate"):
        fit_ak(np.full(10_000, 2.0), 2)
    with pytest.raises(DataError, match="5%"):
        fit_ak(gamma_draws(3.5, 1, 10_000, seed=1) * 3.0, 1)
    with pytest.raises(DataError):
        fit_ak(np.array([1.0, 2.0]), 1)
    with pytest.raises(DataError):
        fit_ak(gamma_draws(3.5, 1, 1000, seed=2), 1, bin_count=2)


# --- extrapolation ----------------------------------------------------------


def lstsq_oracle(pairs, k):
    # direct normal equations, independent of the implementation
    ks = np.array([p[0] for p in pairs], dtype=float)
    a = np.array([p[1] for p in pairs], dtype=float)
    slope = ((ks - ks.mean()) * (a - a.mean())).sum() / ((ks - ks.mean()) ** 2).sum()
    return a.mean() + slope * (k - ks.mean())


def test_extrapolate_beyond_table_is_least_squares_line():
    want = lstsq_oracle(sorted(TABLE.items()), 10)
    assert want == pytest.approx(41.942, abs=1e-9)
    assert extrapolate_ak(10, TABLE) == pytest.approx(want, rel=1e-9)
    assert extrapolate_ak(50, TABLE) == pytest.approx(
        lstsq_oracle(sorted(TABLE.items()), 50), rel=1e-9
    )


def test_extrapolate_returns_fitted_value_inside_table():
    assert extrapolate_ak(3, TABLE) == 11.06


def test_extrapolate_needs_two_points():
    with pytest.raises(DataError):
        extrapolate_ak(4, {1: 3.53})
    with pytest.raises(DataError):
        extrapolate_ak(0, TABLE)


# --- sampling pipeline ------------------------------------------------------


def test_pipeline_samples_have_unit_mean_scaling():
    samples, width, meta = sample_cumulative_areas(
        n_points=64, k_max=3, iterations=40, epsilon2=0.1, seed=5
    )
    assert meta["samples_per_k"] == 40 * 64
    assert width == pytest.approx(0.1, rel=0.05)
    for k in (1, 2, 3):
        assert samples[k].mean() == pytest.approx(k, rel=1e-12)


def test_pilot_pipeline_shapes_increase_with_k():
    results = fit_poisson_voronoi_shapes(k_max=3, iterations=300, seed=20)
    shapes = [r.shape for r in results]
    assert shapes[0] < shapes[1] < shapes[2]
    assert shapes[0] == pytest.approx(TABLE[1], rel=0.15)  # pilot-scale noise


@pytest.mark.slow
def test_pipeline_first_shape_at_published_pitch():
    results = fit_poisson_voronoi_shapes(
        k_max=1, iterations=10_000, epsilon2=0.1, seed=4, workers=-1
    )
    assert abs(results[0].shape - TABLE[1]) <= 0.15


@pytest.mark.slow
def test_pipeline_fifth_shape_at_finer_pitch():
    # at pitch^2 = 0.1 mean cells the measurement noise biases the k=5 shape
    # about -5%; a 4x finer pitch brings it inside the published value +- 1.0
    results = fit_poisson_voronoi_shapes(
        k_max=5, iterations=5_000, epsilon2=0.025, seed=4, workers=-1
    )
    assert abs(results[-1].shape - TABLE[5]) <= 1.0


def test_fit_result_serializes():
    result = fit_ak(gamma_draws(3.5, 1, 20_000, seed=9), 1, metadata={"run": "x"})
    text = result.to_json()
    assert '"a_k"' in text and '"run": "x"' in text
