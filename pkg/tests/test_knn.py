import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abrgg.errors import DataError
from abrgg.geometry import CLIPPED, Domain, PointSet, gen_poisson, gen_uniform, spawn_rng
from abrgg.knn import ShadowConfig, build_index, k_nearest, k_nearest_shadowed

from conftest import brute_k_nearest


def test_matches_brute_force_on_poisson_set(unit_square):
    pts = gen_poisson(unit_square, 1.0, 11)
    idx = build_index(pts)
    rng = spawn_rng(12)
    queries = rng.uniform(0, 10, size=(1000, 2))
    ids, dists = k_nearest(idx, queries, 5)
    for q, row_ids, row_d in zip(queries, ids, dists):
        ref_ids, ref_d = brute_k_nearest(pts, q, 5)
        assert np.array_equal(row_ids, ref_ids)
        assert row_d == pytest.approx(ref_d, rel=1e-12)


@pytest.mark.parametrize("boundary", ["torus", CLIPPED])
def test_matches_brute_force_bulk(boundary):
    # 10^4 random queries against an O(n) scan oracle
    dom = Domain((50.0, 50.0), boundary)
    rng = spawn_rng(21)
    pts = PointSet(dom, rng.uniform(0, 50, size=(400, 2)), "file")
    idx = build_index(pts)
    queries = rng.uniform(0, 50, size=(10_000, 2))
    ids, _ = k_nearest(idx, queries, 3)

    delta = np.abs(queries[:, None, :] - pts.coords[None, :, :])
    if boundary == "torus":
        delta = np.minimum(delta, 50.0 - delta)
    d = np.sqrt((delta**2).sum(axis=2))
    ref = np.argsort(d, axis=1, kind="stable")[:, :3]
    assert np.array_equal(ids, ref)


def test_single_point_set_answers_k1_only(line_domain):
    pts = PointSet(line_domain, [4.0], "file")
    idx = build_index(pts)
    ids, dists = k_nearest(idx, 1.0, 1)
    assert ids.tolist() == [0] and dists[0] == pytest.approx(3.0)
    with pytest.raises(DataError):
        k_nearest(idx, 1.0, 2)


def test_duplicate_coordinates_ordered_by_id(line_domain):
    pts = PointSet(line_domain, [5.0, 2.0, 5.0], "file")
    ids, dists = k_nearest(build_index(pts), 5.0, 3)
    assert ids.tolist() == [0, 2, 1]
    assert dists.tolist() == [0.0, 0.0, 3.0]


def test_grid_tie_break_by_id(line_domain):
    pts = PointSet(line_domain, [0.0, 2.0, 4.0, 6.0, 8.0], "line_grid")
    ids, dists = k_nearest(build_index(pts), 1.0, 2)
    assert ids.tolist() == [0, 1]
    assert dists.tolist() == [1.0, 1.0]


def test_k_equals_n_gives_full_ordering(unit_square):
    pts = gen_uniform(unit_square, 20, 3)
    ids, dists = k_nearest(build_index(pts), (5.0, 5.0), 20)
    assert sorted(ids.tolist()) == list(range(20))
    assert np.all(np.diff(dists) >= 0)


@given(st.integers(0, 2**32 - 1), st.integers(2, 25), st.booleans())
@settings(max_examples=40, deadline=None)
def test_index_equals_brute_force_property(seed, n, torus):
    dom = Domain((7.0, 7.0), "torus" if torus else CLIPPED)
    rng = spawn_rng(seed)
    pts = PointSet(dom, rng.uniform(0, 7, size=(n, 2)), "file")
    q = rng.uniform(0, 7, size=2)
    k = int(rng.integers(1, n + 1))
    ids, dists = k_nearest(build_index(pts), q, k)
    ref_ids, ref_d = brute_k_nearest(pts, q, k)
    assert np.array_equal(ids, ref_ids)
    assert dists == pytest.approx(ref_d, rel=1e-9)


def test_monotone_scaling_keeps_id_sequence(unit_square):
    pts = gen_uniform(unit_square, 30, 9)
    ids, dists = k_nearest(build_index(pts), (3.0, 4.0), 6)
    c = 250.0
    scaled = PointSet(Domain((10.0 * c, 10.0 * c)), pts.coords * c, "file")
    ids_c, dists_c = k_nearest(build_index(scaled), (3.0 * c, 4.0 * c), 6)
    assert np.array_equal(ids, ids_c)
    assert dists_c == pytest.approx(dists * c, rel=1e-12)


# --- shadowed ranking -------------------------------------------------------


def test_shadow_sigma_zero_reduces_to_geometric(unit_square):
    pts = gen_poisson(unit_square, 1.5, 17)
    idx = build_index(pts)
    rng = spawn_rng(18)
    queries = rng.uniform(0, 10, size=(50, 2))
    ids, _ = k_nearest(idx, queries, 4)
    sids, _ = k_nearest_shadowed(idx, queries, 4, ShadowConfig(0.0), spawn_rng(1))
    assert np.array_equal(ids, sids)


def test_shadowed_ranking_deterministic(unit_square):
    pts = gen_uniform(unit_square, 40, 5)
    idx = build_index(pts)
    a = k_nearest_shadowed(idx, (2.0, 2.0), 5, ShadowConfig(1.0), spawn_rng(77))
    b = k_nearest_shadowed(idx, (2.0, 2.0), 5, ShadowConfig(1.0), spawn_rng(77))
    assert np.array_equal(a[0], b[0])
    assert np.array_equal(a[1], b[1])


def test_shadowed_displacement_probability_matches_direct_simulation(unit_square):
    # P(chosen station != geometrically nearest) at sigma=1, k=1, N=50,
    # estimated over 1e5 users, against an independent direct simulation.
    pts = gen_uniform(unit_square, 50, 23)
    idx = build_index(pts)
    m = 100_000
    rng = spawn_rng(31)
    users = rng.uniform(0, 10, size=(m, 2))
    nearest, _ = k_nearest(idx, users, 1)
    chosen, _ = k_nearest_shadowed(idx, users, 1, ShadowConfig(1.0), spawn_rng(32))
    p_impl = np.mean(chosen[:, 0] != nearest[:, 0])

    # oracle: same estimate with its own distances, draws and argmin
    orng = spawn_rng(33)
    users2 = orng.uniform(0, 10, size=(m, 2))
    delta = np.abs(users2[:, None, :] - pts.coords[None, :, :])
    delta = np.minimum(delta, 10.0 - delta)
    d = np.sqrt((delta**2).sum(axis=2))
    s = orng.lognormal(mean=-0.5, sigma=1.0, size=d.shape)
    p_oracle = np.mean(np.argmin(d / s, axis=1) != np.argmin(d, axis=1))
    assert abs(p_impl - p_oracle) < 0.02


def test_shadow_config_validation():
    with pytest.raises(DataError):
        ShadowConfig(-0.5)
