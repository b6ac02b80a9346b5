import numpy as np
import pytest

from abrgg.geometry import Domain, PointSet


@pytest.fixture
def unit_square():
    return Domain((10.0, 10.0))


@pytest.fixture
def line_domain():
    return Domain((10.0,))


def brute_k_nearest(points: PointSet, query, k: int):
    """Independent O(n) reference: sort every point by (distance, id).

    Deliberately avoids the package's index and distance code paths.
    """
    q = np.asarray(query, dtype=float).reshape(1, -1)
    delta = np.abs(points.coords - q)
    if points.domain.boundary == "torus":
        ext = np.asarray(points.domain.extent)
        delta = np.minimum(delta, ext - delta)
    d = np.sqrt((delta**2).sum(axis=1))
    order = np.lexsort((np.arange(d.size), d))[:k]
    return order, d[order]
