import pytest

from minkval import Q, convex_hull, vec


@pytest.fixture(scope="session")
def unit_cube():
    return convex_hull([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])


@pytest.fixture(scope="session")
def centered_cube():
    h = Q(1, 2)
    return convex_hull([(x * h, y * h, z * h) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)])


@pytest.fixture(scope="session")
def big_centered_cube():
    return convex_hull([(Q(x), Q(y), Q(z)) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)])


@pytest.fixture(scope="session")
def corner_simplex():
    # T = conv{0, e1, e2, e3}
    return convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])


@pytest.fixture(scope="session")
def facet_simplex():
    # S = conv{e1, e2, e3}
    return convex_hull([(1, 0, 0), (0, 1, 0), (0, 0, 1)])


@pytest.fixture(scope="session")
def cross_polytope():
    return convex_hull([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)])


@pytest.fixture
def e1():
    return vec((1, 0, 0))
