import pytest

from minkval import (
    Halfspace,
    Mat,
    Q,
    apply_linear,
    clip_halfspace,
    contains_point,
    convex_hull,
    minkowski_sum,
    moment_vector,
    negate,
    polytope_equal,
    project_onto_line,
    support_point,
    support_value,
    translate,
    vec,
    volume,
)
from minkval.errors import DimensionMismatch, EmptyInput, ZeroDirection, ZeroNormal
from minkval.mc import mc_moment_vector, mc_volume
from minkval.polytope import facet_vector_areas, scale, second_moment_matrix


def test_hull_drops_interior_point():
    P = convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (Q(1, 4), Q(1, 4), Q(1, 4))])
    assert len(P.vertices) == 4
    assert P.intrinsic_dim == 3


def test_hull_collinear():
    P = convex_hull([(0, 0, 0), (1, 0, 0), (2, 0, 0)])
    assert P.vertices == (vec((0, 0, 0)), vec((2, 0, 0)))
    assert P.intrinsic_dim == 1


def test_hull_singleton():
    P = convex_hull([(1, 1, 1)])
    assert P.vertices == (vec((1, 1, 1)),)
    assert P.intrinsic_dim == 0
    assert volume(P) == 0
    assert contains_point(P, vec((1, 1, 1)))
    assert not contains_point(P, vec((1, 1, 2)))


def test_hull_errors():
    with pytest.raises(EmptyInput):
        convex_hull([])
    with pytest.raises(DimensionMismatch):
        convex_hull([(1, 0), (1, 0, 0)])


def test_hull_boundary_non_extreme_point():
    # midpoint of an edge must not survive as a vertex
    P = convex_hull([(0, 0, 0), (2, 0, 0), (0, 2, 0), (1, 0, 0), (0, 0, 2)])
    assert vec((1, 0, 0)) not in P.vertices
    assert len(P.vertices) == 4


def test_clip_cube(unit_cube):
    H = Halfspace(vec((1, 0, 0)), Q(1, 2))
    C = clip_halfspace(unit_cube, H)
    expected = convex_hull(
        [(x, y, z) for x in (0, Q(1, 2)) for y in (0, 1) for z in (0, 1)]
    )
    assert polytope_equal(C, expected)
    assert volume(C) == Q(1, 2)


def test_clip_simplex_matches_shear_image(facet_simplex):
    # the hyperplane x1 = x2 cuts off the piece fixed by the elementary map
    # e1 -> (e1+e2)/2; its image of S is exactly that piece
    H = Halfspace(vec((Q(1, 2), Q(-1, 2), 0)), Q(0))
    piece = clip_halfspace(facet_simplex, H)
    phi = Mat([[Q(1, 2), 0, 0], [Q(1, 2), 1, 0], [0, 0, 1]])
    image = apply_linear(phi, facet_simplex)
    assert polytope_equal(piece, image)
    assert piece.vertices == convex_hull([(Q(1, 2), Q(1, 2), 0), (0, 1, 0), (0, 0, 1)]).vertices


def test_clip_empty(unit_cube):
    assert clip_halfspace(unit_cube, Halfspace(vec((1, 0, 0)), Q(-1))) is None


def test_clip_zero_normal():
    with pytest.raises(ZeroNormal):
        Halfspace(vec((0, 0, 0)), Q(0))


def test_minkowski_segments_to_square():
    sq = minkowski_sum(convex_hull([(0, 0, 0), (1, 0, 0)]), convex_hull([(0, 0, 0), (0, 1, 0)]))
    assert sq.vertices == convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)]).vertices


def test_minkowski_point_translates(unit_cube):
    t = convex_hull([(Q(1, 2), Q(1, 3), Q(-2))])
    moved = minkowski_sum(unit_cube, t)
    assert polytope_equal(moved, translate(unit_cube, (Q(1, 2), Q(1, 3), Q(-2))))


def test_difference_cube_brute_force(unit_cube):
    # brute force over all 64 vertex sums
    sums = [tuple(a + b for a, b in zip(v, w)) for v in unit_cube.vertices for w in negate(unit_cube).vertices]
    expected = convex_hull(sums)
    got = minkowski_sum(unit_cube, negate(unit_cube))
    assert polytope_equal(got, expected)
    assert volume(got) == 8


def test_negate_apply_linear(unit_cube):
    seg = convex_hull([(0, 0, 0), (1, 0, 0)])
    assert negate(seg).vertices == (vec((-1, 0, 0)), vec((0, 0, 0)))
    assert polytope_equal(apply_linear(Mat.identity(3), unit_cube), unit_cube)
    # non-invertible map merges vertices
    proj = Mat([[1, 0, 0], [0, 1, 0], [0, 0, 0]])
    flat = apply_linear(proj, unit_cube)
    assert flat.intrinsic_dim == 2
    assert len(flat.vertices) == 4


def test_support_values(unit_cube, facet_simplex):
    assert support_value(unit_cube, vec((1, 1, 1))) == 3
    assert support_value(convex_hull([(0, 0, 0), (1, 0, 0)]), vec((-1, 0, 0))) == 0
    assert support_value(facet_simplex, vec((1, 1, 0))) == 1
    assert support_point(unit_cube, vec((1, 0, 0))) == (1, 0, 0)


def test_volume_and_moment(unit_cube, corner_simplex, facet_simplex, centered_cube):
    assert volume(unit_cube) == 1
    assert volume(corner_simplex) == Q(1, 6)
    assert volume(facet_simplex) == 0
    assert moment_vector(corner_simplex) == (Q(1, 24), Q(1, 24), Q(1, 24))
    assert moment_vector(centered_cube) == (0, 0, 0)
    assert moment_vector(facet_simplex) == (0, 0, 0)


def test_volume_moment_against_monte_carlo(corner_simplex):
    est, se = mc_volume(corner_simplex, samples=10**6, seed=11)
    assert abs(est - 1 / 6) <= 3 * se
    mest, mse = mc_moment_vector(corner_simplex, samples=10**6, seed=12)
    for got, want, s in zip(mest, (1 / 24,) * 3, mse):
        assert abs(got - want) <= 3 * s


def test_second_moments(unit_cube):
    sm = second_moment_matrix(unit_cube)
    assert sm.rows[0][0] == Q(1, 3)
    assert sm.rows[0][1] == Q(1, 4)


def test_project_onto_line():
    # the paper's section-3 segment [e1, e2]
    seg = convex_hull([(1, 0, 0), (0, 1, 0)])
    x = vec((1, 1, 0))
    p = project_onto_line(seg, x)
    assert p.vertices == (vec((Q(1, 2), Q(1, 2), 0)),)
    y = vec((-1, 1, 0))
    s = project_onto_line(seg, y)
    assert s.vertices == tuple(sorted([vec((Q(1, 2), Q(-1, 2), 0)), vec((Q(-1, 2), Q(1, 2), 0))]))
    flat = convex_hull([(1, 0, 0), (0, 1, 0), (2, 2, 0)])
    z = project_onto_line(flat, vec((0, 0, 1)))
    assert z.vertices == (vec((0, 0, 0)),)
    with pytest.raises(ZeroDirection):
        project_onto_line(seg, vec((0, 0, 0)))


def test_contains_and_equality(unit_cube, facet_simplex):
    assert contains_point(unit_cube, vec((Q(1, 2), Q(1, 2), Q(1, 2))))
    assert not contains_point(unit_cube, vec((2, 0, 0)))
    assert contains_point(facet_simplex, vec((Q(1, 3), Q(1, 3), Q(1, 3))))
    permuted = convex_hull([(0, 0, 1), (1, 0, 0), (0, 1, 0)])
    assert polytope_equal(permuted, facet_simplex)


def test_facet_vector_areas(unit_cube, facet_simplex):
    assert facet_vector_areas(facet_simplex) == ((Q(1, 2), Q(1, 2), Q(1, 2)),)
    totals = {}
    for a in facet_vector_areas(unit_cube):
        key = tuple(1 if c > 0 else (-1 if c < 0 else 0) for c in a)
        totals[key] = tuple(x + y for x, y in zip(totals.get(key, (0, 0, 0)), a))
    # simplicial pieces per cube facet sum to the six unit vector areas
    expected = {tuple(Q(s) if i == k else Q(0) for i in range(3)) for k in range(3) for s in (-1, 1)}
    assert set(totals.values()) == expected
    # closed surface: total vector area vanishes
    total = tuple(sum(a[i] for a in facet_vector_areas(unit_cube)) for i in range(3))
    assert total == (0, 0, 0)


def test_scale_homogeneity(corner_simplex):
    assert volume(scale(corner_simplex, Q(3, 2))) == Q(27, 8) * volume(corner_simplex)
    assert polytope_equal(scale(corner_simplex, 1), corner_simplex)
