"""The operator zoo: o-hull, moment vector/body and their star variants,
projection body, difference and centroid bodies, and the two classified
linear-combination families, all evaluated exactly through support oracles.

Non-polytopal bodies (moment bodies, projection bodies, combinations) are
support oracles: a direction u maps to the exact support value together with
a boundary point attaining it.  Comparisons of such bodies are always made
at explicit direction sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .errors import (
    DegenerateDirections,
    DimensionMismatch,
    InvalidSpec,
    SingularMatrix,
    ZeroDirection,
    ZeroVolume,
)
from .linalg import Mat, dot, is_zero_vec, vadd, vec, vneg, vscale, vsub, zero_vec
from .polytope import (
    Polytope,
    convex_hull,
    facet_vector_areas,
    moment_vector,
    negate,
    minkowski_sum,
    simplex_volume_moment,
    support_point,
    support_value,
    triangulation,
    volume,
)
from .rational import ONE, ZERO, Q, rat


@dataclass(frozen=True)
class SupportBody:
    """Convex body given by an exact support oracle.

    eval(u) returns (value, boundary_point) with <u, point> == value; the
    oracle is positively 1-homogeneous and subadditive.
    """

    ambient_dim: int
    kind: str
    _fn: Callable

    def eval(self, u):
        u = vec(u)
        if len(u) != self.ambient_dim:
            raise DimensionMismatch("direction dimension mismatch")
        if is_zero_vec(u):
            raise ZeroDirection("support oracle requires a nonzero direction")
        return self._fn(u)

    def value(self, u):
        return self.eval(u)[0]


def polytope_body(P: Polytope) -> SupportBody:
    def fn(u):
        return support_value(P, u), support_point(P, u)

    return SupportBody(P.ambient_dim, "polytope-backed", fn)


# ---------------------------------------------------------------------------
# Basic operators


@lru_cache(maxsize=512)
def o_hull(K: Polytope) -> Polytope:
    """conv({0} u K); equals K when the origin already lies in K.

    Memoized so that repeated star-operator evaluations on one body reuse the
    hulled result (and its cached triangulation); polytopes are immutable.
    """
    o = zero_vec(K.ambient_dim)
    if o in K.vertices:
        return K
    return convex_hull(list(K.vertices) + [o])


def difference_body(K: Polytope) -> Polytope:
    return minkowski_sum(K, negate(K))


def m_star(K: Polytope):
    """Moment vector of K_o \\ K: m(K_o) - m(K), exact since K is contained
    in K_o and the integrand is additive."""
    return vsub(moment_vector(o_hull(K)), moment_vector(K))


# ---------------------------------------------------------------------------
# Moment body


def _split_cell_moments(points, vals, acc):
    """Accumulate (moment of positive part, moment of negative part) of a
    simplex with vertex support values `vals` against the splitting
    hyperplane; recursive edge subdivision keeps everything simplicial."""
    neg = [i for i, c in enumerate(vals) if c < 0]
    if not neg:
        v, m = simplex_volume_moment(points)
        acc[0] = vadd(acc[0], m)
        return
    pos = [i for i, c in enumerate(vals) if c > 0]
    if not pos:
        v, m = simplex_volume_moment(points)
        acc[1] = vadd(acc[1], m)
        return
    a, b = neg[0], pos[0]
    t = vals[a] / (vals[a] - vals[b])
    w = vadd(points[a], vscale(t, vsub(points[b], points[a])))
    pa = list(points)
    va = list(vals)
    pa[a] = w
    va[a] = ZERO
    _split_cell_moments(pa, va, acc)
    pb = list(points)
    vb = list(vals)
    pb[b] = w
    vb[b] = ZERO
    _split_cell_moments(pb, vb, acc)


def halfspace_split_moments(K: Polytope, u):
    """(m(K+), m(K-)) for the split of K by the hyperplane <u, y> = 0,
    both exact; zero vectors for lower-dimensional K."""
    n = K.ambient_dim
    if K.intrinsic_dim < n:
        z = zero_vec(n)
        return z, z
    points, cells = triangulation(K)
    acc = [zero_vec(n), zero_vec(n)]
    uvals = [dot(u, p) for p in points]
    for cell in cells:
        cpts = [points[i] for i in cell]
        cvals = [uvals[i] for i in cell]
        mn, mx = min(cvals), max(cvals)
        if mn >= 0:
            _, m = simplex_volume_moment(cpts)
            acc[0] = vadd(acc[0], m)
        elif mx <= 0:
            _, m = simplex_volume_moment(cpts)
            acc[1] = vadd(acc[1], m)
        else:
            _split_cell_moments(cpts, cvals, acc)
    return acc[0], acc[1]


def moment_body_eval(K: Polytope, u):
    """h(MK, u) = integral over K of |<u, y>| dy, with the boundary point
    m(K+) - m(K-) attaining it."""
    u = vec(u)
    if is_zero_vec(u):
        raise ZeroDirection("moment body oracle requires a nonzero direction")
    if len(u) != K.ambient_dim:
        raise DimensionMismatch("direction dimension mismatch")
    mp, mm = halfspace_split_moments(K, u)
    point = vsub(mp, mm)
    return dot(u, point), point


def moment_body(K: Polytope) -> SupportBody:
    return SupportBody(K.ambient_dim, "moment-type", lambda u: moment_body_eval(K, u))


def moment_body_star_eval(K: Polytope, u):
    """h(M*K, u): the moment-body integral over K_o \\ K."""
    u = vec(u)
    if is_zero_vec(u):
        raise ZeroDirection("moment body oracle requires a nonzero direction")
    vo, po = moment_body_eval(o_hull(K), u)
    vk, pk = moment_body_eval(K, u)
    return vo - vk, vsub(po, pk)


def moment_body_star(K: Polytope) -> SupportBody:
    Ko = o_hull(K)

    def fn(u):
        vo, po = moment_body_eval(Ko, u)
        vk, pk = moment_body_eval(K, u)
        return vo - vk, vsub(po, pk)

    return SupportBody(K.ambient_dim, "moment-type", fn)


def centroid_body_eval(K: Polytope, u):
    """h(Gamma K, u) = h(MK, u) / vol(K).  Not a valuation; exposed for the
    harness counterexample."""
    v = volume(K)
    if v == 0:
        raise ZeroVolume("centroid body requires positive volume")
    return moment_body_eval(K, u)[0] / v


# ---------------------------------------------------------------------------
# Projection body


def projection_body_eval(K: Polytope, u):
    """h(PiK, u) = (n-1)-volume of the shadow of K on the hyperplane
    orthogonal to u: half the sum of |<u, a_F>| over exact facet vector
    areas.  A body of intrinsic dimension n-1 counts as two coincident
    facets; anything thinner projects to measure zero and yields 0."""
    u = vec(u)
    if is_zero_vec(u):
        raise ZeroDirection("projection body oracle requires a nonzero direction")
    if len(u) != K.ambient_dim:
        raise DimensionMismatch("direction dimension mismatch")
    n = K.ambient_dim
    if K.intrinsic_dim < n - 1:
        return ZERO, zero_vec(n)
    areas = facet_vector_areas(K)
    if K.intrinsic_dim == n - 1:
        a = areas[0]
        s = dot(u, a)
        return abs(s), a if s >= 0 else vneg(a)
    half = Q(1, 2)
    val = ZERO
    pt = zero_vec(n)
    for a in areas:
        s = dot(u, a)
        if s >= 0:
            val += s
            pt = vadd(pt, a)
        else:
            val -= s
            pt = vsub(pt, a)
    return half * val, vscale(half, pt)


def projection_body(K: Polytope) -> SupportBody:
    return SupportBody(K.ambient_dim, "projection-type", lambda u: projection_body_eval(K, u))


# ---------------------------------------------------------------------------
# The two classified families


DEGREE_1 = "degree1"
DEGREE_NP1 = "degree_np1"


@dataclass(frozen=True)
class ValuationSpec:
    """Coefficients (a1, a2, a3, a4) of one of the two classified families.

    degree1:     a1 K + a2 (-K) + a3 K_o + a4 (-K_o), all coefficients >= 0.
    degree_np1:  a1 m(K) + a2 m*(K) + a3 MK + a4 M*K, with a3, a4 >= 0 and
                 a1, a2 unrestricted (point summands admit any sign).
    """

    family: str
    a1: object
    a2: object
    a3: object
    a4: object

    def __post_init__(self):
        if self.family not in (DEGREE_1, DEGREE_NP1):
            raise InvalidSpec(f"unknown family {self.family!r}")
        for name in ("a1", "a2", "a3", "a4"):
            object.__setattr__(self, name, rat(getattr(self, name)))
        if self.family == DEGREE_1:
            if any(a < 0 for a in self.coefficients):
                raise InvalidSpec("degree-1 family requires nonnegative coefficients")
        else:
            if self.a3 < 0 or self.a4 < 0:
                raise InvalidSpec("degree-(n+1) family requires a3, a4 >= 0")

    @property
    def coefficients(self):
        return (self.a1, self.a2, self.a3, self.a4)


def apply_valuation_eval(spec: ValuationSpec, K: Polytope, u):
    """Exact support value of the combined operator at direction u."""
    return _valuation_eval(spec, K, u)[0]


def valuation_support_point(spec: ValuationSpec, K: Polytope, u):
    return _valuation_eval(spec, K, u)[1]


def _valuation_eval(spec, K, u):
    u = vec(u)
    if is_zero_vec(u):
        raise ZeroDirection("nonzero direction required")
    if spec.family == DEGREE_1:
        Ko = o_hull(K)
        mu = vneg(u)
        val = ZERO
        pt = zero_vec(K.ambient_dim)
        for coeff, body, direction, sign in (
            (spec.a1, K, u, 1),
            (spec.a2, K, mu, -1),
            (spec.a3, Ko, u, 1),
            (spec.a4, Ko, mu, -1),
        ):
            if coeff == 0:
                continue
            val += coeff * support_value(body, direction)
            sp = support_point(body, direction)
            pt = vadd(pt, vscale(sign * coeff, sp))
        return val, pt
    mK = moment_vector(K)
    msK = m_star(K)
    val = spec.a1 * dot(mK, u) + spec.a2 * dot(msK, u)
    pt = vadd(vscale(spec.a1, mK), vscale(spec.a2, msK))
    if spec.a3 != 0:
        v3, p3 = moment_body_eval(K, u)
        val += spec.a3 * v3
        pt = vadd(pt, vscale(spec.a3, p3))
    if spec.a4 != 0:
        v4, p4 = moment_body_star_eval(K, u)
        val += spec.a4 * v4
        pt = vadd(pt, vscale(spec.a4, p4))
    return val, pt


def valuation_body(spec: ValuationSpec, K: Polytope) -> SupportBody:
    return SupportBody(K.ambient_dim, "combination", lambda u: _valuation_eval(spec, K, u))


# ---------------------------------------------------------------------------
# Transforms and volume bounds


def transform_support_body(phi: Mat, A: SupportBody) -> SupportBody:
    """The image body phi A: h(phi A, u) = h(A, phi^t u), boundary points map
    through phi."""
    if phi.det == 0:
        raise SingularMatrix("support-body transform requires an invertible matrix")
    phit = phi.transpose()

    def fn(u):
        val, pt = A.eval(phit.apply(u))
        return val, phi.apply(pt)

    return SupportBody(A.ambient_dim, A.kind, fn)


def volume_bounds(A: SupportBody, directions):
    """Exact sandwich for vol(A): the volume of the hull of the oracle's
    boundary points (inner) and of the intersection of the supporting
    halfspaces (outer), at the given directions.

    Raises DegenerateDirections when the directions do not positively span,
    i.e. the outer intersection is unbounded.
    """
    dirs = [vec(u) for u in directions]
    if not dirs:
        raise DegenerateDirections("no directions")
    evals = [A.eval(u) for u in dirs]
    inner = convex_hull([pt for _, pt in evals])
    lower = volume(inner)

    values = [v for v, _ in evals]
    n = A.ambient_dim
    hull_dirs = convex_hull(dirs)
    if hull_dirs.intrinsic_dim < n or not _strictly_inside(hull_dirs, zero_vec(n)):
        raise DegenerateDirections("directions do not positively span the space")

    center = None
    if inner.intrinsic_dim == n:
        c = moment_vector(inner)
        vol_inner = volume(inner)
        c = vscale(ONE / vol_inner, c)
        if all(dot(u, c) < val for u, val in zip(dirs, values)):
            center = c
    if center is None and all(val > 0 for val in values):
        center = zero_vec(n)

    if center is not None:
        upper = _outer_volume_polar(dirs, values, center)
    else:
        upper = _outer_volume_enumeration(dirs, values, n)
    return lower, upper


def _strictly_inside(P: Polytope, x):
    hd = P.hull_data
    return all(h.slack(x) > 0 for h in hd.facets)


def _outer_volume_polar(dirs, values, z):
    """Volume of {x : <u_i, x> <= c_i} via polar duality around the interior
    point z (c_i - <u_i, z> > 0 for all i)."""
    shifted = [c - dot(u, z) for u, c in zip(dirs, values)]
    dual_pts = [vscale(ONE / s, u) for u, s in zip(dirs, shifted)]
    D = convex_hull(dual_pts)
    verts = []
    for h in D.hull_data.facets:
        if h.offset <= 0:
            raise DegenerateDirections("outer intersection is unbounded")
        verts.append(vscale(ONE / h.offset, h.normal))
    return volume(convex_hull(verts))


def _outer_volume_enumeration(dirs, values, n):
    """Brute-force vertex enumeration of the halfspace intersection; used
    when no strictly interior point is available (degenerate bodies)."""
    from itertools import combinations

    from .linalg import solve

    verts = []
    m = len(dirs)
    for idx in combinations(range(m), n):
        sol = solve([dirs[i] for i in idx], [values[i] for i in idx])
        if sol is None:
            continue
        if all(dot(dirs[i], sol) <= values[i] for i in range(m)):
            verts.append(sol)
    if not verts:
        return ZERO
    return volume(convex_hull(verts))


# ---------------------------------------------------------------------------
# Operator registry (descriptor table is stated, not inferred)


@dataclass(frozen=True)
class OperatorDescriptor:
    name: str
    variance: str  # "equivariant" | "contravariant"
    det_exponent: object  # q in Phi(phi K) = |det phi|^q phi Phi K
    degree_slope: int  # homogeneity degree r = slope * n + shift
    degree_shift: int

    def degree(self, n: int):
        return Q(self.degree_slope * n + self.degree_shift)


@dataclass(frozen=True)
class Operator:
    """Uniform harness-facing interface over the operator zoo.

    Body-valued operators expose support(K, u); the two vector-valued ones
    (moment vector and its star variant) expose vector(K) instead.
    """

    descriptor: OperatorDescriptor
    support: Optional[Callable] = None
    vector: Optional[Callable] = None
    body: Optional[Callable] = None

    @property
    def name(self):
        return self.descriptor.name

    @property
    def is_vector(self):
        return self.vector is not None


def _d(name, variance, q, slope, shift):
    return OperatorDescriptor(name, variance, Q(q), slope, shift)


OPERATORS = {
    "Id": Operator(
        _d("Id", "equivariant", 0, 0, 1),
        support=lambda K, u: support_value(K, u),
        body=lambda K: K,
    ),
    "Neg": Operator(
        _d("Neg", "equivariant", 0, 0, 1),
        support=lambda K, u: support_value(K, vneg(vec(u))),
        body=negate,
    ),
    "OHull": Operator(
        _d("OHull", "equivariant", 0, 0, 1),
        support=lambda K, u: support_value(o_hull(K), u),
        body=o_hull,
    ),
    "NegOHull": Operator(
        _d("NegOHull", "equivariant", 0, 0, 1),
        support=lambda K, u: support_value(o_hull(K), vneg(vec(u))),
        body=lambda K: negate(o_hull(K)),
    ),
    "MomentVec": Operator(
        _d("MomentVec", "equivariant", 1, 1, 1),
        support=lambda K, u: dot(moment_vector(K), vec(u)),
        vector=moment_vector,
    ),
    "MomentVecStar": Operator(
        _d("MomentVecStar", "equivariant", 1, 1, 1),
        support=lambda K, u: dot(m_star(K), vec(u)),
        vector=m_star,
    ),
    "MomentBody": Operator(
        _d("MomentBody", "equivariant", 1, 1, 1),
        support=lambda K, u: moment_body_eval(K, u)[0],
    ),
    "MomentBodyStar": Operator(
        _d("MomentBodyStar", "equivariant", 1, 1, 1),
        support=lambda K, u: moment_body_star_eval(K, u)[0],
    ),
    "ProjBody": Operator(
        _d("ProjBody", "contravariant", 1, 1, -1),
        support=lambda K, u: projection_body_eval(K, u)[0],
    ),
    "DiffBody": Operator(
        _d("DiffBody", "equivariant", 0, 0, 1),
        support=lambda K, u: support_value(K, u) + support_value(K, vneg(vec(u))),
        body=difference_body,
    ),
    "CentroidBody": Operator(
        _d("CentroidBody", "equivariant", 0, 1, 1),
        support=lambda K, u: _centroid_support_total(K, u),
    ),
}

VALUATION_BASIS = ("Id", "Neg", "OHull", "NegOHull", "MomentVec", "MomentVecStar", "MomentBody", "MomentBodyStar")


def _centroid_support_total(K, u):
    """Centroid-body support extended by Gamma(lower-dimensional) = {0} so
    the valuation counterexample is evaluable on hyperplane splits."""
    if volume(K) == 0:
        return ZERO
    return centroid_body_eval(K, u)


def operator_body(name: str, K: Polytope) -> SupportBody:
    """Support oracle of a named body-valued operator applied to K."""
    if name == "MomentBody":
        return moment_body(K)
    if name == "MomentBodyStar":
        return moment_body_star(K)
    if name == "ProjBody":
        return projection_body(K)
    op = OPERATORS[name]
    if op.body is not None:
        return polytope_body(op.body(K))
    if op.vector is not None:
        point = op.vector(K)
        return SupportBody(K.ambient_dim, "polytope-backed", lambda u: (dot(point, vec(u)), point))
    raise KeyError(f"no body form for operator {name}")
