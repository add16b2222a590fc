"""Exact convex polytopes in canonical V-representation.

A Polytope stores exactly its extreme points, sorted lexicographically, so
polytope equality is structural comparison.  The H-representation (facet
halfspaces plus affine-hull equations), a boundary triangulation and a fan
dissection are computed once per polytope and cached; they feed volumes,
moment vectors, facet vector areas and membership tests.

The hull algorithm is incremental insertion with exact orientation
predicates (beneath-beyond), run in coordinates of the affine hull so that
lower-dimensional bodies are first class.  Built for desk scale: ambient
dimension <= 5-ish, up to a few hundred points.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .errors import (
    DimensionMismatch,
    EmptyInput,
    ZeroDirection,
    ZeroNormal,
)
from .linalg import (
    Mat,
    _det as _gauss_det,
    cross,
    dot,
    is_zero_vec,
    nullspace,
    primitive,
    rank,
    vadd,
    vec,
    vscale,
    vsub,
    zero_vec,
)
from .rational import ONE, ZERO, Q, rat


@dataclass(frozen=True)
class Halfspace:
    """{x : <normal, x> <= offset}; the normal is never unit-normalized."""

    normal: tuple
    offset: object

    def __post_init__(self):
        if is_zero_vec(self.normal):
            raise ZeroNormal("halfspace normal must be nonzero")

    def complement(self) -> "Halfspace":
        """The opposite closed halfspace {x : <normal, x> >= offset}."""
        return Halfspace(tuple(-a for a in self.normal), -self.offset)

    def slack(self, x):
        return self.offset - dot(self.normal, x)


class _HullData:
    """Derived geometry shared by integral and membership routines.

    points     - internal point list (may include non-extreme boundary points
                 left over from incremental insertion; they are valid for
                 dissections)
    cells      - fan dissection of the polytope from points[0], each cell a
                 tuple of d+1 indices into points (d = intrinsic dimension)
    boundary   - simplicial boundary facets as (index tuple, ambient outward
                 normal); empty for intrinsic dimension < 2
    facets     - deduplicated ambient facet halfspaces
    affine_eqs - ambient equations <a, x> = b pinning the affine hull
    """

    __slots__ = ("points", "cells", "boundary", "facets", "affine_eqs")

    def __init__(self, points, cells, boundary, facets, affine_eqs):
        self.points = points
        self.cells = cells
        self.boundary = boundary
        self.facets = facets
        self.affine_eqs = affine_eqs


class Polytope:
    """Nonempty compact convex polytope with exact rational vertices."""

    __slots__ = ("ambient_dim", "vertices", "intrinsic_dim", "_hull", "_volume", "_moment", "_areas")

    def __init__(self, ambient_dim, vertices, intrinsic_dim, hull_data=None):
        self.ambient_dim = ambient_dim
        self.vertices = vertices
        self.intrinsic_dim = intrinsic_dim
        self._hull = hull_data
        self._volume = None
        self._moment = None
        self._areas = None

    def __eq__(self, other):
        return (
            isinstance(other, Polytope)
            and self.ambient_dim == other.ambient_dim
            and self.vertices == other.vertices
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.vertices))

    def __repr__(self):
        vs = ", ".join("(" + ",".join(map(str, v)) + ")" for v in self.vertices[:6])
        more = "" if len(self.vertices) <= 6 else f", ... {len(self.vertices)} vertices"
        return f"Polytope(dim={self.ambient_dim}, intrinsic={self.intrinsic_dim}, [{vs}{more}])"

    @property
    def hull_data(self) -> _HullData:
        if self._hull is None:
            rebuilt = convex_hull(self.vertices)
            self._hull = rebuilt._hull
        return self._hull

    @property
    def facets(self):
        return self.hull_data.facets

    @property
    def affine_eqs(self):
        return self.hull_data.affine_eqs


def convex_hull(points) -> Polytope:
    """Canonical hull of a nonempty point set; exact.

    Vertices come out sorted lexicographically and are exactly the extreme
    points.  Facets (relative to the affine hull), the affine-hull equations
    and a fan dissection are attached.
    """
    pts = [vec(p) for p in points]
    if not pts:
        raise EmptyInput("convex hull of an empty point set")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise DimensionMismatch("points of mixed dimension")
    pts = sorted(set(pts))
    p0 = pts[0]

    # Affine-rank reduction: greedy basis of difference vectors.
    basis = []
    basis_idx = []
    for i in range(1, len(pts)):
        d = vsub(pts[i], p0)
        if rank(basis + [d]) > len(basis):
            basis.append(d)
            basis_idx.append(i)
    d = len(basis)

    affine_eqs = _affine_equations(basis, p0, n)

    if d == 0:
        hull = _HullData((p0,), ((0,),), (), (), affine_eqs)
        return Polytope(n, (p0,), 0, hull)

    if d == n:
        chart = _IdentityChart()
        cpts = pts
    else:
        chart = _Chart(p0, basis, n)
        cpts = [chart.to_local(p) for p in pts]

    if d == 1:
        ts = [c[0] for c in cpts]
        imax = max(range(len(ts)), key=lambda i: ts[i])
        verts = tuple(sorted((pts[0], pts[imax])))
        lo, hi = ts[0], ts[imax]
        facets = (
            chart.lift_halfspace((ONE,), hi),
            chart.lift_halfspace((-ONE,), -lo),
        )
        hull = _HullData(tuple(pts), ((0, imax),), (), facets, affine_eqs)
        return Polytope(n, verts, 1, hull)

    facet_list = _incremental_hull(cpts, d, basis_idx)

    # Deduplicate geometric facets and keep only extreme vertices: a point is
    # a vertex iff its active facet normals span the intrinsic dimension.
    seen = {}
    for verts_idx, normal, offset in facet_list:
        seen.setdefault((normal, offset), []).append(verts_idx)
    facets = tuple(chart.lift_halfspace(nrm, off) for (nrm, off) in seen)

    candidates = sorted({i for verts_idx, _, _ in facet_list for i in verts_idx})
    extreme = []
    for i in candidates:
        active = [nrm for (nrm, off) in seen if dot(nrm, cpts[i]) == off]
        if rank(active) == d:
            extreme.append(i)
    verts = tuple(sorted(pts[i] for i in extreme))

    cells = []
    boundary = []
    for verts_idx, normal, offset in facet_list:
        boundary.append((verts_idx, chart.lift_direction(normal)))
        if 0 not in verts_idx and dot(normal, cpts[0]) != offset:
            cells.append((0,) + verts_idx)

    hull = _HullData(tuple(pts), tuple(cells), tuple(boundary), facets, affine_eqs)
    return Polytope(n, verts, d, hull)


class _IdentityChart:
    """Trivial chart for full-dimensional hulls (the common case)."""

    __slots__ = ()

    def to_local(self, x):
        return x

    def lift_direction(self, nu):
        return nu

    def lift_halfspace(self, nu, beta) -> Halfspace:
        return Halfspace(nu, beta)


class _Chart:
    """Exact affine coordinates on the hull's affine span.

    local(x) = L (x - p0) with L = (B^t B)^{-1} B^t, where B has the basis
    difference vectors as columns.  The same L lifts halfspaces back to
    ambient space.
    """

    __slots__ = ("p0", "L")

    def __init__(self, p0, basis, n):
        bt = basis  # rows of B^t
        gram = Mat([[dot(a, b) for b in bt] for a in bt])
        ginv = gram.inverse()
        self.p0 = p0
        self.L = [ginv.apply(tuple(row[k] for row in bt)) for k in range(n)]
        # self.L[k] is column k of L; kept column-wise for lifting.

    def to_local(self, x):
        diff = vsub(x, self.p0)
        d = len(self.L[0])
        out = [ZERO] * d
        for k, c in enumerate(diff):
            if c != 0:
                col = self.L[k]
                for j in range(d):
                    out[j] += c * col[j]
        return tuple(out)

    def lift_direction(self, nu):
        """Ambient vector w with <w, x> = <nu, local(x)> + const on the span."""
        return primitive(tuple(dot(col, nu) for col in self.L))

    def lift_halfspace(self, nu, beta) -> Halfspace:
        w_raw = tuple(dot(col, nu) for col in self.L)
        w = primitive(w_raw)
        # primitive() rescales by a positive factor; rescale the offset too.
        k = next(i for i, c in enumerate(w_raw) if c != 0)
        factor = w[k] / w_raw[k]
        return Halfspace(w, factor * (beta + dot(w_raw, self.p0)))


def _affine_equations(basis, p0, n):
    eqs = []
    for a in nullspace(basis) if basis else [tuple(ONE if j == i else ZERO for j in range(n)) for i in range(n)]:
        a = primitive(a, orient=True)
        eqs.append((a, dot(a, p0)))
    return tuple(sorted(eqs))


def _hyperplane_through(points_local):
    """(nu, beta) with <nu, x> = beta through d affinely independent points."""
    p = points_local[0]
    diffs = [vsub(q, p) for q in points_local[1:]]
    ns = nullspace(diffs) if diffs else [(ONE,)]
    if len(ns) != 1:
        raise ArithmeticError("degenerate facet candidate")
    nu = primitive(ns[0])
    return nu, dot(nu, p)


def _incremental_hull(cpts, d, basis_idx):
    """Beneath-beyond hull in R^d; returns simplicial facets
    (sorted vertex index tuple, outward normal, offset)."""
    init = [0] + basis_idx
    ref = tuple(sum(cpts[i][k] for i in init) / Q(d + 1) for k in range(d))

    facets = {}
    ridge_map = {}
    next_id = 0

    def add_facet(verts_idx):
        nonlocal next_id
        nu, beta = _hyperplane_through([cpts[i] for i in verts_idx])
        side = dot(nu, ref)
        if side == beta:
            raise ArithmeticError("reference point on facet hyperplane")
        if side > beta:
            nu, beta = tuple(-a for a in nu), -beta
        fid = next_id
        next_id += 1
        facets[fid] = (tuple(sorted(verts_idx)), nu, beta)
        for r in _ridges(facets[fid][0]):
            ridge_map.setdefault(r, set()).add(fid)
        return fid

    def drop_facet(fid):
        verts_idx, _, _ = facets.pop(fid)
        for r in _ridges(verts_idx):
            ridge_map[r].discard(fid)
            if not ridge_map[r]:
                del ridge_map[r]

    for k in range(d + 1):
        add_facet([init[i] for i in range(d + 1) if i != k])

    pending = [i for i in range(len(cpts)) if i not in init]
    for i in pending:
        p = cpts[i]
        visible = [fid for fid, (_, nu, beta) in facets.items() if dot(nu, p) > beta]
        if not visible:
            continue
        visible_set = set(visible)
        horizon = []
        for fid in visible:
            for r in _ridges(facets[fid][0]):
                others = ridge_map[r] - visible_set
                if others:
                    horizon.append(r)
        for fid in visible:
            drop_facet(fid)
        for r in horizon:
            add_facet(list(r) + [i])

    return list(facets.values())


def _ridges(verts_idx):
    return [frozenset(verts_idx) - {v} for v in verts_idx]


# ---------------------------------------------------------------------------
# Operations


def clip_halfspace(P: Polytope, H: Halfspace):
    """P intersected with H as a canonical polytope, or None when empty.

    Intersection vertices are exact rational points on segments between
    vertex pairs; the hull pass discards the non-extreme ones.
    """
    if len(H.normal) != P.ambient_dim:
        raise DimensionMismatch("halfspace dimension mismatch")
    slacks = [H.slack(v) for v in P.vertices]
    if all(s >= 0 for s in slacks):
        return P
    kept = [v for v, s in zip(P.vertices, slacks) if s >= 0]
    if not kept:
        return None
    pts = list(kept)
    m = len(P.vertices)
    for i in range(m):
        si = slacks[i]
        if si <= 0:
            continue
        for j in range(m):
            sj = slacks[j]
            if sj < 0:
                t = si / (si - sj)
                pts.append(vadd(P.vertices[i], vscale(t, vsub(P.vertices[j], P.vertices[i]))))
    return convex_hull(pts)


def minkowski_sum(P: Polytope, Q_: Polytope) -> Polytope:
    if P.ambient_dim != Q_.ambient_dim:
        raise DimensionMismatch("Minkowski sum of mismatched dimensions")
    return convex_hull([vadd(v, w) for v in P.vertices for w in Q_.vertices])


def translate(P: Polytope, t) -> Polytope:
    t = vec(t)
    if len(t) != P.ambient_dim:
        raise DimensionMismatch("translation vector dimension mismatch")
    verts = tuple(sorted(vadd(v, t) for v in P.vertices))
    return Polytope(P.ambient_dim, verts, P.intrinsic_dim)


def negate(P: Polytope) -> Polytope:
    verts = tuple(sorted(tuple(-c for c in v) for v in P.vertices))
    return Polytope(P.ambient_dim, verts, P.intrinsic_dim)


def scale(P: Polytope, c) -> Polytope:
    c = rat(c)
    if c == 0:
        return convex_hull([zero_vec(P.ambient_dim)])
    verts = tuple(sorted(vscale(c, v) for v in P.vertices))
    return Polytope(P.ambient_dim, verts, P.intrinsic_dim)


def apply_linear(phi: Mat, P: Polytope) -> Polytope:
    """Vertex-wise linear image, re-canonicalized.

    Invertible maps preserve extremeness so the image is assembled directly;
    singular maps may merge vertices and go through a fresh hull.
    """
    if phi.n != P.ambient_dim:
        raise DimensionMismatch("matrix/polytope dimension mismatch")
    images = [phi.apply(v) for v in P.vertices]
    if phi.det != 0:
        return Polytope(P.ambient_dim, tuple(sorted(images)), P.intrinsic_dim)
    return convex_hull(images)


def support_value(P: Polytope, u):
    u = vec(u)
    if len(u) != P.ambient_dim:
        raise DimensionMismatch("direction dimension mismatch")
    return max(dot(u, v) for v in P.vertices)


def support_point(P: Polytope, u):
    """Lexicographically smallest vertex attaining the support value."""
    u = vec(u)
    best = None
    best_val = None
    for v in P.vertices:
        val = dot(u, v)
        if best_val is None or val > best_val:
            best, best_val = v, val
    return best


def volume(P: Polytope):
    """Exact n-volume; 0 for lower-dimensional bodies."""
    if P.intrinsic_dim < P.ambient_dim:
        return ZERO
    if P._volume is None:
        P._volume = _fan_volume_moment(P)[0]
    return P._volume


def moment_vector(P: Polytope):
    """Exact integral of the identity over P; the zero vector when P is
    lower-dimensional."""
    if P.intrinsic_dim < P.ambient_dim:
        return zero_vec(P.ambient_dim)
    if P._moment is None:
        P._moment = _fan_volume_moment(P)[1]
    return P._moment


def _fan_volume_moment(P):
    hd = P.hull_data
    n = P.ambient_dim
    nfact = Q(factorial(n))
    total_v = ZERO
    total_m = zero_vec(n)
    for cell in hd.cells:
        base = hd.points[cell[0]]
        rows = [vsub(hd.points[i], base) for i in cell[1:]]
        v = abs(_cell_det(rows)) / nfact
        if v == 0:
            continue
        total_v += v
        centroid = tuple(sum(hd.points[i][k] for i in cell) / Q(n + 1) for k in range(n))
        total_m = vadd(total_m, vscale(v, centroid))
    if P._volume is None:
        P._volume = total_v
    return total_v, total_m


def simplex_volume_moment(points):
    """(volume, moment vector) of a simplex given as n+1 ambient points;
    degenerate simplices contribute zero."""
    n = len(points[0])
    base = points[0]
    rows = [vsub(p, base) for p in points[1:]]
    v = abs(_cell_det(rows)) / Q(factorial(n))
    if v == 0:
        return ZERO, zero_vec(n)
    centroid = tuple(sum(p[k] for p in points) / Q(n + 1) for k in range(n))
    return v, vscale(v, centroid)


def _cell_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        a, b, c = rows
        return (
            a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0])
        )
    return _gauss_det(rows)


def triangulation(P: Polytope):
    """(points, cells): a fan dissection of P into intrinsic-dimension
    simplices, cells indexing into points."""
    hd = P.hull_data
    return hd.points, hd.cells


def second_moment_matrix(P: Polytope):
    """Exact integral of x x^t over P (zero matrix when lower-dimensional).

    Per simplex with vertices v_0..v_n the entry (i, j) integrates to
    V (sum_k v_ki v_kj + (sum_k v_ki)(sum_k v_kj)) / ((n+1)(n+2)).
    """
    n = P.ambient_dim
    out = [[ZERO] * n for _ in range(n)]
    if P.intrinsic_dim < n:
        return Mat(out)
    hd = P.hull_data
    nfact = Q(factorial(n))
    denom = Q((n + 1) * (n + 2))
    for cell in hd.cells:
        pts = [hd.points[i] for i in cell]
        rows = [vsub(p, pts[0]) for p in pts[1:]]
        v = abs(_cell_det(rows)) / nfact
        if v == 0:
            continue
        sums = [sum(p[i] for p in pts) for i in range(n)]
        for i in range(n):
            for j in range(i, n):
                term = v * (sum(p[i] * p[j] for p in pts) + sums[i] * sums[j]) / denom
                out[i][j] += term
                if i != j:
                    out[j][i] += term
    return Mat(out)


def facet_vector_areas(P: Polytope):
    """Exact outward vector areas ((n-1)-volume times unit normal, which is
    rational) of the boundary simplices of a full-dimensional polytope; for a
    body of intrinsic dimension n-1, the single one-sided vector area of the
    body itself."""
    if P._areas is not None:
        return P._areas
    n = P.ambient_dim
    nm1fact = Q(factorial(n - 1))
    hd = P.hull_data
    areas = []
    if P.intrinsic_dim == n:
        for verts_idx, outward in hd.boundary:
            base = hd.points[verts_idx[0]]
            vecs = [vsub(hd.points[i], base) for i in verts_idx[1:]]
            a = cross(vecs)
            if dot(a, outward) < 0:
                a = tuple(-c for c in a)
            a = vscale(ONE / nm1fact, a)
            if not is_zero_vec(a):
                areas.append(a)
    elif P.intrinsic_dim == n - 1:
        ref = None
        total = zero_vec(n)
        for cell in hd.cells:
            base = hd.points[cell[0]]
            vecs = [vsub(hd.points[i], base) for i in cell[1:]]
            a = cross(vecs)
            if is_zero_vec(a):
                continue
            if ref is None:
                ref = a
            elif dot(a, ref) < 0:
                a = tuple(-c for c in a)
            total = vadd(total, a)
        if not is_zero_vec(total):
            # one-sided area: fix the sign convention (leading entry positive)
            lead = next(c for c in total if c != 0)
            if lead < 0:
                total = tuple(-c for c in total)
            areas = [vscale(ONE / nm1fact, total)]
        else:
            areas = []
    P._areas = tuple(areas)
    return P._areas


def project_onto_line(P: Polytope, u) -> Polytope:
    """Orthogonal projection onto the line spanned by u, as a (possibly
    degenerate) segment polytope."""
    u = vec(u)
    if is_zero_vec(u):
        raise ZeroDirection("cannot project onto a zero direction")
    if len(u) != P.ambient_dim:
        raise DimensionMismatch("direction dimension mismatch")
    uu = dot(u, u)
    ts = [dot(u, v) / uu for v in P.vertices]
    return convex_hull([vscale(min(ts), u), vscale(max(ts), u)])


def contains_point(P: Polytope, x) -> bool:
    x = vec(x)
    if len(x) != P.ambient_dim:
        raise DimensionMismatch("point dimension mismatch")
    hd = P.hull_data
    for a, b in hd.affine_eqs:
        if dot(a, x) != b:
            return False
    if P.intrinsic_dim == 0:
        return True
    if P.intrinsic_dim == 1:
        (v0, v1) = P.vertices
        d = vsub(v1, v0)
        t = dot(d, vsub(x, v0)) / dot(d, d)
        return ZERO <= t <= ONE
    return all(h.slack(x) >= 0 for h in hd.facets)


def polytope_equal(P: Polytope, Q_: Polytope) -> bool:
    return P == Q_
