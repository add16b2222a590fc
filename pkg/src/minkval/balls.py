"""Rational unit-ball machinery for the Busemann-Petty corollary check.

Two ingredients: exact rational points on the unit sphere from Pythagorean
quadruples a^2 + b^2 + c^2 = d^2, used for inscribed ball approximants and
well-spread direction sets (their denominators share a small lcm, which
keeps downstream exact arithmetic bounded); and rigorous rational brackets
for the ball-moment ratio vol(M B^n) / vol(B^n)^{n+1}, exactly rational in
odd dimensions (the pi factors cancel) and bracketed through rational pi
bounds otherwise.
"""

from __future__ import annotations

from itertools import permutations, product

from .polytope import Polytope, convex_hull
from .rational import Q

# Rational brackets of pi (20 correct digits).
PI_LO = Q(31415926535897932384, 10**19)
PI_HI = Q(31415926535897932385, 10**19)

# Primitive (a, b, c; d) with a^2 + b^2 + c^2 = d^2, ordered by d.
_QUADRUPLES = (
    (0, 0, 1, 1),
    (1, 2, 2, 3),
    (0, 3, 4, 5),
    (2, 3, 6, 7),
    (1, 4, 8, 9),
    (4, 4, 7, 9),
    (2, 6, 9, 11),
    (6, 6, 7, 11),
    (3, 4, 12, 13),
    (2, 5, 14, 15),
    (2, 10, 11, 15),
    (8, 9, 12, 17),
    (1, 12, 12, 17),
    (6, 10, 15, 19),
    (4, 5, 20, 21),
    (8, 11, 16, 21),
)


def sphere_point_families(max_d: int = 21):
    """Signed-permutation orbits of the primitive Pythagorean quadruples
    with d <= max_d, coarsest first: each family is a symmetric, well-spread
    set of exact rational unit vectors in R^3.  Denominators divide the lcm
    of the d's, so sums of moments over them stay bounded."""
    families = []
    for a, b, c, d in _QUADRUPLES:
        if d > max_d:
            continue
        pts = set()
        for perm in permutations((a, b, c)):
            for sx, sy, sz in product((-1, 1), repeat=3):
                pts.add((Q(sx * perm[0], d), Q(sy * perm[1], d), Q(sz * perm[2], d)))
        families.append(sorted(pts))
    return families


def rational_sphere_points(max_d: int = 21):
    """All exact rational unit vectors from the families with d <= max_d."""
    pts = set()
    for fam in sphere_point_families(max_d):
        pts.update(fam)
    return sorted(pts)


def inscribed_ball_polytope(max_d: int = 9) -> Polytope:
    """Rational polytope inscribed in the unit ball of R^3 (all vertices at
    exact distance 1)."""
    return convex_hull(rational_sphere_points(max_d))


def _kappa_ratio(n: int):
    """kappa_{n-1}/kappa_n as (rational, power of 1/pi): ratio = r * pi^(-e)
    with e in {0, 1}."""
    if n == 1:
        r, e = Q(1, 2), 0
    elif n == 2:
        r, e = Q(2), 1
    else:
        # kappa_n = kappa_{n-2} * 2 pi / n gives ratio_n = ratio_{n-2} * n/(n-1)
        r, e = _kappa_ratio(n - 2)
        r = r * Q(n, n - 1)
    return r, e


def ball_moment_ratio(n: int):
    """Rigorous rational bracket (lo, hi) of vol(M B^n)/vol(B^n)^{n+1}
    = (2 kappa_{n-1} / ((n+1) kappa_n))^n; lo == hi in odd dimensions."""
    r, e = _kappa_ratio(n)
    base = 2 * r / Q(n + 1)
    if e == 0:
        c = base**n
        return c, c
    # base/pi raised to the n-th power; base > 0 so the bracket is monotone
    lo = (base / PI_HI) ** n
    hi = (base / PI_LO) ** n
    return lo, hi
