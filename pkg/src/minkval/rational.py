"""Exact rational scalars used throughout the package.

Every geometric quantity (coordinates, volumes, support values) is an exact
rational; floating point only appears in Monte-Carlo oracles and report
formatting.  gmpy2's mpq is used when available since it is several times
faster than fractions.Fraction; the two are interchangeable here.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Q

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Q

    HAVE_GMPY2 = False

ZERO = Q(0)
ONE = Q(1)


def rat(x) -> Q:
    """Coerce an int, string ("p/q" or "n"), Fraction or Q to Q."""
    if isinstance(x, Q):
        return x
    if isinstance(x, float):
        raise TypeError(f"refusing to coerce float {x!r} to an exact rational")
    if isinstance(x, str):
        return parse_rat(x)
    return Q(x)


def parse_rat(s: str) -> Q:
    """Parse "p/q" or an integer string; denominator must be nonzero."""
    try:
        return Q(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {s!r}") from exc


def rat_str(q) -> str:
    """Lowest-terms string form, "p/q" or "n"."""
    return str(q)
