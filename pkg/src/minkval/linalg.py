"""Exact rational linear algebra on small dense vectors and matrices.

Vectors are plain tuples of rationals; matrices a thin wrapper with a cached
exact determinant.  Everything is sized for desk-scale dimensions (n <= 5-ish)
so plain Gaussian elimination is used throughout.
"""

from __future__ import annotations

from math import gcd

from .errors import DimensionMismatch, SingularMatrix
from .rational import ONE, ZERO, Q, rat

Vec = tuple


def vec(coords) -> Vec:
    return tuple(rat(c) for c in coords)


def zero_vec(n: int) -> Vec:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> Vec:
    return tuple(ONE if j == i else ZERO for j in range(n))


def dot(u: Vec, v: Vec):
    if len(u) != len(v):
        raise DimensionMismatch(f"dot of {len(u)}-vector with {len(v)}-vector")
    s = ZERO
    for a, b in zip(u, v):
        s += a * b
    return s


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vneg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def vscale(c, u: Vec) -> Vec:
    return tuple(c * a for a in u)


def is_zero_vec(u: Vec) -> bool:
    return all(a == 0 for a in u)


def primitive(u: Vec, orient: bool = False) -> Vec:
    """Scale to coprime integer entries.  With orient=True the first nonzero
    entry is made positive (canonical direction for a line)."""
    if is_zero_vec(u):
        return u
    mult = 1
    for a in u:
        d = int(a.denominator)
        mult = mult * d // gcd(mult, d)
    ints = [int(a * mult) for a in u]
    g = 0
    for k in ints:
        g = gcd(g, k)
    ints = [k // g for k in ints]
    if orient:
        lead = next(k for k in ints if k != 0)
        if lead < 0:
            ints = [-k for k in ints]
    return tuple(Q(k) for k in ints)


class Mat:
    """Square rational matrix with a lazily cached exact determinant."""

    __slots__ = ("rows", "_det")

    def __init__(self, rows):
        self.rows = tuple(vec(r) for r in rows)
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise DimensionMismatch("matrix must be square")
        self._det = None

    @property
    def n(self) -> int:
        return len(self.rows)

    @staticmethod
    def identity(n: int) -> "Mat":
        return Mat([unit_vec(n, i) for i in range(n)])

    @staticmethod
    def diagonal(entries) -> "Mat":
        entries = vec(entries)
        n = len(entries)
        return Mat([tuple(entries[i] if j == i else ZERO for j in range(n)) for i in range(n)])

    @staticmethod
    def scalar(n: int, lam) -> "Mat":
        return Mat.diagonal([rat(lam)] * n)

    @staticmethod
    def shear(n: int, i: int, j: int, t) -> "Mat":
        """Identity plus t at entry (i, j), i != j; determinant is exactly 1."""
        if i == j:
            raise ValueError("shear requires i != j")
        t = rat(t)
        rows = [list(unit_vec(n, k)) for k in range(n)]
        rows[i][j] = t
        return Mat(rows)

    def apply(self, v: Vec) -> Vec:
        if len(v) != self.n:
            raise DimensionMismatch("matrix/vector size mismatch")
        return tuple(dot(r, v) for r in self.rows)

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.n != other.n:
            raise DimensionMismatch("matrix size mismatch")
        cols = list(zip(*other.rows))
        return Mat([tuple(dot(r, c) for c in cols) for r in self.rows])

    def transpose(self) -> "Mat":
        return Mat(list(zip(*self.rows)))

    @property
    def det(self):
        if self._det is None:
            self._det = _det(self.rows)
        return self._det

    def inverse(self) -> "Mat":
        n = self.n
        aug = [list(self.rows[i]) + list(unit_vec(n, i)) for i in range(n)]
        reduced, pivots = _rref(aug)
        if len(pivots) < n or any(p >= n for p in pivots):
            raise SingularMatrix("matrix is not invertible")
        return Mat([tuple(row[n:]) for row in reduced])

    def __eq__(self, other):
        return isinstance(other, Mat) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Mat({[tuple(map(str, r)) for r in self.rows]})"


def _det(rows):
    n = len(rows)
    a = [list(r) for r in rows]
    det = ONE
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return ZERO
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = ONE / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] * inv
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return det


def _rref(rows):
    """Row-reduce in place-ish; returns (rows, pivot column list)."""
    a = [list(r) for r in rows]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = ONE / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def rref(rows):
    return _rref([list(r) for r in rows])


def rank(rows) -> int:
    if not rows:
        return 0
    return len(_rref(rows)[1])


def solve(rows, rhs):
    """One exact solution of A x = b (free variables set to 0), or None if
    the system is inconsistent."""
    if not rows:
        return ()
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = _rref(aug)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for i, c in enumerate(pivots):
        x[c] = red[i][-1]
    return tuple(x)


def nullspace(rows):
    """Basis of the kernel of the matrix given by `rows` (acting on column
    vectors of length len(rows[0]))."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = _rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for i, c in enumerate(pivots):
            v[c] = -red[i][f]
        basis.append(tuple(v))
    return basis


def cross(vectors):
    """Generalized cross product of n-1 vectors in R^n: the vector N with
    <N, x> = det([v_1; ...; v_{n-1}; x]) for all x.  Its length is (n-1)!
    times the (n-1)-volume of the parallelepiped spanned by the inputs."""
    if not vectors:
        raise DimensionMismatch("cross product needs n-1 vectors")
    n = len(vectors[0])
    if len(vectors) != n - 1:
        raise DimensionMismatch(f"cross product in R^{n} needs {n - 1} vectors")
    comps = []
    for i in range(n):
        minor = [[row[j] for j in range(n) if j != i] for row in vectors]
        comps.append(_det(minor) * (ONE if (n - 1 + i) % 2 == 0 else -ONE))
    return tuple(comps)
