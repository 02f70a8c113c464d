"""Immutable dense matrices and exact linear algebra over generic rings.

Entries may be ints, ``Fraction``, :class:`RatFn`, :class:`GF` or
:class:`Poly`. Routines that divide say so; the rest use ring operations only.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from ..errors import DomainError, ShapeError
from .poly import Poly


class Mat:
    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ShapeError("ragged matrix rows")
        self.rows = rows

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None, zero=0) -> "Mat":
        ncols = nrows if ncols is None else ncols
        return cls([[zero] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, n: int, one=1, zero=0) -> "Mat":
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, values: Sequence, zero=0) -> "Mat":
        n = len(values)
        return cls([[values[i] if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def column(cls, values: Sequence) -> "Mat":
        return cls([[v] for v in values])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self):
        return self.nrows, self.ncols

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        """Row-major flat tuple of entries."""
        return tuple(x for r in self.rows for x in r)

    def map(self, f: Callable) -> "Mat":
        return Mat([[f(x) for x in r] for r in self.rows])

    def transpose(self) -> "Mat":
        return Mat(zip(*self.rows)) if self.rows else Mat([])

    T = property(transpose)

    def is_symmetric(self) -> bool:
        n = self.nrows
        if not self.is_square():
            return False
        return all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i + 1, n))

    def trace(self):
        self._need_square()
        acc = 0
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def _need_square(self):
        if not self.is_square():
            raise ShapeError(f"expected a square matrix, got {self.nrows}x{self.ncols}")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise ShapeError("shape mismatch in matrix addition")
        return Mat([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise ShapeError("shape mismatch in matrix subtraction")
        return Mat([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Mat([[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if not isinstance(other, Mat):
            return Mat([[a * other for a in r] for r in self.rows])
        return self.__matmul__(other)

    def __rmul__(self, other):
        return Mat([[other * a for a in r] for r in self.rows])

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows)) if other.rows else []
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = 0
                for a, b in zip(r, c):
                    if a == 0 or b == 0:
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Mat(out)

    def __pow__(self, k: int) -> "Mat":
        self._need_square()
        result = Mat.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s)
        )

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Mat({[list(r) for r in self.rows]!r})"

    def __str__(self):
        cells = [[str(x) for x in r] for r in self.rows]
        if not cells:
            return "[]"
        w = max(len(c) for r in cells for c in r)
        return "\n".join("[" + " ".join(c.rjust(w) for c in r) + "]" for r in cells)

    # convenience wrappers
    def det(self):
        return mat_det(self)

    def charpoly(self, var: str = "t") -> Poly:
        return charpoly_berkowitz(self, var)

    def rank(self) -> int:
        return rank(self)

    def inverse(self) -> "Mat":
        return inverse(self)


def _exact_div(a, b):
    if b == 1:
        return a
    if isinstance(a, Poly):
        return a.exact_div(b)
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise DomainError("inexact integer division in Bareiss elimination")
        return q
    return a / b


def mat_det(M: Mat):
    """Determinant by fraction-free (Bareiss) elimination.

    Every division is exact, so this works over any integral domain whose
    elements support exact division: Z, Q, Q[x], Q(mu), GF(p).
    """
    M._need_square()
    n = M.nrows
    if n == 0:
        return 1
    a = [list(r) for r in M.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0 * a[0][0]
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ri, rk = a[i], a[k]
            for j in range(k + 1, n):
                ri[j] = _exact_div(ri[j] * akk - aik * rk[j], prev)
        prev = akk
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def charpoly_berkowitz(M: Mat, var: str = "t") -> Poly:
    """det(var*I - M) using Berkowitz's division-free algorithm.

    Works over any commutative ring; O(n^4) ring operations.
    """
    M._need_square()
    vec = _berkowitz_vector([list(r) for r in M.rows])
    return Poly(list(reversed(vec)), var)


def _berkowitz_vector(a):
    # returns [1, c_1, ..., c_n] with det(tI - a) = sum c_k t^(n-k)
    n = len(a)
    if n == 0:
        return [1]
    if n == 1:
        return [1, -a[0][0]]
    a00 = a[0][0]
    row = a[0][1:]
    col = [a[i][0] for i in range(1, n)]
    sub = [r[1:] for r in a[1:]]
    # Toeplitz column: 1, -a00, -R C, -R S C, -R S^2 C, ...
    diag = [1, -a00]
    v = col
    for k in range(n - 1):
        acc = 0
        for x, y in zip(row, v):
            if x == 0 or y == 0:
                continue
            acc = acc + x * y
        diag.append(-acc)
        if k < n - 2:
            v = [_dot(r, v) for r in sub]
    rest = _berkowitz_vector(sub)
    out = []
    for i in range(n + 1):
        acc = 0
        for j in range(min(i, n - 1) + 1):
            if i - j < len(diag):
                acc = acc + diag[i - j] * rest[j]
        out.append(acc)
    return out


def _dot(r, v):
    acc = 0
    for x, y in zip(r, v):
        if x == 0 or y == 0:
            continue
        acc = acc + x * y
    return acc


def charpoly_bareiss(M: Mat, var: str = "t") -> Poly:
    """det(var*I - M) over Q[var] by fraction-free elimination.

    Independent of :func:`charpoly_berkowitz`; used as its cross-check.
    """
    M._need_square()
    n = M.nrows
    t = Poly((Fraction(0), Fraction(1)), var)
    rows = [
        [(t if i == j else Poly((), var)) - Fraction(M.rows[i][j]) for j in range(n)]
        for i in range(n)
    ]
    d = mat_det(Mat(rows))
    return d if isinstance(d, Poly) else Poly((d,), var)


# -- elimination over a field ------------------------------------------------


def rref(M: Mat):
    """Reduced row echelon form over a field. Returns (R, pivot_columns).

    Integer entries are promoted to ``Fraction``.
    """
    a = [[Fraction(x) if isinstance(x, int) else x for x in r] for r in M.rows]
    nr, nc = M.nrows, M.ncols
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        p = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pr = a[r]
        inv = 1 / pr[c]
        if inv != 1:
            a[r] = pr = [x * inv for x in pr]
        for i in range(nr):
            if i != r:
                f = a[i][c]
                if f != 0:
                    ri = a[i]
                    a[i] = [x - f * y if y != 0 else x for x, y in zip(ri, pr)]
        pivots.append(c)
        r += 1
    return Mat(a), pivots


def rank(M: Mat) -> int:
    return len(rref(M)[1])


def nullspace_rational(M: Mat) -> list[Mat]:
    """Basis of {v : M v = 0} as column vectors, read off the RREF.

    Each basis vector is +-1 in one free coordinate and 0 in the others,
    signed so that its first nonzero entry is positive.
    """
    R, pivots = rref(M)
    nc = M.ncols
    pivset = set(pivots)
    basis = []
    for f in range(nc):
        if f in pivset:
            continue
        v = [Fraction(0)] * nc
        v[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -R.rows[row][f]
        lead = next(x for x in v if x != 0)
        if lead < 0:
            v = [-x for x in v]
        basis.append(Mat.column(v))
    return basis


def inverse(M: Mat) -> Mat:
    """Inverse over a field by Gauss-Jordan; raises DomainError if singular."""
    M._need_square()
    n = M.nrows
    aug = Mat([list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(M.rows)])
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise DomainError("matrix is singular")
    return Mat([r[n:] for r in R.rows])


def char_matrix(M: Mat, var: str = "t") -> Mat:
    """The matrix var*I - M with entries in (coefficient ring)[var]."""
    M._need_square()
    n = M.nrows
    return Mat(
        [
            [Poly((-M.rows[i][j], 1) if i == j else (-M.rows[i][j],), var) for j in range(n)]
            for i in range(n)
        ]
    )
