"""Dense univariate polynomials over an arbitrary commutative coefficient ring.

Coefficients are stored ascending (``coeffs[i]`` multiplies ``var**i``) and
may be any objects supporting ring arithmetic mixed with Python ints:
``int``, ``Fraction``, :class:`~degsim.algebra.ratfn.RatFn`,
:class:`~degsim.algebra.primefield.GF`, or another :class:`Poly` in a
different variable (giving e.g. Q[mu][t]).

Division (``divmod``, ``gcd``) needs the leading coefficient of the divisor to
be invertible, so it is only meaningful over a field.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from ..errors import DomainError

VARS = ("t", "mu", "x")


def _inv(c):
    if isinstance(c, int):
        return Fraction(1, c)
    return 1 / c


def _is_scalar_for(other, var):
    return not isinstance(other, Poly) or other.var != var


# outer variables first when two polynomial rings meet: Q[mu][t]
_RANK = {"mu": 0, "x": 1, "t": 2}


def _nests(other, var):
    # True when other should act as the outer ring, with var's ring inside it
    if not isinstance(other, Poly) or other.var == var:
        return False
    if any(isinstance(c, Poly) and c.var == var for c in other.coeffs):
        return True
    return _RANK.get(other.var, 0) > _RANK.get(var, 0)


class Poly:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var="x"):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)
        self.var = var

    @classmethod
    def constant(cls, c, var="x"):
        return cls((c,), var)

    @classmethod
    def monomial(cls, c, k, var="x"):
        return cls((0,) * k + (c,), var)

    @classmethod
    def gen(cls, var="x"):
        return cls((0, 1), var)

    # -- basic properties --------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self):
        return len(self.coeffs)

    def _new(self, coeffs):
        return Poly(coeffs, self.var)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if _nests(other, self.var):
            return other.__add__(self)
        if _is_scalar_for(other, self.var):
            if not self.coeffs:
                return self._new((other,))
            return self._new((self.coeffs[0] + other,) + self.coeffs[1:])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new([-c for c in self.coeffs])

    def __sub__(self, other):
        if _nests(other, self.var):
            return (-other).__add__(self)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _nests(other, self.var):
            return other.__mul__(self)
        if _is_scalar_for(other, self.var):
            if other == 0:
                return self._new(())
            return self._new([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._new(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return self._new(out)

    def __rmul__(self, other):
        # scalar * poly; coefficient rings here are commutative
        return self.__mul__(other)

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative power of a polynomial")
        result = self._new((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- division (field coefficients) -------------------------------------

    def __divmod__(self, other):
        if _is_scalar_for(other, self.var):
            if other == 0:
                raise DomainError("polynomial division by zero")
            inv = _inv(other)
            return self._new([c * inv for c in self.coeffs]), self._new(())
        if other.is_zero():
            raise DomainError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return self._new(()), self
        inv = _inv(other.lc)
        quot = [0] * (len(rem) - db)
        b = other.coeffs
        for k in range(len(rem) - 1 - db, -1, -1):
            q = rem[k + db] * inv
            quot[k] = q
            if q == 0:
                continue
            for j in range(db + 1):
                rem[k + j] = rem[k + j] - q * b[j]
        return self._new(quot), self._new(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        return self.exact_div(other)

    def exact_div(self, other):
        q, r = divmod(self, other)
        if r:
            raise DomainError("inexact polynomial division")
        return q

    def divides(self, other) -> bool:
        """True when ``self`` divides ``other`` exactly."""
        if self.is_zero():
            return other.is_zero()
        return not (other % self)

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        inv = _inv(lc)
        return self._new([c * inv for c in self.coeffs])

    def derivative(self):
        return self._new([c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def map_coeffs(self, f, var=None):
        return Poly([f(c) for c in self.coeffs], var or self.var)

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            if other.var == self.var:
                return self.coeffs == other.coeffs
            # different variables only agree as constants
            return self.degree <= 0 and other.degree <= 0 and self[0] == other[0]
        if self.degree > 0:
            return False
        return self[0] == other

    def __hash__(self):
        if self.degree <= 0:
            return hash(self[0])
        return hash((self.var, self.coeffs))

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self):
        return format_poly(self)


def _coeff_str(c):
    s = str(c)
    if any(ch in s[1:] for ch in " +-/"):
        return f"({s})"
    return s


def format_poly(p: Poly) -> str:
    """Human-readable form, highest power first, e.g. ``mu^2 - 1``."""
    if p.is_zero():
        return "0"
    terms = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mono = "" if k == 0 else (p.var if k == 1 else f"{p.var}^{k}")
        simple = isinstance(c, (int, Fraction))
        if simple:
            neg = c < 0
            mag = -c if neg else c
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
        else:
            cs = _coeff_str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if mono and cs == "1":
                body = mono
            elif mono:
                body = f"{cs}*{mono}"
            else:
                body = cs
        terms.append(("-" if neg else "+", body))
    head_sign, head = terms[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over a coefficient field; ``gcd(0, 0) == 0``."""
    if _is_rational(a) and _is_rational(b):
        return _rational_gcd(a, b)
    while b:
        a, b = b, a % b
    return a.monic()


def _is_rational(p: Poly) -> bool:
    return all(isinstance(c, (int, Fraction)) for c in p.coeffs)


def _primitive_int(coeffs) -> list[int]:
    den = 1
    for c in coeffs:
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    if ints and ints[-1] < 0:
        ints = [-x for x in ints]
    return ints


def _prem(a: list[int], b: list[int]) -> list[int]:
    # pseudo-remainder of a by b over Z
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j in range(db + 1):
            r[shift + j] -= lr * b[j]
        while r and r[-1] == 0:
            r.pop()
    return r


def _rational_gcd(a: Poly, b: Poly) -> Poly:
    # primitive PRS over Z keeps coefficient growth in check
    x = _primitive_int(a.coeffs)
    y = _primitive_int(b.coeffs)
    if len(x) < len(y):
        x, y = y, x
    while y:
        if len(y) == 1:
            return Poly((Fraction(1),), a.var)
        r = _prem(x, y)
        x, y = y, (_primitive_int(r) if r else [])
    if not x:
        return Poly((), a.var)
    lc = x[-1]
    return Poly([Fraction(c, lc) for c in x], a.var)


def is_squarefree(p: Poly) -> bool:
    """True when gcd(p, p') is a unit (characteristic zero coefficients)."""
    if p.is_zero():
        return False
    return poly_gcd(p, p.derivative()).degree == 0
