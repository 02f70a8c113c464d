"""The field Q(mu) of rational functions with rational coefficients."""
from __future__ import annotations

import re
from fractions import Fraction

from ..errors import DomainError, ParseError
from .poly import Poly, poly_gcd

MU = "mu"


def _qpoly(p) -> Poly:
    if isinstance(p, Poly):
        return Poly([Fraction(c) for c in p.coeffs], MU)
    return Poly((Fraction(p),), MU)


class RatFn:
    """Reduced quotient ``num/den`` with ``den`` monic and gcd(num, den) = 1.

    Instances are immutable; equality is structural because the form is
    canonical.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1, *, _reduced=False):
        num = _qpoly(num)
        den = _qpoly(den)
        if den.is_zero():
            raise DomainError("rational function with zero denominator")
        if not _reduced:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, x) -> "RatFn":
        if isinstance(x, RatFn):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(Poly((Fraction(x),), MU), _ONE_DEN, _reduced=True)
        if isinstance(x, Poly):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to RatFn")

    @classmethod
    def mu(cls) -> "RatFn":
        return cls(Poly((0, 1), MU))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    # -- field operations --------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, RatFn):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            if other == 0:
                return self
            return RatFn(self.num + self.den * Fraction(other), self.den, _reduced=True)
        if self.den == other.den:
            if self.den.degree == 0:
                return RatFn(self.num + other.num, self.den, _reduced=True)
            return RatFn(self.num + other.num, self.den)
        return RatFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        if not isinstance(other, (RatFn, int, Fraction)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RatFn):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            if other == 0:
                return _ZERO
            return RatFn(self.num * Fraction(other), self.den, _reduced=True)
        if self.den.degree == 0 and other.den.degree == 0:
            return RatFn(self.num * other.num, _ONE_DEN, _reduced=True)
        # cross-cancel first to keep intermediate degrees small
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1, d2 = self.num, other.den
        n2, d1 = other.num, self.den
        if g1.degree > 0:
            n1, d2 = n1.exact_div(g1), d2.exact_div(g1)
        if g2.degree > 0:
            n2, d1 = n2.exact_div(g2), d1.exact_div(g2)
        num = n1 * n2
        den = d1 * d2
        return RatFn(*_make_monic(num, den), _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFn":
        if self.is_zero():
            raise DomainError("inverse of zero in Q(mu)")
        return RatFn(*_make_monic(self.den, self.num), _reduced=True)

    def __truediv__(self, other):
        if not isinstance(other, RatFn):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            if other == 0:
                raise DomainError("division by zero in Q(mu)")
            return RatFn(self.num * (1 / Fraction(other)), self.den, _reduced=True)
        return self * other.inverse()

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFn(self.num ** k, self.den ** k, _reduced=True)

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise DomainError(f"pole at mu = {x}")
        return self.num(x) / d

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, RatFn):
            return self.num.coeffs == other.num.coeffs and self.den.coeffs == other.den.coeffs
        if isinstance(other, (int, Fraction)):
            return self.den.degree == 0 and self.num == other
        if isinstance(other, Poly) and other.var == MU:
            return self.den.degree == 0 and self.num == other
        return NotImplemented

    def __hash__(self):
        if self.den.degree == 0 and self.num.degree <= 0:
            return hash(self.num[0])
        return hash((self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"RatFn({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def to_string(self) -> str:
        """Serialized ``num/den`` form; both parts are always present."""
        return f"({self.num})/({self.den})"

    @classmethod
    def parse(cls, text: str) -> "RatFn":
        s = text.strip()
        m = re.fullmatch(r"\((.*)\)\s*/\s*\((.*)\)", s)
        if m:
            return cls(parse_qpoly(m.group(1)), parse_qpoly(m.group(2)))
        return cls(parse_qpoly(s))


def _make_monic(num: Poly, den: Poly):
    lc = den.lc
    if lc != 1:
        inv = 1 / Fraction(lc)
        num = Poly([c * inv for c in num.coeffs], MU)
        den = Poly([c * inv for c in den.coeffs], MU)
    return num, den


def _normalize(num: Poly, den: Poly):
    if num.is_zero():
        return num, _ONE_DEN
    g = poly_gcd(num, den)
    if g.degree > 0:
        num = num.exact_div(g)
        den = den.exact_div(g)
    return _make_monic(num, den)


def ratfn_normalize(num: Poly, den: Poly) -> RatFn:
    return RatFn(num, den)


def parse_qpoly(text: str, var: str = MU) -> Poly:
    """Parse output of :func:`format_poly` for a polynomial over Q."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError(f"empty polynomial string {text!r}")
    term = re.compile(rf"([+-])?(\d+(?:/\d+)?)?(\*?)({re.escape(var)}(?:\^(\d+))?)?")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = term.match(s, pos)
        sign, num, star, mono, power = m.groups()
        if m.end() == pos or (num is None and mono is None) or (sign is None and not first):
            raise ParseError(f"bad polynomial {text!r}", offset=pos)
        if star and (num is None or mono is None):
            raise ParseError(f"bad polynomial {text!r}", offset=pos)
        c = Fraction(num) if num is not None else Fraction(1)
        if sign == "-":
            c = -c
        k = 0 if mono is None else (int(power) if power else 1)
        coeffs[k] = coeffs.get(k, Fraction(0)) + c
        pos = m.end()
        first = False
    top = max(coeffs)
    return Poly([coeffs.get(k, Fraction(0)) for k in range(top + 1)], var)


_ONE_DEN = Poly((Fraction(1),), MU)
_ZERO = RatFn(Poly((), MU), _ONE_DEN, _reduced=True)
