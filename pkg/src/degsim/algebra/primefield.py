"""Arithmetic in GF(p) for word-sized primes, used for fingerprints."""
from __future__ import annotations

from ..errors import ConfigError, DomainError

# largest prime below 2**62
DEFAULT_PRIME = 2**62 - 57


def is_prime(p: int) -> bool:
    from sympy import isprime

    return bool(isprime(p))


def check_prime(p: int) -> int:
    if not isinstance(p, int) or p < 2 or not is_prime(p):
        raise ConfigError(f"{p!r} is not a prime")
    if p >= 2**62:
        raise ConfigError(f"prime {p} does not fit the 62-bit limit")
    return p


class GF:
    """An element of GF(p). Mixed arithmetic with ints is allowed."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.p = p
        self.value = value % p

    def _lift(self, other):
        if isinstance(other, GF):
            if other.p != self.p:
                raise DomainError("mixing elements of different prime fields")
            return other.value
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GF(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GF(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GF(o - self.value, self.p)

    def __neg__(self):
        return GF(-self.value, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GF(self.value * o, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "GF":
        if self.value == 0:
            raise DomainError("inverse of zero in GF(p)")
        return GF(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * GF(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GF(o, self.p) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return GF(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        o = self._lift(other) if isinstance(other, (GF, int)) else None
        if o is None:
            return NotImplemented
        return self.value == o % self.p

    def __hash__(self):
        return hash(self.value)

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GF({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


def det_mod_p(rows, p: int) -> int:
    """Determinant of an integer matrix modulo ``p`` by Gaussian elimination.

    ``rows`` is a list of lists of ints; it is copied, not modified.
    """
    a = [[x % p for x in r] for r in rows]
    n = len(a)
    det = 1
    for k in range(n):
        piv = k
        while piv < n and a[piv][k] == 0:
            piv += 1
        if piv == n:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        pk = a[k]
        pivot = pk[k]
        det = det * pivot % p
        inv = pow(pivot, -1, p)
        for i in range(k + 1, n):
            ri = a[i]
            f = ri[k]
            if f:
                f = f * inv % p
                for j in range(k + 1, n):
                    ri[j] = (ri[j] - f * pk[j]) % p
    return det % p
