"""The generalized characteristic polynomial psi(G, t, mu) = det(tI - (A - mu*D)).

Three routes are provided:

* :func:`psi` - Berkowitz over Z[mu], exact.
* :func:`psi_interpolation_oracle` - independent check: univariate
  characteristic polynomials at mu = 0..n by fraction-free elimination,
  then Lagrange interpolation in mu.
* :func:`psi_fingerprint` - evaluations of psi at shared random points modulo
  a prime, for screening large corpora.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import DEFAULT_PRIME, Mat, Poly, Poly2, charpoly_bareiss, charpoly_berkowitz
from .algebra.primefield import check_prime, det_mod_p
from .errors import ConfigError, ParseError
from .graphs import Graph, adjacency_int, pencil

DEFAULT_POINTS = 8


@dataclass(frozen=True)
class GenCharPoly:
    poly: Poly2
    n: int

    def coeff(self, tpow: int, mupow: int) -> Fraction:
        return self.poly.coeff(tpow, mupow)

    def at_mu(self, mu) -> Poly:
        return self.poly.at_mu(mu)

    def __call__(self, t, mu):
        return self.poly(t, mu)

    def __str__(self):
        return str(self.poly)

    def to_json(self) -> dict:
        grid = self.poly.grid
        return {
            "n": self.n,
            "tdeg": self.poly.tdeg,
            "mudeg": self.poly.mudeg,
            "coeffs": [[_frac_str(c) for c in row] for row in grid],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj: dict) -> "GenCharPoly":
        try:
            grid = [[Fraction(c) for c in row] for row in obj["coeffs"]]
            p = cls(Poly2(grid), int(obj["n"]))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"malformed psi JSON: {exc}") from exc
        if p.poly.tdeg != obj["tdeg"] or p.poly.mudeg != obj["mudeg"]:
            raise ParseError("psi JSON degrees do not match its coefficient grid")
        return p


def _frac_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def psi(g: Graph) -> GenCharPoly:
    """Exact psi via division-free Berkowitz over the ring Z[mu]."""
    cp = charpoly_berkowitz(pencil(g).as_polynomial(), "t")
    return GenCharPoly(Poly2.from_nested(cp), g.n)


def _lagrange(xs: Sequence[int], ys: Sequence[Fraction]) -> list[Fraction]:
    # coefficients (ascending) of the unique poly of degree < len(xs) through the points
    k = len(xs)
    out = [Fraction(0)] * k
    for i in range(k):
        if ys[i] == 0:
            continue
        basis = Poly((Fraction(1),), "mu")
        denom = Fraction(1)
        for j in range(k):
            if j != i:
                basis = basis * Poly((Fraction(-xs[j]), Fraction(1)), "mu")
                denom *= xs[i] - xs[j]
        scale = ys[i] / denom
        for d, c in enumerate(basis.coeffs):
            out[d] += c * scale
    return out


def psi_interpolation_oracle(g: Graph) -> GenCharPoly:
    """psi rebuilt from numeric slices mu = 0, 1, ..., n."""
    n = g.n
    pen = pencil(g)
    xs = list(range(n + 1))
    slices = [charpoly_bareiss(pen.evaluate(m), "t") for m in xs]
    grid = []
    for i in range(n + 1):
        ys = [Fraction(s[i]) for s in slices]
        grid.append(_lagrange(xs, ys))
    return GenCharPoly(Poly2(grid), n)


def psi_equal(a: GenCharPoly, b: GenCharPoly) -> bool:
    return a.n == b.n and a.poly == b.poly


@dataclass(frozen=True)
class PsiFingerprint:
    prime: int
    points: tuple[tuple[int, int], ...]
    residues: tuple[int, ...]

    @property
    def key(self) -> tuple[int, ...]:
        return self.residues


def sample_points(seed: int, prime: int, count: int = DEFAULT_POINTS) -> tuple[tuple[int, int], ...]:
    """The run-wide evaluation points; a pure function of (seed, prime, count)."""
    if count < 1:
        raise ConfigError("need at least one fingerprint point")
    rng = random.Random(seed)
    return tuple((rng.randrange(prime), rng.randrange(prime)) for _ in range(count))


def psi_fingerprint(g: Graph, prime: int, points: Sequence[tuple[int, int]], *, checked=False) -> PsiFingerprint:
    """psi(t0, mu0) mod p at each point, via det(t0*I - A + mu0*D) mod p."""
    if not checked:
        check_prime(prime)
    for t0, m0 in points:
        if not (0 <= t0 < prime and 0 <= m0 < prime):
            raise ConfigError(f"point ({t0}, {m0}) outside [0, {prime})")
    a = adjacency_int(g)
    deg = g.degrees()
    n = g.n
    residues = []
    for t0, m0 in points:
        rows = [[-x for x in r] for r in a]
        for i in range(n):
            rows[i][i] = (t0 + m0 * deg[i]) % prime
        residues.append(det_mod_p(rows, prime))
    return PsiFingerprint(prime, tuple(points), tuple(residues))


def default_fingerprint(g: Graph, seed: int = 0, prime: int = DEFAULT_PRIME, count: int = DEFAULT_POINTS):
    return psi_fingerprint(g, prime, sample_points(seed, prime, count))


def adjacency_charpoly(g: Graph) -> Poly:
    A = Mat(adjacency_int(g))
    return charpoly_berkowitz(A, "t")
