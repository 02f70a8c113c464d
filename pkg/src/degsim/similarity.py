"""Similarity over Q(mu) through invariant factors of the characteristic matrix.

The Smith normal form of ``tI - K`` over the Euclidean ring Q(mu)[t] is
diag(d_1, ..., d_n) with monic d_1 | d_2 | ... | d_n. Two square matrices are
similar over Q(mu) exactly when these chains agree.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .algebra import Mat, Poly, RatFn, charpoly_berkowitz, is_squarefree, poly_gcd
from .errors import DomainError, InvariantViolation, ShapeError


def as_ratfn_matrix(K: Mat) -> Mat:
    return K.map(RatFn.coerce)


@dataclass(frozen=True)
class SymRatFnMat:
    """A square symmetric matrix over Q(mu); construction enforces symmetry."""

    mat: Mat

    def __post_init__(self):
        m = as_ratfn_matrix(self.mat)
        if not m.is_square():
            raise ShapeError("symmetric matrix must be square")
        if not m.is_symmetric():
            raise DomainError("matrix is not symmetric")
        object.__setattr__(self, "mat", m)

    @property
    def n(self) -> int:
        return self.mat.nrows


@dataclass(frozen=True)
class InvariantFactors:
    """Ascending divisibility chain; trivial factors 1 are kept so len == n."""

    factors: tuple[Poly, ...]
    n: int

    @property
    def nontrivial(self) -> tuple[Poly, ...]:
        return tuple(f for f in self.factors if f.degree > 0)

    @property
    def minimal_polynomial(self) -> Poly:
        return self.factors[-1] if self.factors else Poly((RatFn.coerce(1),), "t")

    def product(self) -> Poly:
        acc = Poly((RatFn.coerce(1),), "t")
        for f in self.factors:
            acc = acc * f
        return acc

    def to_json(self) -> list:
        """Each factor as its ascending t-coefficients, written ``(num)/(den)``."""
        return [[RatFn.coerce(c).to_string() for c in f.coeffs] for f in self.factors]

    def dumps(self) -> str:
        return json.dumps(self.to_json(), ensure_ascii=False)

    @classmethod
    def from_json(cls, obj: list) -> "InvariantFactors":
        factors = tuple(Poly([RatFn.parse(c) for c in f], "t") for f in obj)
        return cls(factors, len(factors))

    def __str__(self):
        return "(" + ", ".join(str(f) for f in self.factors) + ")"


def _pick_pivot(a, k, n):
    best = None
    for i in range(k, n):
        row = a[i]
        for j in range(k, n):
            e = row[j]
            if e and (best is None or e.degree < best[0]):
                best = (e.degree, i, j)
                if best[0] == 0:
                    return best
    return best


def snf_invariant_factors(K: Mat) -> InvariantFactors:
    """Invariant factors of tI - K over Q(mu)[t].

    Euclidean reduction on t-degree. The pivot is a nonzero entry of least
    t-degree, ties going to the lowest row and then the lowest column.
    """
    if not K.is_square():
        raise ShapeError(f"expected a square matrix, got {K.nrows}x{K.ncols}")
    n = K.nrows
    Kr = as_ratfn_matrix(K)
    zero = RatFn.coerce(0)
    one = RatFn.coerce(1)
    a = [
        [Poly((-Kr[i, j], one) if i == j else (-Kr[i, j],), "t") for j in range(n)]
        for i in range(n)
    ]
    diag = []
    for k in range(n):
        while True:
            pick = _pick_pivot(a, k, n)
            if pick is None:
                break
            _, pi, pj = pick
            if pi != k:
                a[k], a[pi] = a[pi], a[k]
            if pj != k:
                for row in a:
                    row[k], row[pj] = row[pj], row[k]
            p = a[k][k]
            dirty = False
            rk = a[k]
            for i in range(k + 1, n):
                e = a[i][k]
                if not e:
                    continue
                q, r = divmod(e, p)
                ri = a[i]
                ri[k] = r
                for j in range(k + 1, n):
                    if rk[j]:
                        ri[j] = ri[j] - q * rk[j]
                if r:
                    dirty = True
            for j in range(k + 1, n):
                e = rk[j]
                if not e:
                    continue
                q, r = divmod(e, p)
                rk[j] = r
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[i][j] = a[i][j] - q * a[i][k]
                if r:
                    dirty = True
            if dirty:
                continue
            bad = _find_nondivisible(a, p, k, n)
            if bad is None:
                break
            # add row bad into row k; the next pass reduces against p
            for j in range(k + 1, n):
                rk[j] = a[bad][j]
        if pick is None:
            diag.extend([Poly((), "t")] * (n - k))
            break
        diag.append(a[k][k].monic())
    factors = tuple(diag)
    for f, g in zip(factors, factors[1:]):
        if not f.divides(g):
            raise InvariantViolation("invariant factors do not form a divisibility chain")
    return InvariantFactors(factors, n)


def _find_nondivisible(a, p, k, n):
    if p.degree == 0:
        return None
    for i in range(k + 1, n):
        for j in range(k + 1, n):
            e = a[i][j]
            if e and e % p:
                return i
    return None


def similar_over_function_field(K: Mat, L: Mat) -> bool:
    if not (K.is_square() and L.is_square()):
        raise ShapeError("similarity is defined for square matrices")
    if K.nrows != L.nrows:
        return False
    return snf_invariant_factors(K).factors == snf_invariant_factors(L).factors


def evaluate_at_matrix(p: Poly, K: Mat) -> Mat:
    """p(K) by Horner's rule."""
    n = K.nrows
    acc = Mat.zeros(n)
    eye = Mat.identity(n)
    for c in reversed(p.coeffs):
        acc = acc @ K + eye * c
    return acc


def minimal_polynomial(K: Mat) -> Poly:
    Kr = as_ratfn_matrix(K)
    m = snf_invariant_factors(Kr).minimal_polynomial
    if not evaluate_at_matrix(m, Kr).is_zero():
        raise InvariantViolation("minimal polynomial does not annihilate the matrix")
    return m


def minimal_polynomial_squarefree(K: Mat) -> bool:
    """gcd(m, dm/dt) == 1 over Q(mu)."""
    m = minimal_polynomial(K)
    return is_squarefree(m)


def charpoly_over_function_field(K: Mat) -> Poly:
    return charpoly_berkowitz(as_ratfn_matrix(K), "t")


@dataclass(frozen=True)
class EquivalenceReport:
    charpoly_equal: bool
    similar: bool

    @property
    def violation(self) -> bool:
        return self.charpoly_equal != self.similar

    def to_json(self) -> dict:
        return {
            "charpoly_equal": self.charpoly_equal,
            "similar": self.similar,
            "violation": self.violation,
        }


def check_equivalence(K, L) -> EquivalenceReport:
    """Compare equal characteristic polynomials with similarity over Q(mu).

    Both sides are computed independently: Berkowitz characteristic
    polynomials on one hand and Smith-form invariant factors on the other.
    For symmetric inputs the two always agree, so ``violation`` must stay
    False. Asymmetric inputs are refused: there the two notions differ (a
    nilpotent Jordan block and the zero matrix share t^2).
    """
    K = K if isinstance(K, SymRatFnMat) else SymRatFnMat(K)
    L = L if isinstance(L, SymRatFnMat) else SymRatFnMat(L)
    if K.n != L.n:
        return EquivalenceReport(False, False)
    cp = charpoly_over_function_field(K.mat) == charpoly_over_function_field(L.mat)
    sim = snf_invariant_factors(K.mat).factors == snf_invariant_factors(L.mat).factors
    return EquivalenceReport(cp, sim)


def gcd_with_derivative(p: Poly) -> Poly:
    return poly_gcd(p, p.derivative())
