"""Degree-similarity: one invertible M with M^-1 A(G) M = A(H), M^-1 D(G) M = D(H).

Multiplying through by M, the conditions become the linear equations
A(G) M = M A(H) and D(G) M = M D(H). Their solution set (the intertwiner
space) is cut out by rational equations, so it has a rational basis
B_1..B_d, and G, H are degree-similar iff det(x_1 B_1 + ... + x_d B_d) is not
the zero polynomial. That polynomial has rational coefficients, and a
polynomial over Q vanishes on all of R^d iff it is formally zero, so an
invertible real M exists iff an invertible rational one does. Every YES
verdict below therefore carries a rational (in fact integer) certificate.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .algebra import Mat, inverse, mat_det, nullspace_rational
from .errors import DomainError, InvariantViolation
from .graphs import Graph, adjacency_and_degree, adjacency_int

DEFAULT_TRIALS = 20
COEFF_LOW = 1
COEFF_HIGH = 2**31  # exclusive
EXACT_GRID_BUDGET = 1000  # max (n + 1) ** dim determinants on the exact path

DEGREE_SIMILAR = "degree-similar"
NOT_DEGREE_SIMILAR = "not-degree-similar"
EMPTY_SPACE = "empty-space"
SINGULAR_SPACE = "singular-space"
INVARIANT_MISMATCH = "invariant-mismatch"


@dataclass(frozen=True)
class IntertwinerSpace:
    basis: tuple[Mat, ...]
    n: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    def combine(self, coeffs) -> Mat:
        n = self.n
        rows = [[0] * n for _ in range(n)]
        for c, B in zip(coeffs, self.basis):
            if c == 0:
                continue
            for i in range(n):
                Bi, ri = B.rows[i], rows[i]
                for j in range(n):
                    if Bi[j]:
                        ri[j] += c * Bi[j]
        return Mat(rows)


@dataclass(frozen=True)
class DegSimVerdict:
    decision: str
    kind: str | None = None
    certificate: Mat | None = None
    error_bound: Fraction | None = None
    reason: str | None = None

    @property
    def is_similar(self) -> bool:
        return self.decision == DEGREE_SIMILAR

    @property
    def unconditional(self) -> bool:
        return self.kind != SINGULAR_SPACE or self.error_bound == 0

    def to_json(self) -> dict:
        out = {
            "decision": self.decision,
            "kind": self.kind,
            "certificate": (
                [[int(x) for x in r] for r in self.certificate.rows]
                if self.certificate is not None
                else None
            ),
            "error_bound": (
                f"{self.error_bound.numerator}/{self.error_bound.denominator}"
                if self.error_bound is not None
                else None
            ),
        }
        if self.reason is not None:
            out["reason"] = self.reason
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def _int_basis_matrix(B: Mat) -> Mat:
    # clear denominators and divide by the content: a primitive integer matrix
    ents = [Fraction(x) for x in B.entries()]
    den = 1
    for x in ents:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in ents]
    g = 0
    for x in ints:
        g = gcd(g, x)
    g = g or 1
    lead = next((x for x in ints if x), 1)
    if lead < 0:
        g = -g
    n = B.ncols
    return Mat([[x // g for x in ints[i * n:(i + 1) * n]] for i in range(B.nrows)])


def normalize_certificate(M: Mat) -> Mat:
    """Primitive integer matrix with positive first nonzero entry."""
    return _int_basis_matrix(M)


def intertwiner_space(g: Graph, h: Graph) -> IntertwinerSpace:
    """Basis of {M : A(G) M = M A(H), D(G) M = M D(H)}.

    This is the nullspace of the stacked 2n^2 x n^2 system in the unknowns
    M[k][l]. Each D-row reads (d_G(i) - d_H(j)) M[i][j] = 0, so those rows are
    applied first by deleting every unknown with d_G(i) != d_H(j); the
    A-rows are then solved over the surviving unknowns. Graphs of different
    orders give the zero space.
    """
    if g.n != h.n:
        return IntertwinerSpace((), g.n)
    n = g.n
    if n == 0:
        return IntertwinerSpace((Mat([]),), 0)
    ag, ah = adjacency_int(g), adjacency_int(h)
    dg, dh = g.degrees(), h.degrees()
    free = [(i, j) for i in range(n) for j in range(n) if dg[i] == dh[j]]
    if not free:
        return IntertwinerSpace((), n)
    col = {ij: c for c, ij in enumerate(free)}
    rows = []
    for i in range(n):
        for j in range(n):
            # (A_G M - M A_H)[i][j] = sum_k A_G[i][k] M[k][j] - sum_k M[i][k] A_H[k][j]
            r = [0] * len(free)
            for k in range(n):
                if ag[i][k] and (k, j) in col:
                    r[col[(k, j)]] += 1
                if ah[k][j] and (i, k) in col:
                    r[col[(i, k)]] -= 1
            if any(r):
                rows.append(r)
    if not rows:
        rows = [[0] * len(free)]
    basis = []
    for v in nullspace_rational(Mat(rows)):
        B = [[0] * n for _ in range(n)]
        for (i, j), x in zip(free, (x[0] for x in v.rows)):
            B[i][j] = x
        basis.append(_int_basis_matrix(Mat(B)))
    return IntertwinerSpace(tuple(basis), n)


def is_intertwiner(B: Mat, g: Graph, h: Graph) -> bool:
    Ag, Dg = adjacency_and_degree(g)
    Ah, Dh = adjacency_and_degree(h)
    return Ag @ B == B @ Ah and Dg @ B == B @ Dh


def _exact_grid_search(space: IntertwinerSpace):
    # det(sum x_i B_i) has degree <= n in each x_i, so it is the zero
    # polynomial iff it vanishes on a grid with n + 1 values per coordinate
    values = range(1, space.n + 2)
    for coeffs in itertools.product(values, repeat=space.dim):
        M = space.combine(coeffs)
        if mat_det(M) != 0:
            return M
    return None


def generic_invertibility(
    space: IntertwinerSpace,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    exact_budget: int = EXACT_GRID_BUDGET,
) -> DegSimVerdict:
    """Decide whether ``space`` contains an invertible matrix.

    When the interpolation grid has at most ``exact_budget`` points
    ((n + 1) ** dim) the question is settled exactly. Otherwise ``trials``
    random combinations with coefficients in [1, 2^31) are tested; a NO then
    holds with error probability at most (n / (2^31 - 1)) ** trials by the
    Schwartz-Zippel lemma.
    """
    if space.dim == 0:
        return DegSimVerdict(NOT_DEGREE_SIMILAR, EMPTY_SPACE)
    n = space.n
    if (n + 1) ** space.dim <= exact_budget:
        M = _exact_grid_search(space)
        if M is not None:
            return DegSimVerdict(DEGREE_SIMILAR, certificate=normalize_certificate(M))
        return DegSimVerdict(NOT_DEGREE_SIMILAR, SINGULAR_SPACE, error_bound=Fraction(0))
    rng = random.Random(seed)
    for _ in range(trials):
        coeffs = [rng.randrange(COEFF_LOW, COEFF_HIGH) for _ in range(space.dim)]
        M = space.combine(coeffs)
        if mat_det(M) != 0:
            return DegSimVerdict(DEGREE_SIMILAR, certificate=normalize_certificate(M))
    per_trial = Fraction(n, COEFF_HIGH - COEFF_LOW)
    return DegSimVerdict(NOT_DEGREE_SIMILAR, SINGULAR_SPACE, error_bound=min(per_trial, 1) ** trials)


def verify_certificate(M: Mat, g: Graph, h: Graph) -> bool:
    """M^-1 A(G) M == A(H) and M^-1 D(G) M == D(H), exactly."""
    if M.nrows != g.n or g.n != h.n:
        return False
    try:
        Minv = inverse(M.map(Fraction))
    except DomainError:
        return False
    Ag, Dg = adjacency_and_degree(g)
    Ah, Dh = adjacency_and_degree(h)
    return Minv @ Ag @ M == Ah and Minv @ Dg @ M == Dh


def word_trace_invariants(g: Graph, max_len: int) -> list[Fraction]:
    """Traces of all words in {A, D} of length 1..max_len.

    Order: by length, then lexicographically with A before D.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    A, D = adjacency_and_degree(g)
    mats = {"A": A, "D": D}
    out = []
    level = {"": Mat.identity(g.n, Fraction(1), Fraction(0))}
    for _ in range(max_len):
        nxt = {}
        for w in sorted(level):
            for letter in "AD":
                nxt[w + letter] = level[w] @ mats[letter]
        for w in sorted(nxt):
            out.append(Fraction(nxt[w].trace()))
        level = nxt
    return out


def word_list(max_len: int) -> list[str]:
    return ["".join(p) for k in range(1, max_len + 1) for p in itertools.product("AD", repeat=k)]


def quick_reject(g: Graph, h: Graph, word_len: int = 4) -> str | None:
    """A necessary condition that fails, or None. Cheap tests only."""
    if g.n != h.n:
        return "vertex-count"
    if sorted(g.degrees()) != sorted(h.degrees()):
        return "degree-multiset"
    if word_trace_invariants(g, word_len) != word_trace_invariants(h, word_len):
        return "word-traces"
    return None


def degree_similar(
    g: Graph,
    h: Graph,
    *,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    prefilter: bool = False,
) -> DegSimVerdict:
    """Decide degree-similarity of g and h.

    With ``prefilter`` the cheap necessary conditions of :func:`quick_reject`
    run first and a failure short-circuits to an unconditional NO.
    """
    if prefilter:
        why = quick_reject(g, h)
        if why is not None:
            return DegSimVerdict(NOT_DEGREE_SIMILAR, INVARIANT_MISMATCH, reason=why)
    space = intertwiner_space(g, h)
    verdict = generic_invertibility(space, trials=trials, seed=seed)
    if verdict.is_similar and not verify_certificate(verdict.certificate, g, h):
        raise InvariantViolation("degree-similarity certificate failed re-verification")
    return verdict
