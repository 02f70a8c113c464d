"""Simple undirected graphs, the graph6 codec, and the matrices A, D, A - mu*D."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .algebra import Mat, Poly, RatFn
from .errors import CapacityError, ParseError

MAX_VERTICES = 64
GRAPH6_HEADER = b">>graph6<<"


@dataclass(frozen=True)
class Graph:
    """Graph on vertices ``0..n-1``; ``adj[i]`` is the neighbour bitmask of i."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"graphs are capped at {MAX_VERTICES} vertices, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        for i, row in enumerate(self.adj):
            if row >> self.n:
                raise ValueError(f"vertex {i} has a neighbour out of range")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in _bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in _bits(self.adj[i]) if i < j]

    @property
    def num_edges(self) -> int:
        return sum(bin(r).count("1") for r in self.adj) // 2

    def degrees(self) -> list[int]:
        return [bin(r).count("1") for r in self.adj]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image under the vertex map ``i -> perm[i]``."""
        return Graph.from_edges(self.n, [(perm[i], perm[j]) for i, j in self.edges()])

    def disjoint_union(self, other: "Graph") -> "Graph":
        k = self.n
        return Graph.from_edges(
            self.n + other.n, self.edges() + [(i + k, j + k) for i, j in other.edges()]
        )

    def __str__(self):
        return graph6_encode(self).decode("ascii")


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# -- small named graphs -----------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)] if n >= 3 else [])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre as vertex 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# -- graph6 -------------------------------------------------------------------


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    raise CapacityError(f"n = {n} too large for graph6")


def graph6_encode(g: Graph) -> bytes:
    if g.n > MAX_VERTICES:
        raise CapacityError(f"graphs are capped at {MAX_VERTICES} vertices")
    out = bytearray(_encode_n(g.n))
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def graph6_decode(line: bytes | str) -> Graph:
    """Decode one graph6 string (trailing newline and header allowed)."""
    if isinstance(line, str):
        line = line.encode("ascii", errors="replace")
    data = line.rstrip(b"\r\n")
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise ParseError("empty graph6 string", offset=0)
    for k, b in enumerate(data):
        if not 63 <= b <= 126:
            raise ParseError(f"byte {b!r} outside the graph6 range 63..126", offset=k)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated 8-byte vertex count", offset=len(data))
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        pos = 8
    else:
        if len(data) < 4:
            raise ParseError("truncated 4-byte vertex count", offset=len(data))
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        pos = 4
    if n > MAX_VERTICES:
        raise CapacityError(f"graph has {n} vertices; cap is {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ParseError(
            f"expected {need} edge bytes for n = {n}, found {len(body)}",
            offset=pos + min(len(body), need),
        )
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if need and (body[-1] - 63) & ((1 << (need * 6 - nbits)) - 1):
        raise ParseError("nonzero padding bits", offset=pos + need - 1)
    return Graph(n, tuple(adj))


def read_graph6_lines(data: bytes) -> Iterator[tuple[int, bytes]]:
    """Yield ``(line_number, stripped_line)`` for non-blank lines; 1-based numbers."""
    for k, raw in enumerate(data.split(b"\n"), start=1):
        line = raw.rstrip(b"\r")
        if k == 1 and line.startswith(GRAPH6_HEADER):
            line = line[len(GRAPH6_HEADER):]
        if not line.strip():
            continue
        yield k, line


# -- matrices -----------------------------------------------------------------


def adjacency_and_degree(g: Graph) -> tuple[Mat, Mat]:
    one, zero = Fraction(1), Fraction(0)
    A = Mat([[one if g.adj[i] >> j & 1 else zero for j in range(g.n)] for i in range(g.n)])
    D = Mat.diag([Fraction(d) for d in g.degrees()], zero=zero)
    return A, D


def adjacency_int(g: Graph) -> list[list[int]]:
    return [[g.adj[i] >> j & 1 for j in range(g.n)] for i in range(g.n)]


@dataclass(frozen=True)
class Pencil:
    """The symmetric matrix ``constant + mu * mu_coeff`` = A - mu*D."""

    constant: Mat
    mu_coeff: Mat

    @property
    def n(self) -> int:
        return self.constant.nrows

    def evaluate(self, mu) -> Mat:
        return self.constant + self.mu_coeff * Fraction(mu)

    def as_polynomial(self) -> Mat:
        """Entries as polynomials in mu (integer coefficients)."""
        n = self.n
        return Mat(
            [
                [Poly((int(self.constant[i, j]), int(self.mu_coeff[i, j])), "mu") for j in range(n)]
                for i in range(n)
            ]
        )

    def as_ratfn(self) -> Mat:
        n = self.n
        return Mat(
            [
                [RatFn(Poly((self.constant[i, j], self.mu_coeff[i, j]), "mu")) for j in range(n)]
                for i in range(n)
            ]
        )


def pencil(g: Graph) -> Pencil:
    A, D = adjacency_and_degree(g)
    return Pencil(A, -D)


def laplacian(g: Graph) -> Mat:
    A, D = adjacency_and_degree(g)
    return D - A


# -- exhaustive small corpora -------------------------------------------------

ENUMERATION_LIMIT = 6


def all_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class of graphs on n vertices.

    Brute force: walk all labelled graphs, and for each unseen one mark its
    whole orbit under S_n as seen. The representative is the orbit element
    with the smallest graph6 bit string. Only practical for n <= 6.
    """
    if n > ENUMERATION_LIMIT:
        raise CapacityError(f"exhaustive enumeration is limited to n <= {ENUMERATION_LIMIT}")
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    m = len(pairs)
    index = {p: k for k, p in enumerate(pairs)}
    # bit (m-1-k) of a code is edge pairs[k], so codes order like graph6 strings
    tables = []
    for perm in itertools.permutations(range(n)):
        t = []
        for i, j in pairs:
            a, b = perm[i], perm[j]
            t.append(m - 1 - index[(a, b) if a < b else (b, a)])
        tables.append(t)
    seen = bytearray(1 << m)
    reps = []
    for code in range(1 << m):
        if seen[code]:
            continue
        bits = [k for k in range(m) if code >> (m - 1 - k) & 1]
        best = code
        for t in tables:
            img = 0
            for k in bits:
                img |= 1 << t[k]
            seen[img] = 1
            if img < best:
                best = img
        reps.append((len(bits), best))
    out = []
    for _, code in sorted(reps):
        out.append(Graph.from_edges(n, [pairs[k] for k in range(m) if code >> (m - 1 - k) & 1]))
    return out


def all_graphs_upto(n: int) -> list[Graph]:
    out = []
    for k in range(n + 1):
        out.extend(all_graphs(k))
    return out
