import random
from fractions import Fraction
from math import comb, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degsim.algebra import DEFAULT_PRIME, Poly, Poly2, charpoly_bareiss
from degsim.errors import ConfigError, ParseError
from degsim.genchar import (
    GenCharPoly,
    default_fingerprint,
    psi,
    psi_equal,
    psi_fingerprint,
    psi_interpolation_oracle,
    sample_points,
)
from degsim.graphs import (
    Graph,
    adjacency_and_degree,
    all_graphs_upto,
    complete_graph,
    cycle_graph,
    laplacian,
    star_graph,
)


def _random_graph(rng, n, p=0.5):
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p])


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


K2_PSI = Poly2([[-1, 0, 1], [0, 2], [1]])  # t^2 + 2 mu t + mu^2 - 1


def test_psi_examples():
    assert psi(Graph.empty(1)).poly == Poly2([[0], [1]])
    assert psi(complete_graph(2)).poly == K2_PSI


def test_psi_at_mu_zero_is_adjacency_charpoly():
    rng = random.Random(3)
    for _ in range(15):
        g = _random_graph(rng, rng.randint(1, 7))
        A, _ = adjacency_and_degree(g)
        assert psi(g).at_mu(0) == charpoly_bareiss(A)


def test_psi_at_mu_one_is_signless_shift_of_laplacian():
    # psi(G, t, 1) = det(tI - (A - D)) = det(tI + L), with L built separately
    rng = random.Random(4)
    for _ in range(15):
        g = _random_graph(rng, rng.randint(1, 7))
        assert psi(g).at_mu(1) == charpoly_bareiss(-laplacian(g))


def test_oracle_examples():
    assert psi_interpolation_oracle(complete_graph(2)).poly == K2_PSI
    for n in range(6):
        assert psi_interpolation_oracle(Graph.empty(n)).poly == Poly2([[0]] * n + [[1]])


def _shifted(cp: Poly, d: int) -> Poly2:
    # sum_k c_k (t + d mu)^k by the binomial theorem
    n = cp.degree
    grid = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for k, c in enumerate(cp.coeffs):
        for i in range(k + 1):
            grid[i][k - i] += c * comb(k, i) * d ** (k - i)
    return Poly2(grid)


@pytest.mark.parametrize(
    "g, d",
    [(cycle_graph(5), 2), (complete_graph(4), 3), (cycle_graph(6), 2), (Graph.empty(3), 0),
     (cycle_graph(3).disjoint_union(cycle_graph(4)), 2)],
)
def test_regular_graphs_substitution(g, d):
    A, _ = adjacency_and_degree(g)
    expected = _shifted(charpoly_bareiss(A), d)
    assert psi(g).poly == expected
    assert psi_interpolation_oracle(g).poly == expected


def test_oracle_agreement_small_exhaustive():
    for g in all_graphs_upto(5):
        assert psi(g) == psi_interpolation_oracle(g)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8))
def test_gencharpoly_invariants(g):
    p = psi(g)
    n = g.n
    assert p.poly.tdeg == n and p.coeff(n, 0) == 1
    assert all(p.coeff(n, j) == 0 for j in range(1, n + 1))
    assert p.poly.mudeg <= n
    assert p.coeff(0, n) == prod(g.degrees())
    # coefficient of t^(n-1) is (sum of degrees) * mu
    assert p.poly.t_coeff(n - 1) == Poly((0, sum(g.degrees())), "mu")


def test_psi_equal_examples():
    g = _random_graph(random.Random(1), 7)
    perm = list(range(7))
    random.Random(2).shuffle(perm)
    assert psi_equal(psi(g), psi(g.relabel(perm)))
    star = star_graph(4)
    c4k1 = cycle_graph(4).disjoint_union(Graph.empty(1))
    assert psi(star).coeff(0, 5) == 4 and psi(c4k1).coeff(0, 5) == 0
    assert not psi_equal(psi(star), psi(c4k1))
    assert not psi_equal(psi(complete_graph(2)), psi(Graph.empty(2)))


def test_json_round_trip():
    p = psi(star_graph(3))
    obj = p.to_json()
    assert obj["n"] == 4 and obj["tdeg"] == 4
    assert all(isinstance(c, str) and "/" in c for row in obj["coeffs"] for c in row)
    assert GenCharPoly.from_json(obj) == p
    with pytest.raises(ParseError):
        GenCharPoly.from_json({"n": 1, "tdeg": 3, "mudeg": 0, "coeffs": [["0/1"], ["1/1"]]})


def test_json_for_k2():
    assert psi(complete_graph(2)).to_json() == {
        "n": 2,
        "tdeg": 2,
        "mudeg": 2,
        "coeffs": [["-1/1", "0/1", "1/1"], ["0/1", "2/1", "0/1"], ["1/1", "0/1", "0/1"]],
    }


# -- fingerprints ----------------------------------------------------------------


def test_fingerprint_deterministic():
    g = _random_graph(random.Random(9), 8)
    assert default_fingerprint(g, seed=5) == default_fingerprint(g, seed=5)
    assert sample_points(5, DEFAULT_PRIME) == sample_points(5, DEFAULT_PRIME)
    assert sample_points(5, DEFAULT_PRIME) != sample_points(6, DEFAULT_PRIME)


@pytest.mark.parametrize("p", [DEFAULT_PRIME, 101, 2**31 - 1])
def test_fingerprint_k2_origin(p):
    fp = psi_fingerprint(complete_graph(2), p, [(0, 0)])
    assert fp.residues == (p - 1,)


def test_fingerprint_matches_exact_evaluation():
    rng = random.Random(11)
    p = 1_000_003
    for _ in range(10):
        g = _random_graph(rng, rng.randint(1, 8))
        pts = [(rng.randrange(p), rng.randrange(p)) for _ in range(4)]
        exact = psi(g)
        fp = psi_fingerprint(g, p, pts)
        assert list(fp.residues) == [int(exact(a, b)) % p for a, b in pts]


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_fingerprint_relabel_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert default_fingerprint(g) == default_fingerprint(g.relabel(perm))


def test_fingerprint_config_errors():
    with pytest.raises(ConfigError):
        psi_fingerprint(complete_graph(2), 100, [(0, 0)])
    with pytest.raises(ConfigError):
        psi_fingerprint(complete_graph(2), 101, [(101, 0)])
    with pytest.raises(ConfigError):
        sample_points(0, 101, 0)
