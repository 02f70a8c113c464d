import json
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.matrices import DomainMatrix

from degsim.algebra import Mat, mat_det, rank
from degsim.degree_similarity import (
    COEFF_HIGH,
    COEFF_LOW,
    DEGREE_SIMILAR,
    EMPTY_SPACE,
    INVARIANT_MISMATCH,
    NOT_DEGREE_SIMILAR,
    SINGULAR_SPACE,
    IntertwinerSpace,
    degree_similar,
    generic_invertibility,
    intertwiner_space,
    is_intertwiner,
    quick_reject,
    verify_certificate,
    word_list,
    word_trace_invariants,
)
from degsim.genchar import psi, psi_equal
from degsim.graphs import (
    Graph,
    adjacency_int,
    complete_graph,
    cycle_graph,
    graph6_decode,
    path_graph,
    star_graph,
)


def _random_graph(rng, n, p=0.5):
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p])


def _kron_nullity(g, h):
    # dimension of {M : A_g M = M A_h, D_g M = M D_h} via the vec/Kronecker system
    n = g.n
    Ag, Ah = sympy.Matrix(adjacency_int(g)), sympy.Matrix(adjacency_int(h))
    Dg, Dh = sympy.diag(*g.degrees()), sympy.diag(*h.degrees())
    eye = sympy.eye(n)
    sys_a = sympy.kronecker_product(eye, Ag) - sympy.kronecker_product(Ah.T, eye)
    sys_d = sympy.kronecker_product(eye, Dg) - sympy.kronecker_product(Dh.T, eye)
    system = DomainMatrix.from_Matrix(sys_a.col_join(sys_d)).convert_to(sympy.QQ)
    return n * n - system.rank()


def test_k2_space_is_span_of_identity_and_adjacency():
    k2 = complete_graph(2)
    space = intertwiner_space(k2, k2)
    assert space.dim == 2
    span = Mat([list(B.entries()) for B in space.basis] + [[1, 0, 0, 1], [0, 1, 1, 0]])
    assert rank(span) == 2


def test_examples_from_hand_computation():
    e = Graph.empty(2)
    assert intertwiner_space(e, e).dim == 4
    # K2 + K1 against K1 + K2 relabelled: a permutation matrix works
    g = Graph.from_edges(3, [(0, 1)])
    h = Graph.from_edges(3, [(1, 2)])
    v = degree_similar(g, h)
    assert v.is_similar and verify_certificate(v.certificate, g, h)
    v = degree_similar(complete_graph(2), Graph.empty(2))
    assert v.decision == NOT_DEGREE_SIMILAR and v.kind == EMPTY_SPACE


def test_span_of_diagonal_units_is_similar_and_single_offdiagonal_is_singular():
    E11 = Mat([[1, 0], [0, 0]])
    E22 = Mat([[0, 0], [0, 1]])
    E12 = Mat([[0, 1], [0, 0]])
    v = generic_invertibility(IntertwinerSpace((E11, E22), 2))
    assert v.is_similar and mat_det(v.certificate) != 0
    v = generic_invertibility(IntertwinerSpace((E12,), 2))
    assert v.decision == NOT_DEGREE_SIMILAR and v.kind == SINGULAR_SPACE and v.error_bound == 0


def test_random_path_error_bound():
    E12 = Mat([[0, 1], [0, 0]])
    v = generic_invertibility(IntertwinerSpace((E12,), 2), trials=5, seed=1, exact_budget=0)
    assert v.kind == SINGULAR_SPACE
    assert v.error_bound == Fraction(2, COEFF_HIGH - COEFF_LOW) ** 5
    assert not v.unconditional


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 6), st.booleans())
def test_basis_solves_the_equations_and_has_full_dimension(seed, n, relabel):
    rng = random.Random(seed)
    g = _random_graph(rng, n)
    if relabel:
        perm = list(range(n))
        rng.shuffle(perm)
        h = g.relabel(perm)
    else:
        h = _random_graph(rng, n)
    space = intertwiner_space(g, h)
    for B in space.basis:
        assert is_intertwiner(B, g, h)
        assert all(x.denominator == 1 for x in map(Fraction, B.entries()))
    if space.dim:
        assert rank(Mat([list(B.entries()) for B in space.basis])) == space.dim
    assert space.dim == _kron_nullity(g, h)


def test_exact_grid_agrees_with_random_trials():
    rng = random.Random(21)
    checked = 0
    while checked < 25:
        n = rng.randint(2, 6)
        g = _random_graph(rng, n)
        h = _random_graph(rng, n) if rng.random() < 0.5 else g.relabel(rng.sample(range(n), n))
        space = intertwiner_space(g, h)
        if not 1 <= space.dim <= 3:
            continue
        exact = generic_invertibility(space)
        rand = generic_invertibility(space, seed=rng.randrange(1000), exact_budget=0)
        assert exact.is_similar == rand.is_similar
        checked += 1


def test_relabelled_copies_are_degree_similar_with_equal_psi():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(1, 8)
        g = _random_graph(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        v = degree_similar(g, h, seed=rng.randrange(100))
        assert v.is_similar and verify_certificate(v.certificate, g, h)
        assert psi_equal(psi(g), psi(h))


def test_negative_control_same_adjacency_spectrum():
    s = star_graph(4)
    c = cycle_graph(4).disjoint_union(Graph.empty(1))
    v = degree_similar(s, c)
    assert v.decision == NOT_DEGREE_SIMILAR and v.unconditional
    v = degree_similar(s, c, prefilter=True)
    assert v.kind == INVARIANT_MISMATCH and v.reason == "degree-multiset"


def test_quick_reject_reasons():
    assert quick_reject(path_graph(3), path_graph(4)) == "vertex-count"
    assert quick_reject(path_graph(4), star_graph(3)) == "degree-multiset"
    assert quick_reject(path_graph(4), path_graph(4).relabel([2, 0, 3, 1])) is None


def test_word_traces():
    s = star_graph(4)
    inv = dict(zip(word_list(2), word_trace_invariants(s, 2)))
    assert inv["A"] == 0
    assert inv["D"] == 8
    assert inv["AA"] == 2 * s.num_edges
    assert inv["DD"] == 16 + 4
    assert word_list(2) == ["A", "D", "AA", "AD", "DA", "DD"]
    with pytest.raises(ValueError):
        word_trace_invariants(s, 0)


def test_verify_certificate_rejects_bad_matrices():
    g = path_graph(3)
    assert not verify_certificate(Mat.zeros(3), g, g)
    assert not verify_certificate(Mat([[0, 1, 0], [1, 0, 0], [0, 0, 1]]), g, g)
    assert verify_certificate(Mat([[0, 0, 1], [0, 1, 0], [1, 0, 0]]), g, g)


def test_verdict_json():
    v = degree_similar(path_graph(3), path_graph(3).relabel([1, 0, 2]))
    obj = json.loads(v.dumps())
    assert obj["decision"] == DEGREE_SIMILAR and obj["error_bound"] is None
    assert len(obj["certificate"]) == 3
    v = degree_similar(complete_graph(2), Graph.empty(2))
    assert json.loads(v.dumps()) == {"decision": NOT_DEGREE_SIMILAR, "kind": EMPTY_SPACE,
                                     "certificate": None, "error_bound": None}


def test_nine_vertex_psi_twins_are_exactly_not_degree_similar():
    # a psi-equal pair found by searching all 9-vertex graphs
    g, h = graph6_decode(b"H@UfUq{"), graph6_decode(b"H@TnFqq")
    assert psi_equal(psi(g), psi(h))
    assert quick_reject(g, h) is None
    space = intertwiner_space(g, h)
    assert space.dim == 1 and mat_det(space.basis[0]) == 0
    v = degree_similar(g, h)
    assert v.kind == SINGULAR_SPACE and v.error_bound == 0 and v.unconditional
