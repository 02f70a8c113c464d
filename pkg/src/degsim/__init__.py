"""Exact tools for the generalized characteristic polynomial and degree-similarity of graphs."""
from .degree_similarity import (
    DegSimVerdict,
    IntertwinerSpace,
    degree_similar,
    generic_invertibility,
    intertwiner_space,
    word_trace_invariants,
)
from .genchar import GenCharPoly, PsiFingerprint, psi, psi_equal, psi_fingerprint, psi_interpolation_oracle
from .graphs import Graph, Pencil, adjacency_and_degree, graph6_decode, graph6_encode, pencil
from .similarity import (
    InvariantFactors,
    check_equivalence,
    minimal_polynomial,
    similar_over_function_field,
    snf_invariant_factors,
)

__version__ = "0.1.0"
