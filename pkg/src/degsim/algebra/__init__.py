"""Exact arithmetic: Q, Q[x], Q(mu), GF(p) and dense linear algebra over them."""
from fractions import Fraction

from .matrix import (
    Mat,
    char_matrix,
    charpoly_bareiss,
    charpoly_berkowitz,
    inverse,
    mat_det,
    nullspace_rational,
    rank,
    rref,
)
from .poly import Poly, format_poly, is_squarefree, poly_gcd
from .poly2 import Poly2
from .primefield import DEFAULT_PRIME, GF, check_prime, det_mod_p
from .ratfn import RatFn, parse_qpoly, ratfn_normalize

Rat = Fraction

__all__ = [
    "DEFAULT_PRIME",
    "GF",
    "Mat",
    "Poly",
    "Poly2",
    "Rat",
    "RatFn",
    "char_matrix",
    "charpoly_bareiss",
    "charpoly_berkowitz",
    "check_prime",
    "det_mod_p",
    "format_poly",
    "inverse",
    "is_squarefree",
    "mat_det",
    "nullspace_rational",
    "parse_qpoly",
    "poly_gcd",
    "rank",
    "ratfn_normalize",
    "rref",
]
