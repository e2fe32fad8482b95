"""Exact scalar, polynomial and polynomial-matrix arithmetic."""
from .algebra import char_poly, poly_squarefree, resultant, sylvester_matrix
from .field import DEFAULT_FIELD, DEFAULT_MODULUS, RATIONALS, Field
from .matrix import Mat, bilinear, matvec, nullspace, rank, rref
from .normalforms import (
    column_hermite,
    column_span_contains,
    completion,
    hermite_basis,
    maximal_minors_gcd,
    saturated_kernel,
    smith_hermite_basis,
    smith_invariants,
)
from .poly import AuxPoly, Poly
from .ratfunc import RatFunc

__all__ = [
    "AuxPoly", "DEFAULT_FIELD", "DEFAULT_MODULUS", "Field", "Mat", "Poly",
    "RATIONALS", "RatFunc", "bilinear", "char_poly", "column_hermite",
    "column_span_contains", "completion", "hermite_basis", "matvec",
    "maximal_minors_gcd", "nullspace", "poly_squarefree", "rank", "resultant",
    "rref", "saturated_kernel", "smith_hermite_basis", "smith_invariants",
    "sylvester_matrix",
]
