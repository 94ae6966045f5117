"""Exact arithmetic foundations: polynomials, polynomial matrices, exact linear algebra."""

from .poly import Poly, ZERO_DEGREE, poly_shift, poly_bezout, poly_gcd
from .multipoly import MultiPoly, monomial_key, y_monomials, bidegree_monomials
from .polymatrix import (
    PolyMatrix,
    NotUnimodularError,
    polymatrix_det,
    polymatrix_inverse,
    adjugate,
)
from .linalg import exact_kernel, rank, bareiss_rref, det
from .roots import rational_roots
from .smith import smith_normal_form, hermite_normal_form, integer_kernel

__all__ = [
    "Poly", "ZERO_DEGREE", "poly_shift", "poly_bezout", "poly_gcd",
    "MultiPoly", "monomial_key", "y_monomials", "bidegree_monomials",
    "PolyMatrix", "NotUnimodularError", "polymatrix_det", "polymatrix_inverse", "adjugate",
    "exact_kernel", "rank", "bareiss_rref", "det",
    "rational_roots",
    "smith_normal_form", "hermite_normal_form", "integer_kernel",
]
