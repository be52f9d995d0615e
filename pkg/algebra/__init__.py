"""
algebra/__init__.py
Aritmética exacta: Q(i), polinomios multivariados y matrices de polinomios.
"""

from .gaussian import GaussianRational, ZERO, ONE, I_UNIT
from .polynomial import (
    PolyRing,
    Poly,
    Monomial,
    MAX_TOTAL_DEGREE,
    poly_arith,
    poly_sum,
    evaluate,
    symbolic_evaluate,
)
from .matrix import (
    PolyMatrix,
    determinant,
    determinant_laplace,
    determinant_bareiss,
    adjugate,
)
from .linalg import rank, row_echelon

__all__ = [
    "GaussianRational",
    "ZERO",
    "ONE",
    "I_UNIT",
    "PolyRing",
    "Poly",
    "Monomial",
    "MAX_TOTAL_DEGREE",
    "poly_arith",
    "poly_sum",
    "evaluate",
    "symbolic_evaluate",
    "PolyMatrix",
    "determinant",
    "determinant_laplace",
    "determinant_bareiss",
    "adjugate",
    "rank",
    "row_echelon",
]
