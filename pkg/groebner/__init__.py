"""
groebner/__init__.py
Aritmética de ideales: bases de Gröbner, formas normales y radicales.
"""

from .buchberger import buchberger, reduce, spoly, is_groebner_basis
from .ideal import (
    Ideal,
    groebner_basis,
    normal_form,
    ideal_contains,
    radical_membership,
    ideal_sum,
    ideals_equal,
    clear_basis_cache,
)

__all__ = [
    "buchberger",
    "reduce",
    "spoly",
    "is_groebner_basis",
    "Ideal",
    "groebner_basis",
    "normal_form",
    "ideal_contains",
    "radical_membership",
    "ideal_sum",
    "ideals_equal",
    "clear_basis_cache",
]
