"""
constructible/__init__.py
Cálculo de celdas D(f) ∩ V(I) y sus uniones finitas.
"""

from .cells import Cell, ConstructibleSet, contains_point, intersect_cell, union, prune

__all__ = [
    "Cell",
    "ConstructibleSet",
    "contains_point",
    "intersect_cell",
    "union",
    "prune",
]
