"""
infinitesimal/__init__.py
Lugar de ceros del invariante infinitesimal a partir de datos de conexión
en una carta, y las comprobaciones del ejemplo de la cuádrica.
"""

from .chart import ChartConnection, base_ring, tangent_ring
from .tangent_system import build_tangent_system, infinitesimal_locus
from .quadric import QuadricCheck, quadric_example_checks

__all__ = [
    "ChartConnection",
    "base_ring",
    "tangent_ring",
    "build_tangent_system",
    "infinitesimal_locus",
    "QuadricCheck",
    "quadric_example_checks",
]
