"""
infinitesimal/tangent_system.py
Sistema lineal cuyo lugar de solubilidad es el lugar de ceros del
invariante infinitesimal sobre TU.

En un punto (x, ξ) se busca σ = Σ φ_i e_i con ∇_ξ(ν̃ - σ)(x) = 0. Las
incógnitas son los q(n+1) números ∂φ_i/∂x_k(x) y φ_i(x); las ecuaciones son
las p componentes en el marco e_1..e_p.
"""

from typing import Optional

from algebra.polynomial import poly_sum
from constructible.cells import ConstructibleSet
from infinitesimal.chart import ChartConnection, tangent_ring
from utils.logger import setup_logger
from zerolocus.presentation import ModulePresentation
from zerolocus.strata import zero_locus

logger = setup_logger(__name__)


def derivative_column(c: ChartConnection, i: int, k: int) -> int:
    """Columna de la incógnita ∂φ_i/∂x_k."""
    return i * c.n + k


def value_column(c: ChartConnection, i: int) -> int:
    """Columna de la incógnita φ_i."""
    return c.q * c.n + i


def build_tangent_system(c: ChartConnection) -> ModulePresentation:
    """
    Presentación p x q(n+1) sobre Q(i)[x1..xn, xi1..xin].

    Columnas: primero las derivadas en orden (i, k), luego los q valores.
    La columna de ∂φ_i/∂x_k tiene ξ_k en la fila i; la de φ_i tiene
    Σ_k ξ_k a[k][i][j] en la fila j. El lado derecho es y[j] = Σ_k ξ_k f[k][j].
    """
    ring = tangent_ring(c.n)
    xi = ring.gens[c.n:]
    cols = c.q * (c.n + 1)
    rows = [[ring.zero] * cols for _ in range(c.p)]

    for i in range(c.q):
        for k in range(c.n):
            rows[i][derivative_column(c, i, k)] = xi[k]

    for i in range(c.q):
        for j in range(c.p):
            rows[j][value_column(c, i)] = poly_sum(
                ring, (xi[k] * c.a[k][i][j].embed(ring) for k in range(c.n))
            )

    y = [
        poly_sum(ring, (xi[k] * c.f[k][j].embed(ring) for k in range(c.n)))
        for j in range(c.p)
    ]
    logger.debug(f"Sistema tangente {c.p}x{cols} en {list(ring.variable_names)}")
    return ModulePresentation.from_rows(ring, rows, y, cols=cols)


def infinitesimal_locus(
    c: ChartConnection, prune: bool = True, workers: Optional[int] = None
) -> ConstructibleSet:
    """I(ν) ∩ TU como subconjunto constructible del espacio (x, ξ)."""
    return zero_locus(build_tangent_system(c), prune=prune, workers=workers)
