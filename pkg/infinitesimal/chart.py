"""
infinitesimal/chart.py
Datos de conexión de una función normal sobre una carta U con coordenadas
x1..xn.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

from algebra.polynomial import Poly, PolyRing
from exceptions import RingMismatchError, ShapeError


def base_ring(n: int) -> PolyRing:
    """Q(i)[x1, ..., xn]."""
    return PolyRing(tuple(f"x{k + 1}" for k in range(n)))


def tangent_ring(n: int) -> PolyRing:
    """Q(i)[x1, ..., xn, xi1, ..., xin]: coordenadas (x, ξ) del fibrado tangente."""
    return PolyRing(
        tuple(f"x{k + 1}" for k in range(n)) + tuple(f"xi{k + 1}" for k in range(n))
    )


@dataclass(frozen=True)
class ChartConnection:
    """
    Conexión en un marco e_1..e_p de F^{-1}H cuyos primeros q vectores
    generan F^0H.

    Attributes:
        n: Número de coordenadas de la base
        p: Rango de F^{-1}H en la carta
        q: Rango de F^0H (q <= p)
        a: a[k][i][j], coeficiente de dx_k ⊗ e_j en ∇e_i (forma n x q x p)
        f: f[k][j], coeficiente de dx_k ⊗ e_j en ∇ν̃ (forma n x p)
    """
    n: int
    p: int
    q: int
    a: Tuple[Tuple[Tuple[Poly, ...], ...], ...]
    f: Tuple[Tuple[Poly, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ShapeError(f"La carta necesita al menos una coordenada (n = {self.n})")
        if self.p < 1:
            raise ShapeError(f"p debe ser positivo (p = {self.p})")
        if not 0 <= self.q <= self.p:
            raise ShapeError(f"Se requiere 0 <= q <= p (q = {self.q}, p = {self.p})")

        a = _freeze(self.a, (self.n, self.q, self.p), "a")
        f = _freeze(self.f, (self.n, self.p), "f")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "f", f)

        ring = self.ring
        for entry in _flatten(a) + _flatten(f):
            if not isinstance(entry, Poly) or entry.ring != ring:
                raise RingMismatchError(
                    f"Los datos de la carta deben vivir en {list(ring.variable_names)}"
                )

    @property
    def ring(self) -> PolyRing:
        return base_ring(self.n)


def _freeze(array, shape: Sequence[int], name: str):
    """Convierte listas anidadas en tuplas comprobando la forma exacta."""
    if not isinstance(array, (list, tuple)):
        raise ShapeError(f"'{name}' debe tener forma {tuple(shape)}")
    if len(array) != shape[0]:
        raise ShapeError(
            f"'{name}' debe tener forma {tuple(shape)}: se encontraron {len(array)} "
            f"entradas en lugar de {shape[0]}"
        )
    if len(shape) == 1:
        return tuple(array)
    return tuple(_freeze(sub, shape[1:], name) for sub in array)


def _flatten(array) -> list:
    if isinstance(array, tuple):
        return [entry for sub in array for entry in _flatten(sub)]
    return [array]
