"""
constructible/cells.py
Conjuntos constructibles: uniones finitas de celdas D(f) ∩ V(I).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice, product
from typing import Iterable, List, Optional, Sequence, Tuple

from algebra.gaussian import GaussianRational, Scalar
from algebra.polynomial import Poly, PolyRing
from config.settings import settings
from exceptions import DimensionMismatchError, RingMismatchError, ValidationError
from groebner.ideal import Ideal, ideal_sum, radical_membership
from utils.logger import log_metric, setup_logger

logger = setup_logger(__name__)

# Coordenadas de los testigos, de las más simples a las menos
WITNESS_VALUES: Tuple[GaussianRational, ...] = (
    GaussianRational(0),
    GaussianRational(1),
    GaussianRational(-1),
    GaussianRational(2),
    GaussianRational(0, 1),
    GaussianRational(0, -1),
    GaussianRational(Fraction(1, 2)),
    GaussianRational(-2),
)


@dataclass(frozen=True)
class Cell:
    """
    Celda D(f) ∩ V(ideal).

    f nunca es cero (D(0) es vacío; el vacío se representa con un
    ConstructibleSet sin celdas) y f = 1 significa "sin condición abierta".
    """
    f: Poly
    ideal: Ideal

    def __post_init__(self):
        if self.f.is_zero():
            raise ValidationError("Una celda no puede tener parte abierta D(0)")
        if self.f.ring != self.ideal.ring:
            raise RingMismatchError("f y el ideal de la celda viven en anillos distintos")

    @classmethod
    def whole_space(cls, ring: PolyRing) -> "Cell":
        return cls(ring.one, Ideal.zero(ring))

    @property
    def ring(self) -> PolyRing:
        return self.f.ring

    def contains(self, point: Sequence[Scalar]) -> bool:
        """f(point) != 0 y todos los generadores se anulan en point."""
        if len(point) != self.ring.ngens:
            raise DimensionMismatchError(
                f"El punto tiene {len(point)} coordenadas, el anillo {self.ring.ngens} variables"
            )
        values = [GaussianRational.of(v) for v in point]
        if self.f.evaluate(values).is_zero():
            return False
        return all(g.evaluate(values).is_zero() for g in self.ideal.generators)

    def witness(self, limit: Optional[int] = None) -> Optional[Tuple[GaussianRational, ...]]:
        """
        Primer punto de la rejilla WITNESS_VALUES^n que está en la celda.

        Se prueban a lo sumo `limit` puntos (por defecto
        ZEROLOCUS_WITNESS_POINTS); None si ninguno pertenece.
        """
        limit = settings.compute.witness_points if limit is None else limit
        grid = product(WITNESS_VALUES, repeat=self.ring.ngens)
        for point in islice(grid, limit):
            if self.contains(point):
                return point
        return None

    def is_empty(self) -> bool:
        """
        D(f) ∩ V(I) es vacío sobre C si y solo si f está en rad(I).

        Un testigo racional prueba que no es vacía sin calcular bases.
        """
        if self.ideal.is_zero():
            return False
        if self.witness() is not None:
            return False
        return radical_membership(self.f, self.ideal)

    def __str__(self) -> str:
        return f"D({self.f}) ∩ V{self.ideal}"


@dataclass(frozen=True)
class ConstructibleSet:
    """
    Unión finita de celdas de un mismo anillo.

    Un punto pertenece al conjunto si pertenece a alguna celda. Las celdas
    se guardan en el orden en que se agregaron.
    """
    ring: PolyRing
    cells: Tuple[Cell, ...] = ()

    def __post_init__(self):
        cells = tuple(self.cells)
        object.__setattr__(self, "cells", cells)
        for cell in cells:
            if cell.ring != self.ring:
                raise RingMismatchError("Todas las celdas deben vivir en el anillo del conjunto")

    @classmethod
    def empty(cls, ring: PolyRing) -> "ConstructibleSet":
        return cls(ring, ())

    @classmethod
    def whole_space(cls, ring: PolyRing) -> "ConstructibleSet":
        return cls(ring, (Cell.whole_space(ring),))

    def is_empty(self) -> bool:
        """Vacío sintáctico: sin celdas (use prune() para decidir vacuidad)."""
        return not self.cells

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def contains(self, point: Sequence[Scalar]) -> bool:
        return contains_point(self, point)

    def dedup(self) -> "ConstructibleSet":
        return ConstructibleSet(self.ring, _dedup(self.cells))


def _dedup(cells: Iterable[Cell]) -> Tuple[Cell, ...]:
    seen = set()
    unique: List[Cell] = []
    for cell in cells:
        if cell in seen:
            continue
        seen.add(cell)
        unique.append(cell)
    return tuple(unique)


def contains_point(s: ConstructibleSet, point: Sequence[Scalar]) -> bool:
    """
    Pertenencia de un punto racional.

    Raises:
        DimensionMismatchError: Si el punto no tiene una coordenada por variable
    """
    if len(point) != s.ring.ngens:
        raise DimensionMismatchError(
            f"El punto tiene {len(point)} coordenadas, el anillo {s.ring.ngens} variables"
        )
    return any(cell.contains(point) for cell in s.cells)


def intersect_cell(a: Cell, b: Cell) -> Cell:
    """D(f1) ∩ V(I1) ∩ D(f2) ∩ V(I2) = D(f1*f2) ∩ V(I1 + I2)."""
    if a.ring != b.ring:
        raise RingMismatchError("Intersección de celdas de anillos distintos")
    return Cell(a.f * b.f, ideal_sum(a.ideal, b.ideal))


def union(a: ConstructibleSet, b: ConstructibleSet) -> ConstructibleSet:
    """Concatenación de celdas sin repetidos estructurales."""
    if a.ring != b.ring:
        raise RingMismatchError("Unión de conjuntos de anillos distintos")
    return ConstructibleSet(a.ring, _dedup(a.cells + b.cells))


def prune(s: ConstructibleSet, workers: Optional[int] = None) -> ConstructibleSet:
    """
    Elimina las celdas vacías sobre C (f en el radical de su ideal).

    Con workers > 1 las pertenencias al radical se calculan en paralelo; el
    resultado conserva siempre el orden de entrada.
    """
    workers = workers or settings.compute.workers
    if workers > 1 and len(s.cells) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            empty = list(pool.map(Cell.is_empty, s.cells))
    else:
        empty = [cell.is_empty() for cell in s.cells]

    kept = tuple(cell for cell, is_empty in zip(s.cells, empty) if not is_empty)
    log_metric(logger, "constructible.pruned_cells", len(s.cells) - len(kept), {
        "cells_in": len(s.cells),
        "cells_out": len(kept),
    })
    return ConstructibleSet(s.ring, kept)
