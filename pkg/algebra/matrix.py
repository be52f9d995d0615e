"""
algebra/matrix.py
Matrices de polinomios: determinantes (Laplace y Bareiss) y adjunta.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from algebra.polynomial import Poly, PolyRing, poly_sum
from exceptions import RingMismatchError, ShapeError

# Hasta este tamaño se usa el desarrollo de Laplace; por encima, Bareiss
LAPLACE_MAX_SIZE = 3


@dataclass(frozen=True)
class PolyMatrix:
    """
    Matriz rows x cols de polinomios de un mismo anillo, guardada por filas.
    """
    ring: PolyRing
    rows: int
    cols: int
    entries: Tuple[Poly, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if self.rows < 0 or self.cols < 0:
            raise ShapeError(f"Dimensiones negativas: {self.rows}x{self.cols}")
        if len(entries) != self.rows * self.cols:
            raise ShapeError(
                f"Se esperaban {self.rows * self.cols} entradas, hay {len(entries)}"
            )
        for entry in entries:
            if not isinstance(entry, Poly) or entry.ring != self.ring:
                raise RingMismatchError("Todas las entradas deben vivir en el anillo de la matriz")

    @classmethod
    def from_rows(cls, ring: PolyRing, rows: Sequence[Sequence[Poly]], cols: int = None) -> "PolyMatrix":
        """Construye desde una lista de filas; cols hace falta si no hay filas."""
        rows = [list(row) for row in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise ShapeError(f"Fila de longitud {len(row)}, se esperaba {cols}")
        entries = [ring.coerce(entry) for row in rows for entry in row]
        return cls(ring, len(rows), cols, tuple(entries))

    @classmethod
    def identity(cls, ring: PolyRing, size: int) -> "PolyMatrix":
        return cls.from_rows(
            ring,
            [[ring.one if i == j else ring.zero for j in range(size)] for i in range(size)],
            cols=size,
        )

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Poly:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"Índice ({i}, {j}) fuera de una matriz {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> List[Poly]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> List[Poly]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> List[List[Poly]]:
        return [self.row(i) for i in range(self.rows)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        for i in rows:
            if not 0 <= i < self.rows:
                raise ShapeError(f"Fila {i} fuera de rango (0..{self.rows - 1})")
        for j in cols:
            if not 0 <= j < self.cols:
                raise ShapeError(f"Columna {j} fuera de rango (0..{self.cols - 1})")
        return PolyMatrix.from_rows(
            self.ring, [[self[i, j] for j in cols] for i in rows], cols=len(cols)
        )

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix.from_rows(
            self.ring, [self.column(j) for j in range(self.cols)], cols=self.rows
        )

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ring != other.ring:
            raise RingMismatchError("Producto de matrices de anillos distintos")
        if self.cols != other.rows:
            raise ShapeError(
                f"No se pueden multiplicar {self.rows}x{self.cols} y {other.rows}x{other.cols}"
            )
        rows = [
            [
                poly_sum(self.ring, (self[i, k] * other[k, j] for k in range(self.cols)))
                for j in range(other.cols)
            ]
            for i in range(self.rows)
        ]
        return PolyMatrix.from_rows(self.ring, rows, cols=other.cols)

    def scale(self, factor: Poly) -> "PolyMatrix":
        return PolyMatrix(self.ring, self.rows, self.cols, tuple(e * factor for e in self.entries))

    def map(self, func) -> "PolyMatrix":
        return PolyMatrix(self.ring, self.rows, self.cols, tuple(func(e) for e in self.entries))

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(e) for e in row) for row in self.to_rows()) + "]"


def _require_square(m: PolyMatrix) -> None:
    if not m.is_square:
        raise ShapeError(f"Se requiere una matriz cuadrada, recibida {m.rows}x{m.cols}")


def determinant_laplace(m: PolyMatrix) -> Poly:
    """Determinante por desarrollo de Laplace a lo largo de la primera fila."""
    _require_square(m)
    return _laplace(m.ring, m.to_rows())


def _laplace(ring: PolyRing, rows: List[List[Poly]]) -> Poly:
    n = len(rows)
    if n == 0:
        return ring.one
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    terms = []
    for j, pivot in enumerate(rows[0]):
        if pivot.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        cofactor = _laplace(ring, minor)
        terms.append(pivot * cofactor if j % 2 == 0 else -(pivot * cofactor))
    return poly_sum(ring, terms)


def determinant_bareiss(m: PolyMatrix) -> Poly:
    """
    Determinante por eliminación de Bareiss libre de fracciones.

    Cada paso divide exactamente por el pivote anterior, así que todas las
    entradas intermedias siguen siendo polinomios.
    """
    _require_square(m)
    n = m.rows
    ring = m.ring
    if n == 0:
        return ring.one
    work = m.to_rows()
    sign = 1
    previous = ring.one
    for k in range(n - 1):
        if work[k][k].is_zero():
            for i in range(k + 1, n):
                if not work[i][k].is_zero():
                    work[k], work[i] = work[i], work[k]
                    sign = -sign
                    break
            else:
                return ring.zero
        pivot = work[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                numerator = pivot * work[i][j] - work[i][k] * work[k][j]
                work[i][j] = numerator.exact_divide(previous)
        previous = pivot
    result = work[n - 1][n - 1]
    return result if sign == 1 else -result


def determinant(m: PolyMatrix) -> Poly:
    """Determinante exacto: Laplace hasta 3x3, Bareiss para tamaños mayores."""
    _require_square(m)
    if m.rows <= LAPLACE_MAX_SIZE:
        return determinant_laplace(m)
    return determinant_bareiss(m)


def adjugate(m: PolyMatrix) -> PolyMatrix:
    """
    Adjunta clásica: adj(m)[j][i] = (-1)^(i+j) det(m sin fila i ni columna j).

    Cumple m @ adj(m) == det(m) * Id sin salir del anillo de polinomios.
    """
    _require_square(m)
    n = m.rows
    if n == 0:
        return m
    if n == 1:
        return PolyMatrix.identity(m.ring, 1)
    rows = m.to_rows()
    adj = [[m.ring.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(rows) if k != i]
            cofactor = determinant(PolyMatrix.from_rows(m.ring, minor, cols=n - 1))
            adj[j][i] = cofactor if (i + j) % 2 == 0 else -cofactor
    return PolyMatrix.from_rows(m.ring, adj, cols=n)
