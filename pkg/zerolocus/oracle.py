"""
zerolocus/oracle.py
Oráculo independiente: decide en un punto si y = A x tiene solución.
"""

from typing import List, Sequence

from algebra.gaussian import GaussianRational, Scalar
from algebra.linalg import rank
from algebra.matrix import PolyMatrix
from exceptions import DimensionMismatchError
from zerolocus.presentation import ModulePresentation


def _check_point(ngens: int, point: Sequence[Scalar]) -> List[GaussianRational]:
    if len(point) != ngens:
        raise DimensionMismatchError(
            f"El punto tiene {len(point)} coordenadas, el anillo {ngens} variables"
        )
    return [GaussianRational.of(v) for v in point]


def evaluate_matrix(A: PolyMatrix, point: Sequence[Scalar]) -> List[List[GaussianRational]]:
    values = _check_point(A.ring.ngens, point)
    return [[entry.evaluate(values) for entry in row] for row in A.to_rows()]


def rank_at_point(A: PolyMatrix, point: Sequence[Scalar]) -> int:
    """Rango de A(punto) sobre Q(i)."""
    return rank(evaluate_matrix(A, point))


def solvable_at_point(pres: ModulePresentation, point: Sequence[Scalar]) -> bool:
    """
    True si rango [A(pt) | y(pt)] == rango A(pt).

    Raises:
        DimensionMismatchError: Si el punto no tiene una coordenada por variable
    """
    values = _check_point(pres.ring.ngens, point)
    matrix = evaluate_matrix(pres.A, values)
    rhs = [component.evaluate(values) for component in pres.y]
    if all(v.is_zero() for v in rhs):
        return True
    augmented = [row + [v] for row, v in zip(matrix, rhs)]
    return rank(augmented) == rank(matrix)
