"""
algebra/linalg.py
Eliminación gaussiana exacta sobre Q(i).
"""

from typing import List, Sequence

from algebra.gaussian import GaussianRational, Scalar


def row_echelon(rows: Sequence[Sequence[Scalar]]) -> List[List[GaussianRational]]:
    """
    Forma escalonada por filas (sin normalizar pivotes) de una matriz sobre Q(i).

    Como la aritmética es exacta, cualquier entrada no nula sirve de pivote.
    """
    work = [[GaussianRational.of(v) for v in row] for row in rows]
    if not work:
        return work
    n_rows, n_cols = len(work), len(work[0])
    pivot_row = 0
    for col in range(n_cols):
        if pivot_row == n_rows:
            break
        for r in range(pivot_row, n_rows):
            if not work[r][col].is_zero():
                work[pivot_row], work[r] = work[r], work[pivot_row]
                break
        else:
            continue
        pivot = work[pivot_row][col]
        for r in range(pivot_row + 1, n_rows):
            entry = work[r][col]
            if entry.is_zero():
                continue
            factor = entry / pivot
            work[r] = [a - factor * b for a, b in zip(work[r], work[pivot_row])]
        pivot_row += 1
    return work


def rank(rows: Sequence[Sequence[Scalar]]) -> int:
    """Rango exacto de una matriz sobre Q(i)."""
    return sum(1 for row in row_echelon(rows) if any(not v.is_zero() for v in row))
