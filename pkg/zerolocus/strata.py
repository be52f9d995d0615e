"""
zerolocus/strata.py
Estratificación por rango de la matriz de presentación y cálculo de
Z(M, m) como conjunto constructible.

Para cada nivel l y cada elección de filas S y columnas T de tamaño l,
sobre D(det A[S,T]) ∩ V(menores de tamaño l+1) la matriz A tiene rango
exactamente l y sus columnas T generan la imagen. La condición "y está en
la imagen de A" queda entonces como las p - l ecuaciones del ideal J, que se
escriben sin localizar multiplicando por la adjunta de A[S,T].
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple

from algebra.matrix import PolyMatrix, adjugate, determinant
from algebra.polynomial import Poly, poly_sum
from config.settings import settings
from constructible.cells import Cell, ConstructibleSet, prune as prune_cells
from exceptions import ShapeError
from groebner.ideal import Ideal, ideal_sum
from utils.logger import log_metric, setup_logger
from zerolocus.presentation import ModulePresentation

logger = setup_logger(__name__)

IndexSet = Tuple[int, ...]


@dataclass(frozen=True)
class StratumCertificate:
    """
    Datos de un estrato (l, S, T).

    Attributes:
        level: l, el rango de A en la celda
        rows: S, filas elegidas en orden creciente
        cols: T, columnas elegidas en orden creciente
        f: det A[S,T] (1 si l = 0)
        I: ideal de todos los menores (l+1)x(l+1) de A (cero si l = min(p, q))
        J: ideal generado por relations
        relations: los p - l generadores de J, uno por fila fuera de S, sin
            depurar (pueden repetirse o ser nulos)
    """
    level: int
    rows: IndexSet
    cols: IndexSet
    f: Poly
    I: Ideal
    J: Ideal
    relations: Tuple[Poly, ...]

    def cell(self) -> Cell:
        """D(f) ∩ V(I + J)."""
        return Cell(self.f, ideal_sum(self.I, self.J))


def minors(A: PolyMatrix, size: int) -> List[Poly]:
    """
    Todos los menores size x size de A.

    El orden es lexicográfico en (conjunto de filas, conjunto de columnas);
    size = 0 da [1].

    Raises:
        ShapeError: Si size no está entre 0 y min(filas, columnas)
    """
    if not 0 <= size <= min(A.rows, A.cols):
        raise ShapeError(
            f"Tamaño de menor {size} fuera de rango para una matriz {A.rows}x{A.cols}"
        )
    return [
        determinant(A.submatrix(rows, cols))
        for rows in combinations(range(A.rows), size)
        for cols in combinations(range(A.cols), size)
    ]


def _index_set(indices: Sequence[int], bound: int, kind: str) -> IndexSet:
    normalized = tuple(sorted(indices))
    if len(set(normalized)) != len(normalized):
        raise ShapeError(f"Índices de {kind} repetidos: {list(indices)}")
    for k in normalized:
        if not 0 <= k < bound:
            raise ShapeError(f"Índice de {kind} {k} fuera de rango (0..{bound - 1})")
    return normalized


def _minors_ideal(A: PolyMatrix, level: int) -> Ideal:
    if level >= min(A.rows, A.cols):
        return Ideal.zero(A.ring)
    return Ideal(A.ring, minors(A, level + 1))


def _certificate(
    A: PolyMatrix,
    y: Sequence[Poly],
    rows: IndexSet,
    cols: IndexSet,
    f: Poly,
    minors_ideal: Ideal,
) -> StratumCertificate:
    ring = A.ring
    level = len(rows)
    B = A.submatrix(rows, cols)
    # C[S, :] = f * Id
    C = A.submatrix(range(A.rows), cols) @ adjugate(B)
    relations = tuple(
        f * y[i] - poly_sum(ring, (C[i, k] * y[s] for k, s in enumerate(rows)))
        for i in range(A.rows)
        if i not in rows
    )
    return StratumCertificate(
        level=level,
        rows=rows,
        cols=cols,
        f=f,
        I=minors_ideal,
        J=Ideal(ring, relations),
        relations=relations,
    )


def stratum(A: PolyMatrix, y: Sequence[Poly], S: Sequence[int], T: Sequence[int]) -> StratumCertificate:
    """
    Certificado del estrato (S, T).

    Para cada fila i fuera de S el generador de J es
    f*y_i - sum_k C[i,k]*y_{s_k} con C = A[:,T] @ adj(A[S,T]); sobre D(f)
    difiere del generador localizado solo por la unidad f.

    Raises:
        ShapeError: Si S y T tienen tamaños distintos, repiten índices o se
            salen de la matriz, o si y no tiene una componente por fila
    """
    if len(S) != len(T):
        raise ShapeError(f"S y T deben tener el mismo tamaño ({len(S)} != {len(T)})")
    if len(y) != A.rows:
        raise ShapeError(f"y tiene {len(y)} componentes, A tiene {A.rows} filas")
    rows = _index_set(S, A.rows, "fila")
    cols = _index_set(T, A.cols, "columna")
    f = determinant(A.submatrix(rows, cols))
    return _certificate(A, y, rows, cols, f, _minors_ideal(A, len(rows)))


def _candidates(A: PolyMatrix) -> Iterator[Tuple[IndexSet, IndexSet, Poly, Ideal]]:
    """(S, T, f, I) con f no nulo, en orden l creciente y luego (S, T) lexicográfico."""
    for level in range(min(A.rows, A.cols) + 1):
        minors_ideal = _minors_ideal(A, level)
        for rows in combinations(range(A.rows), level):
            for cols in combinations(range(A.cols), level):
                f = determinant(A.submatrix(rows, cols))
                if f.is_zero():
                    # D(0) es vacío
                    continue
                yield rows, cols, f, minors_ideal


def certificates(pres: ModulePresentation, workers: Optional[int] = None) -> List[StratumCertificate]:
    """Certificados de todos los estratos con menor no nulo, en orden determinista."""
    workers = workers or settings.compute.workers
    A, y = pres.A, pres.y
    candidates = list(_candidates(A))

    def build(candidate) -> StratumCertificate:
        rows, cols, f, minors_ideal = candidate
        return _certificate(A, y, rows, cols, f, minors_ideal)

    if workers > 1 and len(candidates) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(build, candidates))
    return [build(candidate) for candidate in candidates]


def zero_locus(pres: ModulePresentation, prune: bool = True, workers: Optional[int] = None) -> ConstructibleSet:
    """
    Z(M, m) como unión de las celdas D(f) ∩ V(I + J) de todos los estratos.

    Las celdas salen en el orden de certificates(); con prune=True se
    eliminan las vacías sobre C. No se eliminan celdas repetidas.
    """
    start = time.time()
    certs = certificates(pres, workers)
    result = ConstructibleSet(pres.ring, tuple(cert.cell() for cert in certs))
    if prune:
        result = prune_cells(result, workers)

    log_metric(logger, "zerolocus.cells", len(result), {
        "p": pres.p,
        "q": pres.q,
        "strata": len(certs),
        "pruned": prune,
        "elapsed_ms": round((time.time() - start) * 1000, 2),
    })
    return result


def covering_cells(A: PolyMatrix) -> Iterator[Tuple[int, Cell]]:
    """Pares (l, D(det A[S,T]) ∩ V(menores l+1)) del recubrimiento por rango."""
    for rows, cols, f, minors_ideal in _candidates(A):
        yield len(rows), Cell(f, minors_ideal)


def rank_covering(A: PolyMatrix) -> ConstructibleSet:
    """
    Recubrimiento finito del espacio por celdas de rango constante.

    Todo punto está en alguna celda, y en cada celda que lo contiene el
    rango de A(punto) es el nivel de la celda.
    """
    return ConstructibleSet(A.ring, tuple(cell for _, cell in covering_cells(A)))
