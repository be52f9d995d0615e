"""
parsers/documents.py
Documentos JSON de entrada y salida: presentaciones, cartas y conjuntos
constructibles. Los polinomios viajan como texto en la gramática de
poly_parser.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Union

from algebra.polynomial import Poly, PolyRing
from config.settings import settings
from constructible.cells import Cell, ConstructibleSet
from exceptions import InvalidDocumentError, ValidationError
from groebner.ideal import Ideal
from infinitesimal.chart import ChartConnection, base_ring
from parsers.poly_parser import parse_poly
from utils.logger import setup_logger
from zerolocus.presentation import ModulePresentation

logger = setup_logger(__name__)

PathLike = Union[str, Path]


# ----------------------------------------------------------------------
# Lectura y escritura
# ----------------------------------------------------------------------

def read_document(path: PathLike) -> Dict[str, Any]:
    """
    Lee un objeto JSON UTF-8.

    Raises:
        InvalidDocumentError: Si el archivo no existe, no es JSON o no es un objeto
    """
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except OSError as e:
        raise InvalidDocumentError(f"No se pudo leer {path}", details=str(e)) from e
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise InvalidDocumentError(f"{path} no es JSON válido: {e}") from e
    if not isinstance(data, dict):
        raise InvalidDocumentError(f"{path} debe contener un objeto JSON")
    logger.debug(f"Documento leído: {path}")
    return data


def dumps(data: Dict[str, Any]) -> str:
    """JSON determinista con salto de línea final."""
    return json.dumps(data, indent=settings.cli.json_indent, ensure_ascii=False) + "\n"


def write_document(path: PathLike, data: Dict[str, Any]) -> None:
    """Escribe a un temporal y lo renombra, para no dejar archivos a medias."""
    path = Path(path)
    temp_path = path.with_suffix(path.suffix + ".tmp")
    with open(temp_path, "w", encoding="utf-8") as f:
        f.write(dumps(data))
    temp_path.replace(path)
    logger.debug(f"Documento escrito: {path}")


# ----------------------------------------------------------------------
# Campos
# ----------------------------------------------------------------------

def _field(data: Dict[str, Any], key: str, kind: type, where: str = ""):
    if key not in data:
        raise InvalidDocumentError(f"Falta el campo '{where}{key}'")
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise InvalidDocumentError(f"El campo '{where}{key}' debe ser {kind.__name__}")
    return value


def _ring(data: Dict[str, Any]) -> PolyRing:
    names = _field(data, "variables", list)
    if not all(isinstance(name, str) for name in names):
        raise InvalidDocumentError("'variables' debe ser una lista de nombres")
    return PolyRing(tuple(names))


def _poly(text: Any, ring: PolyRing, where: str) -> Poly:
    if not isinstance(text, str):
        raise InvalidDocumentError(f"'{where}' debe ser un polinomio en texto")
    try:
        return parse_poly(text, ring)
    except ValidationError as e:
        raise InvalidDocumentError(f"{where}: {e.message}") from e


def _poly_list(values: Any, ring: PolyRing, where: str) -> List[Poly]:
    if not isinstance(values, list):
        raise InvalidDocumentError(f"'{where}' debe ser una lista")
    return [_poly(v, ring, f"{where}[{k}]") for k, v in enumerate(values)]


# ----------------------------------------------------------------------
# Conjuntos constructibles
# ----------------------------------------------------------------------

def constructible_to_dict(s: ConstructibleSet) -> Dict[str, Any]:
    return {
        "variables": list(s.ring.variable_names),
        "cells": [
            {"f": str(cell.f), "ideal": [str(g) for g in cell.ideal.generators]}
            for cell in s.cells
        ],
    }


def constructible_from_dict(data: Dict[str, Any]) -> ConstructibleSet:
    ring = _ring(data)
    cells = []
    for k, cell in enumerate(_field(data, "cells", list)):
        where = f"cells[{k}]"
        if not isinstance(cell, dict):
            raise InvalidDocumentError(f"'{where}' debe ser un objeto")
        f = _poly(cell.get("f"), ring, f"{where}.f")
        if f.is_zero():
            raise InvalidDocumentError(f"{where}.f no puede ser 0")
        generators = _poly_list(cell.get("ideal", []), ring, f"{where}.ideal")
        cells.append(Cell(f, Ideal(ring, generators)))
    return ConstructibleSet(ring, tuple(cells))


# ----------------------------------------------------------------------
# Presentaciones
# ----------------------------------------------------------------------

def presentation_to_dict(pres: ModulePresentation) -> Dict[str, Any]:
    return {
        "variables": list(pres.ring.variable_names),
        "A": [[str(entry) for entry in row] for row in pres.A.to_rows()],
        "y": [str(v) for v in pres.y],
    }


def presentation_from_dict(data: Dict[str, Any]) -> ModulePresentation:
    ring = _ring(data)
    y = _poly_list(_field(data, "y", list), ring, "y")
    rows = _field(data, "A", list)
    if not rows:
        # A = [] es una presentación libre (q = 0)
        rows = [[] for _ in y]
    matrix = [_poly_list(row, ring, f"A[{i}]") for i, row in enumerate(rows)]
    widths = {len(row) for row in matrix}
    if len(widths) > 1:
        raise InvalidDocumentError(f"Las filas de 'A' tienen longitudes distintas: {sorted(widths)}")
    if len(matrix) != len(y):
        raise InvalidDocumentError(f"'A' tiene {len(matrix)} filas y 'y' {len(y)} componentes")
    if not y:
        raise InvalidDocumentError("La presentación necesita al menos una fila")
    return ModulePresentation.from_rows(ring, matrix, y, cols=widths.pop())


# ----------------------------------------------------------------------
# Cartas
# ----------------------------------------------------------------------

def chart_to_dict(chart: ChartConnection) -> Dict[str, Any]:
    return {
        "n": chart.n,
        "p": chart.p,
        "q": chart.q,
        "a": [[[str(v) for v in row] for row in block] for block in chart.a],
        "f": [[str(v) for v in row] for row in chart.f],
    }


def chart_from_dict(data: Dict[str, Any]) -> ChartConnection:
    n = _field(data, "n", int)
    p = _field(data, "p", int)
    q = _field(data, "q", int)
    if n < 1:
        raise InvalidDocumentError(f"'n' debe ser positivo (n = {n})")
    ring = base_ring(n)

    def nested(values: Any, depth: int, where: str):
        if depth == 0:
            return _poly(values, ring, where)
        if not isinstance(values, list):
            raise InvalidDocumentError(f"'{where}' debe ser una lista")
        return [nested(v, depth - 1, f"{where}[{k}]") for k, v in enumerate(values)]

    a = nested(_field(data, "a", list), 3, "a")
    f = nested(_field(data, "f", list), 2, "f")
    return ChartConnection(n=n, p=p, q=q, a=a, f=f)


def load_constructible(path: PathLike) -> ConstructibleSet:
    return constructible_from_dict(read_document(path))


def load_presentation(path: PathLike) -> ModulePresentation:
    return presentation_from_dict(read_document(path))


def load_chart(path: PathLike) -> ChartConnection:
    return chart_from_dict(read_document(path))
