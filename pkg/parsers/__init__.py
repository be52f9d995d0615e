"""
parsers/__init__.py
Parser de polinomios y documentos JSON de ZeroLocus
"""

from .poly_parser import PolyParser, parse_poly, parse_scalar, parse_point, tokenize
from .documents import (
    read_document,
    write_document,
    dumps,
    constructible_to_dict,
    constructible_from_dict,
    presentation_to_dict,
    presentation_from_dict,
    chart_to_dict,
    chart_from_dict,
    load_constructible,
    load_presentation,
    load_chart,
)

__all__ = [
    "PolyParser",
    "parse_poly",
    "parse_scalar",
    "parse_point",
    "tokenize",
    "read_document",
    "write_document",
    "dumps",
    "constructible_to_dict",
    "constructible_from_dict",
    "presentation_to_dict",
    "presentation_from_dict",
    "chart_to_dict",
    "chart_from_dict",
    "load_constructible",
    "load_presentation",
    "load_chart",
]
