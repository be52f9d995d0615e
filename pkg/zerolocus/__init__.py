"""
zerolocus/__init__.py
Z(M, m) a partir de una presentación: estratos, conjunto constructible y
oráculo de rango.
"""

from .presentation import ModulePresentation
from .strata import (
    StratumCertificate,
    minors,
    stratum,
    certificates,
    zero_locus,
    covering_cells,
    rank_covering,
)
from .oracle import solvable_at_point, rank_at_point, evaluate_matrix
from .fuzzing import FuzzReport, random_presentation, random_point, run_oracle_fuzz

__all__ = [
    "ModulePresentation",
    "StratumCertificate",
    "minors",
    "stratum",
    "certificates",
    "zero_locus",
    "covering_cells",
    "rank_covering",
    "solvable_at_point",
    "rank_at_point",
    "evaluate_matrix",
    "FuzzReport",
    "random_presentation",
    "random_point",
    "run_oracle_fuzz",
]
