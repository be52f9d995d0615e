"""
zerolocus/fuzzing.py
Prueba de equivalencia con el oráculo sobre presentaciones aleatorias.

Toda la aleatoriedad sale de un random.Random sembrado, así que la misma
semilla produce el mismo reporte byte a byte.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import List, Optional, Sequence, Tuple

from algebra.gaussian import GaussianRational
from algebra.polynomial import Monomial, Poly, PolyRing
from config.settings import settings
from constructible.cells import contains_point, prune
from utils.logger import log_metric, setup_logger
from zerolocus.oracle import solvable_at_point
from zerolocus.presentation import ModulePresentation
from zerolocus.strata import zero_locus

logger = setup_logger(__name__)

# Coordenadas de los puntos de prueba; pequeñas para caer a menudo en V(I)
POINT_VALUES: Tuple[GaussianRational, ...] = (
    GaussianRational(-2),
    GaussianRational(-1),
    GaussianRational(0),
    GaussianRational(1),
    GaussianRational(2),
    GaussianRational(Fraction(1, 2)),
    GaussianRational(Fraction(-1, 2)),
    GaussianRational(0, 1),
    GaussianRational(0, -1),
)


@dataclass
class Mismatch:
    trial: int
    pruned: bool
    point: Tuple[GaussianRational, ...]
    presentation: ModulePresentation

    def __str__(self) -> str:
        coords = ", ".join(str(v) for v in self.point)
        mode = "podado" if self.pruned else "sin podar"
        return f"trial {self.trial} ({mode}) en ({coords}): {self.presentation}"


@dataclass
class FuzzReport:
    """Resultado de run_oracle_fuzz; no guarda tiempos para ser determinista."""
    trials: int
    seed: int
    points_per_trial: int
    checks: int = 0
    mismatches: List[Mismatch] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return self.checks - len(self.mismatches)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        lines = [
            f"seed: {self.seed}",
            f"trials: {self.trials}",
            f"puntos por trial: {self.points_per_trial}",
            f"comprobaciones: {self.checks}",
            f"coinciden: {self.passed}",
            f"discrepancias: {len(self.mismatches)}",
        ]
        lines.extend(f"  {m}" for m in self.mismatches)
        return "\n".join(lines)


def random_scalar(rng: random.Random, bound: int) -> GaussianRational:
    """Entero gaussiano con |re|, |im| <= bound."""
    return GaussianRational(rng.randint(-bound, bound), rng.randint(-bound, bound))


def random_poly(rng: random.Random, ring: PolyRing, max_degree: int, bound: int) -> Poly:
    """Polinomio de grado total <= max_degree; a veces cero o constante."""
    monomials: List[Monomial] = [
        m for m in product(range(max_degree + 1), repeat=ring.ngens) if sum(m) <= max_degree
    ]
    n_terms = rng.randint(0, min(3, len(monomials)))
    chosen = rng.sample(monomials, n_terms)
    return Poly(ring, {m: random_scalar(rng, bound) for m in chosen})


def random_presentation(
    rng: random.Random,
    max_variables: Optional[int] = None,
    max_rows: Optional[int] = None,
    max_cols: Optional[int] = None,
    max_degree: Optional[int] = None,
    bound: Optional[int] = None,
) -> ModulePresentation:
    fuzz = settings.fuzz
    n = rng.randint(1, max_variables or fuzz.max_variables)
    p = rng.randint(1, max_rows or fuzz.max_rows)
    q = rng.randint(0, max_cols or fuzz.max_cols)
    degree = fuzz.max_degree if max_degree is None else max_degree
    bound = bound or fuzz.coefficient_bound

    ring = PolyRing(tuple(f"x{k + 1}" for k in range(n)))
    rows = [[random_poly(rng, ring, degree, bound) for _ in range(q)] for _ in range(p)]
    y = [random_poly(rng, ring, degree, bound) for _ in range(p)]
    return ModulePresentation.from_rows(ring, rows, y, cols=q)


def random_point(rng: random.Random, ngens: int) -> Tuple[GaussianRational, ...]:
    return tuple(rng.choice(POINT_VALUES) for _ in range(ngens))


def check_presentation(
    pres: ModulePresentation,
    points: Sequence[Sequence[GaussianRational]],
    trial: int = 0,
    report: Optional[FuzzReport] = None,
) -> List[Mismatch]:
    """Compara la pertenencia al conjunto con y sin poda contra el oráculo."""
    unpruned = zero_locus(pres, prune=False)
    pruned = prune(unpruned)
    mismatches = []
    for point in points:
        expected = solvable_at_point(pres, point)
        for is_pruned, cells in ((False, unpruned), (True, pruned)):
            if report is not None:
                report.checks += 1
            if contains_point(cells, point) != expected:
                mismatches.append(Mismatch(trial, is_pruned, tuple(point), pres))
    return mismatches


def run_oracle_fuzz(trials: int, seed: int, points: Optional[int] = None) -> FuzzReport:
    """
    Genera trials presentaciones y compara zero_locus con el oráculo de rango.

    Args:
        trials: Número de presentaciones aleatorias
        seed: Semilla del generador
        points: Puntos por presentación (por defecto settings.fuzz)
    """
    points = points or settings.fuzz.points_per_presentation
    rng = random.Random(seed)
    report = FuzzReport(trials=trials, seed=seed, points_per_trial=points)

    for trial in range(trials):
        pres = random_presentation(rng)
        sample = [random_point(rng, pres.ring.ngens) for _ in range(points)]
        found = check_presentation(pres, sample, trial, report)
        if found:
            logger.error(f"Discrepancia con el oráculo en el trial {trial}: {pres}")
        report.mismatches.extend(found)

    log_metric(logger, "fuzz.mismatches", len(report.mismatches), {
        "trials": trials,
        "seed": seed,
        "checks": report.checks,
    })
    return report
