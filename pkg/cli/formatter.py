"""
Formateador de salida para el CLI de ZeroLocus.

Las funciones de texto plano son puras (sin color ni ancho de terminal) para
que la salida de datos sea idéntica byte a byte entre ejecuciones; las tablas
de rich quedan para los reportes legibles.
"""

from typing import Iterable, List, Sequence

from rich.table import Table

from algebra.gaussian import GaussianRational
from constructible.cells import ConstructibleSet, contains_point
from exceptions import DimensionMismatchError
from infinitesimal.quadric import QuadricCheck
from zerolocus.strata import StratumCertificate


def format_point(point: Sequence[GaussianRational]) -> str:
    return "(" + ",".join(str(v) for v in point) + ")"


def format_cells(s: ConstructibleSet) -> str:
    """Una línea por celda, numeradas desde 1; '(vacío)' si no hay celdas."""
    if not s.cells:
        return "(vacío)"
    return "\n".join(f"{k}. {cell}" for k, cell in enumerate(s.cells, start=1))


def membership_grid(s: ConstructibleSet, radius: int) -> str:
    """
    Tabla de pertenencia sobre {-radius..radius}^2 para un conjunto del plano.

    Las filas van de y = radius a y = -radius y las columnas de x = -radius a
    x = radius; '#' marca pertenencia y '.' lo contrario. La última línea
    lista los miembros ordenados por (x, y).
    """
    if s.ring.ngens != 2:
        raise DimensionMismatchError(
            f"La tabla de pertenencia requiere 2 variables, el conjunto tiene {s.ring.ngens}"
        )
    values = list(range(-radius, radius + 1))
    width = max(len(str(v)) for v in values) + 1
    members = {
        (a, b) for a in values for b in values
        if contains_point(s, (GaussianRational(a), GaussianRational(b)))
    }

    x_name, y_name = s.ring.variable_names
    lines = [f"{y_name}\\{x_name}".rjust(width + 2) + "".join(str(a).rjust(width) for a in values)]
    for b in reversed(values):
        row = "".join(("#" if (a, b) in members else ".").rjust(width) for a in values)
        lines.append(str(b).rjust(width + 2) + row)
    listed = " ".join(f"({a},{b})" for a, b in sorted(members))
    lines.append(f"Miembros: {listed}" if listed else "Miembros: ninguno")
    return "\n".join(lines)


def strata_table(certs: Iterable[StratumCertificate]) -> Table:
    table = Table(title="Estratos", show_header=True)
    table.add_column("l", justify="right", style="cyan")
    table.add_column("S")
    table.add_column("T")
    table.add_column("f", style="green")
    table.add_column("menores l+1", justify="right")
    table.add_column("J")
    for cert in certs:
        table.add_row(
            str(cert.level),
            str(list(cert.rows)),
            str(list(cert.cols)),
            str(cert.f),
            str(len(cert.I)),
            ", ".join(str(g) for g in cert.relations) or "-",
        )
    return table


def quadric_table(checks: List[QuadricCheck]) -> Table:
    table = Table(title="Ejemplo de la cuádrica", show_header=True)
    table.add_column("Comprobación", style="cyan")
    table.add_column("Identidad")
    table.add_column("Resultado")
    for check in checks:
        verdict = "[green]ok[/green]" if check.passed else "[red]FALLA[/red]"
        table.add_row(check.name, check.description, verdict)
    return table
