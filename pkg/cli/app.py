"""
ZeroLocus - CLI con Click
Lugar de ceros constructible Z(M, m) de una sección, desde la terminal.

Códigos de salida: 0 éxito, 1 entrada inválida, 2 invariante interno roto o
error inesperado, 3 discrepancia en fuzz. Los datos van a stdout y los
diagnósticos a stderr.
"""

import functools
from typing import List, Optional

import click
from rich.console import Console

from algebra.polynomial import PolyRing
from cli.formatter import format_cells, membership_grid, quadric_table, strata_table
from config import settings
from constructible.cells import ConstructibleSet, contains_point
from exceptions import InvariantViolationError, ZeroLocusError
from infinitesimal.quadric import quadric_example_checks
from infinitesimal.tangent_system import infinitesimal_locus
from parsers.documents import (
    constructible_to_dict,
    dumps,
    load_chart,
    load_constructible,
    load_presentation,
    write_document,
)
from parsers.poly_parser import parse_point
from utils.logger import setup_logger
from zerolocus.fuzzing import run_oracle_fuzz
from zerolocus.oracle import solvable_at_point
from zerolocus.presentation import ModulePresentation
from zerolocus.strata import certificates, zero_locus

__version__ = "0.1.0"

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_INTERNAL = 2
EXIT_FUZZ_MISMATCH = 3

logger = setup_logger(__name__)
console = Console(highlight=False)


def _exit_on_error(func):
    """Traduce las excepciones de dominio a códigos de salida."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return func(*args, **kwargs)
        except (click.exceptions.Exit, click.exceptions.Abort, click.ClickException):
            raise
        except InvariantViolationError as e:
            logger.error(f"Invariante roto: {e.message}")
            click.echo(f"Error interno: {e.message}", err=True)
            ctx.exit(EXIT_INTERNAL)
        except ZeroLocusError as e:
            click.echo(f"Error: {e.message}", err=True)
            if e.details:
                click.echo(f"  {e.details}", err=True)
            ctx.exit(EXIT_BAD_INPUT)
        except OSError as e:
            click.echo(f"Error de archivo: {e}", err=True)
            ctx.exit(EXIT_BAD_INPUT)
        except Exception as e:
            logger.exception(f"Error inesperado en '{ctx.info_name}'")
            click.echo(f"Error inesperado: {e}", err=True)
            ctx.exit(EXIT_INTERNAL)
    return wrapper


def _emit(s: ConstructibleSet, output: Optional[str]) -> None:
    data = constructible_to_dict(s)
    if output:
        write_document(output, data)
        click.echo(f"{len(s)} celdas escritas en {output}", err=True)
    else:
        click.echo(dumps(data), nl=False)


def _verdict(value: bool) -> str:
    return "true" if value else "false"


@click.group()
@click.version_option(version=__version__, prog_name="zerolocus")
@click.option("--workers", type=click.IntRange(min=1), default=None,
              help="Hilos para estratos y poda (por defecto ZEROLOCUS_WORKERS)")
@_exit_on_error
def cli(workers):
    """Lugar de ceros constructible de una sección a partir de una presentación."""
    if workers is not None:
        settings.compute.workers = workers
    settings.validate()


@cli.command("zero-locus")
@click.option("--input", "input_path", required=True, type=click.Path(dir_okay=False),
              help="Presentación JSON {variables, A, y}")
@click.option("--no-prune", is_flag=True, help="No eliminar celdas vacías")
@click.option("--output", type=click.Path(dir_okay=False), help="Archivo de salida")
@_exit_on_error
def zero_locus_command(input_path, no_prune, output):
    """Calcula Z(M, m) como unión de celdas D(f) ∩ V(I)."""
    pres = load_presentation(input_path)
    _emit(zero_locus(pres, prune=not no_prune), output)


@cli.command()
@click.option("--cells", "cells_path", required=True, type=click.Path(dir_okay=False),
              help="Conjunto constructible JSON")
@click.option("--point", required=True, help="Coordenadas 'c1,c2,...' en Q(i)")
@_exit_on_error
def member(cells_path, point):
    """Decide si un punto pertenece a un conjunto constructible."""
    s = load_constructible(cells_path)
    click.echo(_verdict(contains_point(s, parse_point(point, s.ring.ngens))))


@cli.command()
@click.option("--input", "input_path", required=True, type=click.Path(dir_okay=False),
              help="Presentación JSON {variables, A, y}")
@click.option("--point", required=True, help="Coordenadas 'c1,c2,...' en Q(i)")
@_exit_on_error
def oracle(input_path, point):
    """Prueba de rango directa: ¿y(pt) está en la imagen de A(pt)?"""
    pres = load_presentation(input_path)
    click.echo(_verdict(solvable_at_point(pres, parse_point(point, pres.ring.ngens))))


@cli.command("inf-locus")
@click.option("--chart", "chart_path", required=True, type=click.Path(dir_okay=False),
              help="Carta JSON {n, p, q, a, f}")
@click.option("--no-prune", is_flag=True, help="No eliminar celdas vacías")
@click.option("--output", type=click.Path(dir_okay=False), help="Archivo de salida")
@_exit_on_error
def inf_locus(chart_path, no_prune, output):
    """Lugar de ceros del invariante infinitesimal en (x, ξ)."""
    chart = load_chart(chart_path)
    _emit(infinitesimal_locus(chart, prune=not no_prune), output)


@cli.command()
@click.option("--trials", type=click.IntRange(min=0), default=10, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--points", type=click.IntRange(min=1), default=None,
              help="Puntos por presentación (por defecto ZEROLOCUS_FUZZ_POINTS)")
@_exit_on_error
def fuzz(trials, seed, points):
    """Compara zero-locus con el oráculo sobre presentaciones aleatorias."""
    report = run_oracle_fuzz(trials, seed, points)
    click.echo(report.summary())
    if not report.ok:
        click.get_current_context().exit(EXIT_FUZZ_MISMATCH)


@cli.command()
@click.option("--input", "input_path", required=True, type=click.Path(dir_okay=False),
              help="Presentación JSON {variables, A, y}")
@_exit_on_error
def strata(input_path):
    """Muestra el certificado de cada estrato (l, S, T)."""
    pres = load_presentation(input_path)
    console.print(strata_table(certificates(pres)))


def punctured_axis_presentation() -> ModulePresentation:
    """A = (-y, x)^T, y = (1, 0): Z(M, m) es el eje y sin el origen."""
    ring = PolyRing(("x", "y"))
    x, y = ring.gens
    return ModulePresentation.from_rows(ring, [[-y], [x]], [ring.one, ring.zero])


@cli.command()
@click.argument("name", type=click.Choice(["paper-ideal", "quadric"]))
@_exit_on_error
def example(name):
    """Ejemplos incorporados."""
    if name == "paper-ideal":
        pres = punctured_axis_presentation()
        s = zero_locus(pres, prune=True)
        click.echo(f"Presentación: {pres}")
        click.echo("Celdas:")
        click.echo(format_cells(s))
        click.echo("")
        click.echo(membership_grid(s, settings.cli.grid_radius))
        return

    checks = quadric_example_checks()
    console.print(quadric_table(checks))
    passed = sum(1 for c in checks if c.passed)
    click.echo(f"{passed}/{len(checks)} comprobaciones correctas")
    if passed != len(checks):
        raise InvariantViolationError("Alguna identidad del ejemplo de la cuádrica no se cumple")


def run(argv: Optional[List[str]] = None) -> int:
    """
    Ejecuta el CLI y devuelve el código de salida en lugar de terminar.

    Los errores de uso de click (opción faltante, valor inválido) dan 1.
    """
    try:
        rv = cli.main(args=argv, prog_name="zerolocus", standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("Abortado", err=True)
        return EXIT_BAD_INPUT
    except click.ClickException as e:
        e.show()
        return EXIT_BAD_INPUT
    return rv if isinstance(rv, int) else EXIT_OK
