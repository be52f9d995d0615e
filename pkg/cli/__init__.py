"""
CLI de ZeroLocus.
Comandos click y formateo de la salida.
"""

from cli.app import cli, run, EXIT_OK, EXIT_BAD_INPUT, EXIT_INTERNAL, EXIT_FUZZ_MISMATCH
from cli.formatter import format_cells, membership_grid

__all__ = [
    'cli',
    'run',
    'EXIT_OK',
    'EXIT_BAD_INPUT',
    'EXIT_INTERNAL',
    'EXIT_FUZZ_MISMATCH',
    'format_cells',
    'membership_grid',
]
