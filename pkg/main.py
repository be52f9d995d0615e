"""
ZeroLocus - punto de entrada

Uso:
    python main.py example paper-ideal
    python main.py zero-locus --input presentacion.json
"""

import sys

from cli.app import run

if __name__ == "__main__":
    sys.exit(run())
