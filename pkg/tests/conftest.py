"""Configuración global de pytest y fixtures"""

import json
import random
import sys
from pathlib import Path

import pytest

# Agregar raíz del proyecto al path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from algebra.polynomial import PolyRing  # noqa: E402
from zerolocus.presentation import ModulePresentation  # noqa: E402


def pytest_configure(config):
    """
    Registrar markers personalizados ANTES de la colección de tests.
    """
    config.addinivalue_line(
        "markers",
        "integration: Tests de integración (CLI de punta a punta)"
    )
    config.addinivalue_line(
        "markers",
        "slow: Tests lentos (>5 segundos)"
    )
    config.addinivalue_line(
        "markers",
        "unit: Tests unitarios rápidos"
    )


def pytest_collection_modifyitems(config, items):
    """Marca cada test según su carpeta (unit / integration)."""
    for item in items:
        path = Path(str(item.fspath))
        if "integration" in path.parts:
            item.add_marker(pytest.mark.integration)
        elif "unit" in path.parts:
            item.add_marker(pytest.mark.unit)


# =====================================================================
# FIXTURES COMPARTIDAS
# =====================================================================

@pytest.fixture
def temp_dir(tmp_path):
    """Directorio temporal para tests"""
    return tmp_path


@pytest.fixture
def ring_xy():
    return PolyRing(("x", "y"))


@pytest.fixture
def ring_x():
    return PolyRing(("x",))


@pytest.fixture
def axis_presentation(ring_xy):
    """A = (-y, x)^T, y = (1, 0): Z es el eje y sin el origen."""
    x, y = ring_xy.gens
    return ModulePresentation.from_rows(ring_xy, [[-y], [x]], [ring_xy.one, ring_xy.zero])


@pytest.fixture
def rng():
    """Generador sembrado: los tests aleatorios son reproducibles."""
    return random.Random(20240601)


@pytest.fixture
def write_json(tmp_path):
    """Escribe un objeto JSON en tmp_path y devuelve la ruta."""
    def _write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return path
    return _write
