"""
Configuración general de ZeroLocus

Este módulo centraliza toda la configuración del proyecto usando dataclasses.
Todas las configuraciones están accesibles a través de la instancia global 'settings'.
"""
import os
from pathlib import Path
from dataclasses import dataclass, field
from dotenv import load_dotenv

from exceptions import InvalidConfigurationError

# Cargar variables de entorno desde .env
env_path = Path(__file__).parent.parent / '.env'
load_dotenv(dotenv_path=env_path)

# ============================================================================
# RUTAS DEL PROYECTO
# ============================================================================

BASE_DIR = Path(__file__).parent.parent

# Órdenes monomiales soportados por el motor de Gröbner
SUPPORTED_ORDERS = ("grevlex", "lex")


# ============================================================================
# DATACLASSES DE CONFIGURACIÓN
# ============================================================================

@dataclass
class AlgebraSettings:
    """Configuración de la aritmética exacta"""
    monomial_order: str = os.getenv("ZEROLOCUS_MONOMIAL_ORDER", "grevlex")


@dataclass
class ComputeSettings:
    """Paralelismo y límites de escala de escritorio"""
    workers: int = int(os.getenv("ZEROLOCUS_WORKERS", "1"))
    # p, q por encima de este valor se aceptan pero se avisa en el log
    max_presentation_size: int = int(os.getenv("ZEROLOCUS_MAX_PRESENTATION_SIZE", "5"))
    # Puntos pequeños que se prueban como testigo antes de decidir vacuidad
    witness_points: int = int(os.getenv("ZEROLOCUS_WITNESS_POINTS", "64"))


@dataclass
class FuzzSettings:
    """Parámetros del generador aleatorio de presentaciones"""
    points_per_presentation: int = int(os.getenv("ZEROLOCUS_FUZZ_POINTS", "25"))
    max_variables: int = int(os.getenv("ZEROLOCUS_FUZZ_MAX_VARIABLES", "2"))
    max_rows: int = int(os.getenv("ZEROLOCUS_FUZZ_MAX_ROWS", "3"))
    max_cols: int = int(os.getenv("ZEROLOCUS_FUZZ_MAX_COLS", "3"))
    max_degree: int = int(os.getenv("ZEROLOCUS_FUZZ_MAX_DEGREE", "2"))
    coefficient_bound: int = int(os.getenv("ZEROLOCUS_FUZZ_COEFF_BOUND", "3"))


@dataclass
class CLISettings:
    """Configuración del sistema CLI"""
    grid_radius: int = int(os.getenv("ZEROLOCUS_GRID_RADIUS", "2"))
    json_indent: int = int(os.getenv("ZEROLOCUS_JSON_INDENT", "2"))


@dataclass
class LoggingSettings:
    """Configuración del sistema de logging"""
    file: bool = os.getenv("ENABLE_FILE_LOGGING", "false").lower() == "true"
    filename: str = os.getenv("LOG_FILE", str(BASE_DIR / "zerolocus.log"))
    level: str = os.getenv("LOG_LEVEL", "INFO")
    console_level: str = os.getenv("LOG_CONSOLE_LEVEL", "WARNING")
    # Archivo de log en JSON, una línea por registro
    structured: bool = os.getenv("LOG_STRUCTURED", "false").lower() == "true"


@dataclass
class Settings:
    """
    Configuración central de ZeroLocus.

    Accede a las diferentes secciones como:
    - settings.algebra.monomial_order
    - settings.compute.workers
    - settings.fuzz.points_per_presentation
    - settings.cli.grid_radius
    - settings.logging.level
    """
    algebra: AlgebraSettings = field(default_factory=AlgebraSettings)
    compute: ComputeSettings = field(default_factory=ComputeSettings)
    fuzz: FuzzSettings = field(default_factory=FuzzSettings)
    cli: CLISettings = field(default_factory=CLISettings)
    logging: LoggingSettings = field(default_factory=LoggingSettings)

    def validate(self) -> None:
        """
        Valida la configuración.

        Raises:
            InvalidConfigurationError: Si algún valor es inválido
        """
        if self.algebra.monomial_order not in SUPPORTED_ORDERS:
            raise InvalidConfigurationError(
                f"ZEROLOCUS_MONOMIAL_ORDER debe ser uno de {SUPPORTED_ORDERS}: "
                f"{self.algebra.monomial_order}"
            )

        if self.compute.workers < 1:
            raise InvalidConfigurationError(
                f"ZEROLOCUS_WORKERS debe ser positivo: {self.compute.workers}"
            )

        bounds = {
            "ZEROLOCUS_FUZZ_POINTS": self.fuzz.points_per_presentation,
            "ZEROLOCUS_FUZZ_MAX_VARIABLES": self.fuzz.max_variables,
            "ZEROLOCUS_FUZZ_MAX_ROWS": self.fuzz.max_rows,
            "ZEROLOCUS_FUZZ_MAX_COLS": self.fuzz.max_cols,
            "ZEROLOCUS_FUZZ_COEFF_BOUND": self.fuzz.coefficient_bound,
        }
        for name, value in bounds.items():
            if value < 1:
                raise InvalidConfigurationError(f"{name} debe ser positivo: {value}")

        if self.compute.witness_points < 0:
            raise InvalidConfigurationError(
                f"ZEROLOCUS_WITNESS_POINTS no puede ser negativo: {self.compute.witness_points}"
            )

        if self.fuzz.max_degree < 0:
            raise InvalidConfigurationError(
                f"ZEROLOCUS_FUZZ_MAX_DEGREE no puede ser negativo: {self.fuzz.max_degree}"
            )

        if self.cli.grid_radius < 0:
            raise InvalidConfigurationError(
                f"ZEROLOCUS_GRID_RADIUS no puede ser negativo: {self.cli.grid_radius}"
            )


# ============================================================================
# INSTANCIA GLOBAL DE CONFIGURACIÓN
# ============================================================================

# Esta es la instancia que se debe importar en todo el proyecto
settings = Settings()
