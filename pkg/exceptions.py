"""
Excepciones personalizadas para ZeroLocus.

Este módulo define todas las excepciones custom del proyecto,
organizadas jerárquicamente desde una clase base.
"""


class ZeroLocusError(Exception):
    """Excepción base para todos los errores de ZeroLocus."""
    def __init__(self, message: str, details: str = None):
        self.message = message
        self.details = details
        super().__init__(self.message)


# ==================== Errores algebraicos ====================

class AlgebraError(ZeroLocusError):
    """Excepción base para errores de aritmética exacta."""
    pass


class RingMismatchError(AlgebraError):
    """Los operandos pertenecen a anillos de polinomios distintos."""
    pass


class DimensionMismatchError(AlgebraError):
    """Un punto o una sustitución no tiene tantas coordenadas como variables."""
    pass


class ShapeError(AlgebraError):
    """Una matriz o un arreglo no tiene la forma esperada."""
    pass


class DegreeOverflowError(AlgebraError):
    """Un monomio supera el grado total máximo admitido (2^31)."""
    pass


class InexactDivisionError(AlgebraError):
    """Se pidió una división exacta entre polinomios que no se dividen."""
    pass


# ==================== Errores de Validación ====================

class ValidationError(ZeroLocusError):
    """Excepción base para errores de validación de entradas."""
    pass


class PolySyntaxError(ValidationError):
    """Error de sintaxis en una expresión polinomial."""
    def __init__(self, message: str, offset: int, details: str = None):
        self.reason = message
        self.offset = offset
        super().__init__(f"{message} (byte {offset})", details)


class UnknownIdentifierError(ValidationError):
    """La expresión usa un identificador que no es variable del anillo."""
    def __init__(self, identifier: str, offset: int = 0):
        self.identifier = identifier
        self.offset = offset
        super().__init__(
            f"Identificador desconocido '{identifier}' (byte {offset})"
        )


class InvalidVariableNameError(ValidationError):
    """Nombre de variable inválido, repetido o reservado."""
    pass


class InvalidDocumentError(ValidationError):
    """Un documento JSON de entrada no respeta su esquema."""
    pass


# ==================== Errores de Configuración ====================

class ConfigurationError(ZeroLocusError):
    """Error en la configuración del sistema."""
    pass


class InvalidConfigurationError(ValidationError, ConfigurationError):
    """La configuración proporcionada no es válida."""
    pass


# ==================== Errores internos ====================

class InvariantViolationError(ZeroLocusError):
    """Un invariante interno se rompió; indica un bug, no una entrada mala."""
    pass
