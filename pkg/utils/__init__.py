"""
Paquete de utilidades para ZeroLocus
"""

from .logger import setup_logger, log_metric

__all__ = [
    'setup_logger',
    'log_metric',
]
