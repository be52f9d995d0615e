"""
Módulo de configuración de ZeroLocus
"""

from config.settings import settings, Settings, SUPPORTED_ORDERS

__all__ = [
    'settings',
    'Settings',
    'SUPPORTED_ORDERS',
]
