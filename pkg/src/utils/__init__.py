"""
Módulo de utilidades
"""

from .errors import EllNetError, format_index

__all__ = ['EllNetError', 'format_index']
