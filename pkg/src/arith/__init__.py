"""
Módulo de aritmética exacta
"""

from .field import (FieldDescriptor, FieldElement, FieldKind, characteristic,
                    field_arith, format_element, is_integral, parse_element)

__all__ = ['FieldDescriptor', 'FieldElement', 'FieldKind', 'characteristic',
           'field_arith', 'format_element', 'is_integral', 'parse_element']
