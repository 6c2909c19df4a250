# src/arith/field.py
# Aritmética exacta sobre Q y sobre cuerpos primos F_p

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from sympy import isprime

from ..utils.errors import DivisionByZero, InvalidModulus, MixedFields, ParseError

_RATIONAL_TEXT = re.compile(r'^\s*(-?\d+)(?:/(\d+))?\s*$')
_RESIDUE_TEXT = re.compile(r'^\s*(-?\d+)\s*$')
_PRIME_FIELD_TEXT = re.compile(r'^\s*(?:prime:|F_?|GF\()?(\d+)\)?\s*$', re.IGNORECASE)

Scalar = Union[int, Fraction, "FieldElement"]


class FieldKind(str, Enum):
    RATIONALS = "rational"
    PRIME = "prime"


@dataclass(frozen=True)
class FieldDescriptor:
    """Describe el cuerpo de valores: Q o F_p con p primo"""
    kind: FieldKind
    modulus: Optional[int] = None

    def __post_init__(self):
        if self.kind is FieldKind.PRIME:
            if not isinstance(self.modulus, int) or self.modulus < 2 or not isprime(self.modulus):
                raise InvalidModulus(f"el módulo {self.modulus} no es primo")
        elif self.modulus is not None:
            raise InvalidModulus("Q no lleva módulo")

    @classmethod
    def rationals(cls) -> "FieldDescriptor":
        return cls(FieldKind.RATIONALS)

    @classmethod
    def prime(cls, p: int) -> "FieldDescriptor":
        return cls(FieldKind.PRIME, p)

    @classmethod
    def parse(cls, text: str) -> "FieldDescriptor":
        """Acepta 'rational', 'Q', 'prime:p', 'F_p', 'GF(p)' o un primo suelto"""
        cleaned = text.strip()
        if cleaned.lower() in ('rational', 'rationals', 'q', 'qq'):
            return cls.rationals()
        match = _PRIME_FIELD_TEXT.match(cleaned)
        if not match:
            raise ParseError(f"cuerpo no reconocido: {text!r}")
        return cls.prime(int(match.group(1)))

    @property
    def is_rational(self) -> bool:
        return self.kind is FieldKind.RATIONALS

    @property
    def characteristic(self) -> int:
        return 0 if self.is_rational else self.modulus

    @property
    def label(self) -> str:
        return "rational" if self.is_rational else f"F_{self.modulus}"

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def element(self, value: Scalar) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.descriptor != self:
                raise MixedFields(f"{value.descriptor.label} frente a {self.label}")
            return value
        return FieldElement(self, value)

    def __str__(self) -> str:
        return self.label


def characteristic(desc: FieldDescriptor) -> int:
    return desc.characteristic


class FieldElement:
    """Escalar exacto inmutable; Fraction reducida en Q, residuo en [0, p) en F_p"""

    __slots__ = ('descriptor', 'value')

    def __init__(self, descriptor: FieldDescriptor, value: Union[int, Fraction]):
        if descriptor.is_rational:
            value = Fraction(value)
        else:
            p = descriptor.modulus
            if isinstance(value, Fraction):
                if value.denominator % p == 0:
                    raise DivisionByZero(f"denominador {value.denominator} nulo en F_{p}")
                value = value.numerator * pow(value.denominator, -1, p)
            value = int(value) % p
        object.__setattr__(self, 'descriptor', descriptor)
        object.__setattr__(self, 'value', value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement es inmutable")

    # ========== COERCIÓN ==========

    def _coerce(self, other: Scalar) -> Optional["FieldElement"]:
        if isinstance(other, FieldElement):
            if other.descriptor != self.descriptor:
                raise MixedFields(f"{self.descriptor.label} frente a {other.descriptor.label}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return FieldElement(self.descriptor, other)
        return None

    # ========== OPERACIONES ==========

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.descriptor, self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.descriptor, self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.descriptor, other.value - self.value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.descriptor, self.value * other.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return FieldElement(self.descriptor, -self.value)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = self.inverse()
            exponent = -exponent
        if self.descriptor.is_rational:
            return FieldElement(self.descriptor, base.value ** exponent)
        return FieldElement(self.descriptor, pow(base.value, exponent, self.descriptor.modulus))

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise DivisionByZero("inverso de cero")
        if self.descriptor.is_rational:
            return FieldElement(self.descriptor, 1 / self.value)
        return FieldElement(self.descriptor, pow(self.value, -1, self.descriptor.modulus))

    # ========== COMPARACIÓN ==========

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.descriptor == other.descriptor and self.value == other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            try:
                return self.value == FieldElement(self.descriptor, other).value
            except DivisionByZero:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.descriptor, self.value))

    # ========== TEXTO ==========

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"FieldElement({self.descriptor.label}, {format_element(self)})"


def format_element(a: FieldElement) -> str:
    """Forma canónica de texto: n o n/d en Q, residuo en F_p"""
    if a.descriptor.is_rational:
        if a.value.denominator == 1:
            return str(a.value.numerator)
        return f"{a.value.numerator}/{a.value.denominator}"
    return str(a.value)


def parse_element(desc: FieldDescriptor, text: str) -> FieldElement:
    if desc.is_rational:
        match = _RATIONAL_TEXT.match(text)
        if not match:
            raise ParseError(f"elemento de Q mal formado: {text!r}")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) is not None else 1
        if denominator == 0:
            raise DivisionByZero(f"{text.strip()}: denominador cero")
        return FieldElement(desc, Fraction(numerator, denominator))
    match = _RESIDUE_TEXT.match(text)
    if not match:
        raise ParseError(f"elemento de F_{desc.modulus} mal formado: {text!r}")
    return FieldElement(desc, int(match.group(1)))


def field_arith(op: str, a: FieldElement, b: Optional[FieldElement] = None) -> FieldElement:
    """Despacha una operación de cuerpo por nombre"""
    if op in ('add', 'sub', 'mul', 'div'):
        if b is None:
            raise ParseError(f"la operación {op} necesita dos operandos")
        if a.descriptor != b.descriptor:
            raise MixedFields(f"{a.descriptor.label} frente a {b.descriptor.label}")
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'div':
        return a / b
    if op == 'neg':
        return -a
    if op == 'inv':
        return a.inverse()
    raise ParseError(f"operación desconocida: {op}")


def is_integral(a: FieldElement) -> bool:
    if not a.descriptor.is_rational:
        raise MixedFields("la integralidad solo tiene sentido en Q")
    return a.value.denominator == 1
