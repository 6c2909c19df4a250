# tests/test_arith.py

import unittest
import sys
import os
from fractions import Fraction

# Agregar la raíz del proyecto al path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.arith.field import (FieldDescriptor, characteristic, field_arith, format_element,
                             is_integral, parse_element)
from src.utils.errors import DivisionByZero, InvalidModulus, MixedFields, ParseError


class TestArith(unittest.TestCase):
    def setUp(self):
        self.Q = FieldDescriptor.rationals()
        self.F7 = FieldDescriptor.prime(7)

    def test_parse_descriptor(self):
        """Reconoce las formas de texto de los cuerpos"""
        self.assertEqual(FieldDescriptor.parse("rational"), self.Q)
        self.assertEqual(FieldDescriptor.parse("Q"), self.Q)
        for text in ("prime:7", "F_7", "GF(7)", "7"):
            self.assertEqual(FieldDescriptor.parse(text), self.F7)

    def test_invalid_modulus(self):
        """Módulos compuestos o pequeños se rechazan"""
        with self.assertRaises(InvalidModulus):
            FieldDescriptor.prime(15)
        with self.assertRaises(InvalidModulus):
            FieldDescriptor.prime(1)
        with self.assertRaises(ParseError):
            FieldDescriptor.parse("reales")

    def test_rational_reduction(self):
        """Las fracciones quedan reducidas"""
        a = parse_element(self.Q, "-6/4")
        self.assertEqual(a.value, Fraction(-3, 2))
        self.assertEqual(format_element(a), "-3/2")
        self.assertEqual(format_element(self.Q.element(5)), "5")

    def test_prime_field_arithmetic(self):
        """Residuos canónicos y inversos módulo p"""
        a = self.F7.element(3)
        self.assertEqual(a.inverse(), 5)
        self.assertEqual(a / a, 1)
        self.assertEqual(a ** -1, 5)
        self.assertEqual(format_element(self.F7.element(-1)), "6")
        self.assertEqual(parse_element(self.F7, "10"), 3)

    def test_division_by_zero(self):
        """Dividir por cero lanza DivisionByZero"""
        with self.assertRaises(DivisionByZero):
            self.Q.element(1) / self.Q.zero
        with self.assertRaises(DivisionByZero):
            self.F7.zero.inverse()
        with self.assertRaises(DivisionByZero):
            parse_element(self.Q, "1/0")

    def test_mixed_fields(self):
        """No se mezclan elementos de cuerpos distintos"""
        with self.assertRaises(MixedFields):
            self.Q.element(1) + self.F7.element(1)
        with self.assertRaises(MixedFields):
            field_arith('mul', self.Q.one, self.F7.one)

    def test_field_arith_dispatch(self):
        """Operaciones por nombre"""
        a, b = self.Q.element(Fraction(1, 2)), self.Q.element(3)
        self.assertEqual(field_arith('add', a, b), Fraction(7, 2))
        self.assertEqual(field_arith('div', a, b), Fraction(1, 6))
        self.assertEqual(field_arith('inv', a), 2)
        self.assertEqual(field_arith('neg', b), -3)

    def test_field_arith_bad_operation(self):
        """Operador desconocido u operando ausente son errores de la biblioteca"""
        with self.assertRaises(ParseError) as ctx:
            field_arith('pow', self.Q.one, self.Q.one)
        self.assertEqual(ctx.exception.exit_code, 2)
        with self.assertRaises(ParseError):
            field_arith('add', self.Q.one)

    def test_characteristic_and_integrality(self):
        """Característica e integralidad"""
        self.assertEqual(characteristic(self.Q), 0)
        self.assertEqual(characteristic(self.F7), 7)
        self.assertTrue(is_integral(self.Q.element(4)))
        self.assertFalse(is_integral(self.Q.element(Fraction(1, 3))))


if __name__ == '__main__':
    unittest.main()
