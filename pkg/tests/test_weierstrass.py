# tests/test_weierstrass.py

import unittest
import sys
import os

# Agregar la raíz del proyecto al path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.arith.field import FieldDescriptor
from src.curves.weierstrass import (INFINITY, REASON_COLLISION, REASON_THREE_TORSION,
                                    REASON_TWO_TORSION, WeierstrassCurve, find_unihomothety)
from src.utils.errors import PointNotOnCurve, SingularCurve
from tests.fixtures import CURVE_389, P_389, Q_389, R_389


class TestWeierstrass(unittest.TestCase):
    def setUp(self):
        self.Q = FieldDescriptor.rationals()
        self.curve = WeierstrassCurve.from_coefficients(self.Q, CURVE_389)
        self.P = self.curve.point(*P_389)
        self.Qp = self.curve.point(*Q_389)

    def test_invariants(self):
        """Δ = 389 y j = c4³/Δ"""
        self.assertEqual(self.curve.discriminant(), 389)
        self.assertFalse(self.curve.is_singular())
        self.assertEqual(self.curve.c4(), 112)
        self.assertEqual(self.curve.j_invariant(), self.curve.c4() ** 3 / 389)

    def test_singular_curve(self):
        """y² = x³ no tiene invariante j"""
        cusp = WeierstrassCurve.from_coefficients(self.Q, (0, 0, 0, 0, 0))
        self.assertTrue(cusp.is_singular())
        with self.assertRaises(SingularCurve):
            cusp.j_invariant()

    def test_point_not_on_curve(self):
        """Un punto fuera de la curva se rechaza"""
        with self.assertRaises(PointNotOnCurve):
            self.curve.point(2, 2)

    def test_group_law(self):
        """P + Q = (-2,-1) y P - Q = (-1,-2)"""
        self.assertEqual(self.curve.add_points(self.P, self.Qp), self.curve.point(-2, -1))
        difference = self.curve.linear_combination((1, -1), (self.P, self.Qp))
        self.assertEqual(difference, self.curve.point(-1, -2))
        self.assertEqual(self.curve.add_points(self.P, self.curve.negate_point(self.P)), INFINITY)

    def test_appropriate_points(self):
        """Condiciones de admisibilidad con su motivo"""
        self.assertEqual(self.curve.is_appropriate([self.P, self.Qp]), (True, None))
        self.assertEqual(self.curve.is_appropriate([self.P, self.curve.negate_point(self.P)]),
                         (False, REASON_COLLISION))
        # y² = x³ - x tiene (0,0) de 2-torsión
        c = WeierstrassCurve.from_coefficients(self.Q, (0, 0, 0, -1, 0))
        self.assertEqual(c.is_appropriate([c.point(0, 0)]), (False, REASON_TWO_TORSION))
        # y² = x³ + 1: (0,1) tiene orden 3
        c = WeierstrassCurve.from_coefficients(self.Q, (0, 0, 0, 0, 1))
        self.assertEqual(c.is_appropriate([c.point(0, 1)]), (False, REASON_THREE_TORSION))

    def test_point_order(self):
        """Orden por sumas repetidas en un cuerpo finito"""
        F = FieldDescriptor.prime(5)
        c = WeierstrassCurve.from_coefficients(F, (0, 0, 0, 0, 1))
        self.assertEqual(c.point_order(c.point(0, 1), 20), 3)
        self.assertIsNone(self.curve.point_order(self.P, 10))

    def test_unihomothety_round_trip(self):
        """El cambio (r, s, t) se recupera desde las imágenes"""
        image, point_map = self.curve.unihomothetic_transform(2, -1, 3)
        found = find_unihomothety(self.curve, [self.P, self.Qp], image, [point_map(self.P), point_map(self.Qp)])
        self.assertEqual(found, (2, -1, 3))

    def test_transport_points(self):
        """Columnas de T como combinaciones de los puntos"""
        R = self.curve.point(*R_389)
        points = self.curve.transport_points([self.P, self.Qp, R], [[1, 0], [1, 1], [0, -1]])
        self.assertEqual(points[0], self.curve.add_points(self.P, self.Qp))
        self.assertEqual(points[1], self.curve.add_points(self.Qp, self.curve.negate_point(R)))


if __name__ == '__main__':
    unittest.main()
