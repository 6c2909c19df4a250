# tests/test_transform.py

import unittest
import sys
import os
import random
from fractions import Fraction

# Agregar la raíz del proyecto al path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.arith.field import FieldDescriptor
from src.curves.weierstrass import WeierstrassCurve
from src.nets import (CurveNetContext, EllipticNet, QuadraticFormScaling, apply_scaling, are_scale_equivalent,
                      homothety, homothety_exponent, is_degenerate, net_from_curve, normalize,
                      scale_constant)
from src.nets.transform import is_normalised
from src.utils.errors import DegenerateNet, DivisionByZero, InsufficientOverlap, RankMismatch
from tests.fixtures import CURVE_389, P_389, Q_389, grid_net, grid_items


class TestTransform(unittest.TestCase):
    def setUp(self):
        self.Q = FieldDescriptor.rationals()
        self.W = grid_net()
        self.rng = random.Random(3)

    def random_form(self, rank=2):
        values = {}
        for i in range(rank):
            for j in range(i, rank):
                values[(i, j)] = Fraction(self.rng.choice([-3, -2, -1, 1, 2, 3]), self.rng.randint(1, 4))
        return QuadraticFormScaling.from_values(rank, self.Q, values)

    def test_form_evaluation(self):
        """f(v) = ∏ A_ij^(v_i·v_j)"""
        f = QuadraticFormScaling.from_values(2, self.Q, {(0, 0): 2, (0, 1): 3, (1, 1): 5})
        self.assertEqual(f((1, 1)), 30)
        self.assertEqual(f((2, -1)), Fraction(16 * 5, 9))
        self.assertTrue(f.compose(f.inverse()).is_identity())
        with self.assertRaises(DivisionByZero):
            QuadraticFormScaling.from_values(1, self.Q, {(0, 0): 0})

    def test_normalisation_uniqueness(self):
        """Escalados aleatorios de la rejilla se normalizan a la misma red"""
        for _ in range(20):
            f = self.random_form()
            scaled = apply_scaling(self.W, f)
            normalised, g = normalize(scaled)
            self.assertEqual(normalised, self.W)
            self.assertTrue(g.compose(f).is_identity())

    def test_scale_equivalence(self):
        """El testigo devuelto lleva una red a la otra"""
        f = self.random_form()
        witness = are_scale_equivalent(self.W, apply_scaling(self.W, f))
        self.assertEqual(apply_scaling(self.W, witness), apply_scaling(self.W, f))
        other = self.W.copy()
        other.set((3, 3), 0)
        self.assertIsNone(are_scale_equivalent(self.W, other))

    def test_insufficient_overlap(self):
        """Sin términos unitarios comunes no se compara"""
        partial = EllipticNet(2, self.Q, {v: x for v, x in grid_items() if v not in ((1, 1), (-1, -1))})
        with self.assertRaises(InsufficientOverlap):
            are_scale_equivalent(self.W, partial)
        with self.assertRaises(RankMismatch):
            apply_scaling(self.W, self.random_form(rank=1))

    def test_homothety_matches_curve(self):
        """W_{C_λ, φ_λ(P)} = λ^g(v)·W_{C,P} para λ = 2, 3, 1/2"""
        curve = WeierstrassCurve.from_coefficients(self.Q, CURVE_389)
        points = [curve.point(*P_389), curve.point(*Q_389)]
        ranges = [(-3, 3), (-3, 3)]
        base = net_from_curve(CurveNetContext(curve, points), ranges)
        for lam in (2, 3, Fraction(1, 2)):
            image, point_map = curve.homothety_transform(lam)
            expected = net_from_curve(CurveNetContext(image, [point_map(P) for P in points]), ranges)
            self.assertEqual(homothety(base, lam), expected, lam)

    def test_homothety_invariants(self):
        """C_λ tiene Δ multiplicado por λ¹² y el mismo j; los puntos siguen en la curva"""
        for F in (self.Q, FieldDescriptor.prime(1009)):
            curve = WeierstrassCurve.from_coefficients(F, CURVE_389)
            for lam in (2, 3, Fraction(1, 2)):
                image, point_map = curve.homothety_transform(lam)
                scale = F.element(lam)
                self.assertEqual(image.discriminant(), scale ** 12 * curve.discriminant())
                self.assertEqual(image.j_invariant(), curve.j_invariant())
                for P in (curve.point(*P_389), curve.point(*Q_389)):
                    self.assertTrue(image.is_on_curve(point_map(P)))

    def test_homothety_is_scale_equivalent_after_constant(self):
        """λ·W^λ es equivalente por escala a W"""
        lam = 3
        witness = are_scale_equivalent(self.W, scale_constant(homothety(self.W, lam), lam))
        self.assertIsNotNone(witness)
        self.assertIsNone(are_scale_equivalent(self.W, homothety(self.W, lam)))

    def test_homothety_exponent(self):
        """g(v) = -1 + Σ v_i² - Σ_{i<j} v_i·v_j"""
        self.assertEqual(homothety_exponent((1,)), 0)
        self.assertEqual(homothety_exponent((2,)), 3)
        self.assertEqual(homothety_exponent((1, 1)), 0)
        self.assertEqual(homothety_exponent((2, -1)), 6)
        with self.assertRaises(DivisionByZero):
            homothety(self.W, 0)

    def test_degeneracy(self):
        """Un término unitario nulo hace degenerada la red"""
        self.assertEqual(is_degenerate(self.W), (False, None))
        self.assertTrue(is_normalised(self.W))
        broken = self.W.copy()
        broken.set((0, 2), 0)
        self.assertEqual(is_degenerate(broken), (True, "W(0,2) = 0"))
        broken.set((1, 0), 0)
        with self.assertRaises(DegenerateNet) as ctx:
            normalize(broken)
        self.assertEqual(ctx.exception.index, (1, 0))


if __name__ == '__main__':
    unittest.main()
