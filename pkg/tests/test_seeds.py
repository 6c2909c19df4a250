# tests/test_seeds.py

import unittest
import sys
import os
import random

# Agregar la raíz del proyecto al path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.arith.field import FieldDescriptor
from src.curves.weierstrass import REASON_COLLISION, WeierstrassCurve
from src.nets import (CurveNetContext, SeedSet, check_axiom, eval_term_curve_backed, fill_block,
                      net_from_curve, normalize, sample_quadruples, seed_rank1, seed_rank2,
                      seed_rank3, transform_by_homomorphism)
from src.nets.seeds import division_values
from src.utils.errors import NotAppropriate, RankMismatch
from tests.fixtures import (CURVE_389, DIAGONAL_389, EDS_389, GRID_RANGES, P_389, Q_389, R_389,
                            RANK2_SEEDS, grid_items)


def random_prime_curve(rng, F, rank):
    """Curva no singular sobre F con rank puntos apropiados, por búsqueda exhaustiva"""
    p = F.modulus
    while True:
        curve = WeierstrassCurve.from_coefficients(F, [rng.randrange(p) for _ in range(5)])
        if curve.is_singular():
            continue
        points = []
        for x in rng.sample(range(p), p):
            for y in range(p):
                if curve.evaluate(F.element(x), F.element(y)).is_zero():
                    points.append(curve.point(x, y))
                    break
            if len(points) == rank:
                break
        if len(points) == rank and curve.is_appropriate(points)[0]:
            return curve, points


def affine_points(curve):
    """Puntos afines de una curva sobre F_p por búsqueda exhaustiva"""
    F = curve.field
    for x in range(F.modulus):
        for y in range(F.modulus):
            if curve.evaluate(F.element(x), F.element(y)).is_zero():
                yield curve.point(x, y)


class TestSeeds(unittest.TestCase):
    def setUp(self):
        self.Q = FieldDescriptor.rationals()
        self.curve = WeierstrassCurve.from_coefficients(self.Q, CURVE_389)
        self.P = self.curve.point(*P_389)
        self.Qp = self.curve.point(*Q_389)
        self.R = self.curve.point(*R_389)

    def test_division_values(self):
        """Ω_1..Ω_4 en P dan 1, 1, -3, 11"""
        self.assertEqual(list(division_values(self.curve, self.P).values()), EDS_389[1:5])

    def test_grid_block(self):
        """W_{C,(P,Q)} sobre [-2,6]² coincide con la rejilla"""
        ctx = CurveNetContext(self.curve, [self.P, self.Qp])
        W = net_from_curve(ctx, GRID_RANGES)
        for v, expected in grid_items():
            self.assertEqual(W.get(v), expected, v)

    def test_rank1_sequence(self):
        """La sucesión de P hasta W(14)"""
        ctx = CurveNetContext(self.curve, [self.P])
        W = net_from_curve(ctx, [(0, 14)])
        self.assertEqual([W.get((m,)) for m in range(15)], EDS_389)
        self.assertEqual(seed_rank1(ctx), {(1,): 1, (2,): 1, (3,): -3, (4,): 11})

    def test_seed_rank2(self):
        """Las semillas explícitas de rango 2"""
        ctx = CurveNetContext(self.curve, [self.P, self.Qp])
        values = seed_rank2(ctx)
        for v, expected in RANK2_SEEDS.items():
            self.assertEqual(values[v], expected, v)
        self.assertEqual(values[(1, -1)], 1)
        self.assertEqual(values[(2, -1)], -1)

    def test_seed_rank3(self):
        """Términos explícitos de rango 3"""
        ctx = CurveNetContext(self.curve, [self.P, self.Qp, self.R])
        values = seed_rank3(ctx)
        self.assertEqual(values[(1, -1, 0)], 1)
        self.assertEqual(values[(1, 0, -1)], 3)
        self.assertEqual(values[(1, 1, 1)] * values[(1, 1, -1)], 5)
        with self.assertRaises(RankMismatch):
            seed_rank3(CurveNetContext(self.curve, [self.P]))

    def test_curve_backed_step(self):
        """W(u + e_i) desde W(u), W(u - e_i) y las abscisas"""
        ctx = CurveNetContext(self.curve, [self.P, self.Qp])
        self.assertEqual(eval_term_curve_backed(ctx, (5, 0)), 38)
        self.assertEqual(eval_term_curve_backed(ctx, (3, 1)), -5)

    def test_not_appropriate(self):
        """P y -P a la vez no son apropiados"""
        with self.assertRaises(NotAppropriate) as ctx:
            CurveNetContext(self.curve, [self.P, self.curve.negate_point(self.P)])
        self.assertEqual(ctx.exception.reason, REASON_COLLISION)

    def test_oracles_agree(self):
        """Evaluación por la curva y propagación desde semillas coinciden"""
        ctx = CurveNetContext(self.curve, [self.P, self.Qp])
        seeds = SeedSet.from_net(net_from_curve(ctx, [(0, 2), (0, 2)]))
        block = fill_block(seeds, GRID_RANGES)
        for v in block.indices():
            self.assertEqual(block.value(v), ctx.term(v), v)

    def test_diagonal_law(self):
        """W(k,k) es la sucesión de P + Q"""
        ctx = CurveNetContext(self.curve, [self.P, self.Qp])
        self.assertEqual([ctx.term((k, k)) for k in range(1, 5)], DIAGONAL_389)

    def test_transport_identity(self):
        """normalize(W ∘ T) es la red de los puntos transportados"""
        ctx = CurveNetContext(self.curve, [self.P, self.Qp, self.R])
        W = net_from_curve(ctx, [(-3, 3), (-3, 3), (-3, 3)])
        T = [[1, 0], [1, 1], [0, -1]]
        composed, _ = normalize(transform_by_homomorphism(W, T, [(-1, 2), (-1, 1)]))
        transported = CurveNetContext(self.curve, self.curve.transport_points([self.P, self.Qp, self.R], T))
        for v, x in composed.items():
            self.assertEqual(x, transported.term(v), v)

    def test_prime_field_nets_satisfy_relation(self):
        """Redes de curvas aleatorias sobre F_p cumplen la relación"""
        rng = random.Random(5)
        F = FieldDescriptor.prime(1009)
        for _ in range(4):
            curve, points = random_prime_curve(rng, F, 2)
            W = net_from_curve(CurveNetContext(curve, points), [(-4, 4), (-4, 4)])
            self.assertTrue(check_axiom(W, sample_quadruples(W, 100, seed=3)).passed)

    def test_zero_pattern(self):
        """W(m) = 0 exactamente en los múltiplos del orden, sobre varios primos y curvas"""
        rng = random.Random(29)
        checked = 0
        for p in (11, 13, 17, 19, 23):
            F = FieldDescriptor.prime(p)
            for _ in range(2):
                curve, _ = random_prime_curve(rng, F, 1)
                for P in affine_points(curve):
                    order = curve.point_order(P, 2 * p + 2)
                    if order <= 3:
                        continue
                    W = net_from_curve(CurveNetContext(curve, [P]), [(0, 3 * order)])
                    for m in range(3 * order + 1):
                        self.assertEqual(W.get((m,)).is_zero(), m % order == 0, (p, curve.coefficients, P, m))
                    checked += 1
        self.assertGreaterEqual(checked, 20)

    def test_zero_pattern_rank2(self):
        """W(v) = 0 exactamente cuando v1·P1 + v2·P2 = O"""
        rng = random.Random(31)
        checked = 0
        for p in (11, 13, 17, 19, 23):
            F = FieldDescriptor.prime(p)
            done = 0
            while done < 3:
                curve, points = random_prime_curve(rng, F, 2)
                # relaciones cortas entre P1 y P2 dejan índices sin dirección de avance
                if any(curve.linear_combination(c, points).is_infinity
                       for c in ((1, -1), (2, -1), (1, -2), (2, -2))):
                    continue
                ctx = CurveNetContext(curve, points)
                order = curve.point_order(points[0], 2 * p + 2)
                W = net_from_curve(ctx, [(0, order), (-2, 2)])
                zeros = 0
                for v, x in W.items():
                    self.assertEqual(x.is_zero(), ctx.combination(v).is_infinity, (p, curve.coefficients, v))
                    zeros += x.is_zero()
                self.assertGreaterEqual(zeros, 1)
                square = net_from_curve(ctx, [(-4, 4), (-4, 4)])
                self.assertTrue(check_axiom(square, sample_quadruples(square, 100, seed=3)).passed)
                done += 1
                checked += 1
        self.assertEqual(checked, 15)


if __name__ == '__main__':
    unittest.main()
