# tests/test_propagate.py

import unittest
import sys
import os
import itertools
import random
from fractions import Fraction

# Agregar la raíz del proyecto al path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.arith.field import FieldDescriptor, is_integral
from src.curves.weierstrass import WeierstrassCurve
from src.nets import (CurveNetContext, EllipticNet, PropagationEngine, SeedSet, fill_block,
                      generic_instance_search, rank1_term, rank2_bootstrap, rank2_term, rank3_lift,
                      rankn_term)
from src.nets.lattice import RelationInstance
from src.nets.propagate import RANK2_TABLE, baseset, solve_instance
from src.utils.errors import DegenerateSeeds, RankMismatch, SearchExhausted, UnderspecifiedSeeds
from tests.fixtures import (CURVE_389, EDS_389, GRID_RANGES, P_389, Q_389, R_389, RANK1_SEEDS,
                            RANK2_SEEDS, grid_net, grid_items)


class TestPropagate(unittest.TestCase):
    def setUp(self):
        self.Q = FieldDescriptor.rationals()
        self.rank1 = SeedSet(1, self.Q, RANK1_SEEDS)
        self.rank2 = SeedSet(2, self.Q, RANK2_SEEDS)

    def test_rank1_sequence(self):
        """Las cuatro semillas reproducen la sucesión hasta W(14)"""
        engine = PropagationEngine(self.rank1)
        self.assertEqual([engine.term((m,)) for m in range(15)], EDS_389)
        self.assertEqual(rank1_term(self.rank1, -7), 2357)

    def test_rank1_zero_divisor(self):
        """W(2) = 0 bloquea la propagación"""
        seeds = SeedSet(1, self.Q, {(1,): 1, (2,): 0, (3,): 1, (4,): 1})
        with self.assertRaises(DegenerateSeeds) as ctx:
            PropagationEngine(seeds)
        self.assertIn("W(2) = 0", str(ctx.exception))

    def test_underspecified(self):
        """Faltan semillas del conjunto base"""
        with self.assertRaises(UnderspecifiedSeeds) as ctx:
            SeedSet(2, self.Q, {(1, 0): 1, (0, 1): 1})
        self.assertIn((1, 1), ctx.exception.missing)
        with self.assertRaises(RankMismatch):
            SeedSet(1, self.Q, {(1, 0): 1})

    def test_rank2_block(self):
        """Las ocho semillas reproducen las 81 entradas de la rejilla"""
        block = fill_block(self.rank2, GRID_RANGES)
        for v, expected in grid_items():
            self.assertEqual(block.value(v), expected, v)

    def test_rank2_bootstrap(self):
        """Con siete semillas se obtienen W(1,-1) y W(2,2)"""
        seeds = SeedSet(2, self.Q, {v: x for v, x in RANK2_SEEDS.items() if v != (2, 2)})
        values = rank2_bootstrap(seeds)
        self.assertEqual(values[(1, -1)], 1)
        self.assertEqual(values[(2, 2)], -1)
        self.assertEqual(rank2_term(seeds, (-2, 6)), 3269)

    def test_rank2_table_isolates_target(self):
        """Cada fila de la tabla contiene su objetivo y es resoluble en la rejilla"""
        W = grid_net()
        for target, rows in RANK2_TABLE.items():
            instance = RelationInstance.from_rows(rows)
            self.assertTrue(instance.target_slots(target), target)
            if all(W.has(v) for v in instance.indices):
                self.assertEqual(solve_instance(instance, target, W.get), W.get(target), target)

    def test_rank1_integrality(self):
        """Semillas enteras con W(2) | W(4) dan términos enteros"""
        rng = random.Random(11)
        for _ in range(40):
            w2 = rng.choice([k for k in range(-6, 7) if k])
            seeds = SeedSet(1, self.Q, {(1,): 1, (2,): w2, (3,): rng.randint(-6, 6),
                                        (4,): w2 * rng.randint(-6, 6)})
            engine = PropagationEngine(seeds)
            for m in range(1, 31):
                self.assertTrue(is_integral(engine.term((m,))), (seeds.values, m))

    def test_rank2_integrality(self):
        """Las semillas de la rejilla propagan enteros hasta norma 10"""
        engine = PropagationEngine(self.rank2)
        for v in fill_block(engine, [(-10, 10), (0, 10)]).indices():
            self.assertTrue(is_integral(engine.term(v)), v)

    def test_rank2_integrality_random_seeds(self):
        """Semillas normalizadas con W(1,2) - W(2,1) | W(0,2)·W(2,1) - W(2,0)·W(1,2) dan enteros"""
        rng = random.Random(23)
        for _ in range(30):
            w21 = rng.randint(-4, 4)
            w12 = rng.choice([k for k in range(-4, 5) if k != w21])
            w20 = rng.randint(-4, 4)
            # W(0,2) ≡ W(2,0) módulo W(1,2) - W(2,1) garantiza la divisibilidad
            w02 = w20 + (w12 - w21) * rng.randint(-2, 2)
            values = {(1, 0): 1, (0, 1): 1, (1, 1): 1, (2, 0): w20, (0, 2): w02, (2, 1): w21, (1, 2): w12}
            engine = PropagationEngine(SeedSet(2, self.Q, values))
            self.assertEqual(engine.term((1, -1)), w12 - w21)
            for v in fill_block(engine, [(-8, 8), (0, 8)]).indices():
                self.assertTrue(is_integral(engine.term(v)), (values, v))

    def test_prime_field_propagation(self):
        """La propagación conmuta con la reducción módulo p"""
        F = FieldDescriptor.prime(1009)
        engine = PropagationEngine(SeedSet(2, F, RANK2_SEEDS))
        for v, expected in grid_items():
            self.assertEqual(engine.term(v), F.element(expected), v)

    def test_generic_search(self):
        """La búsqueda acotada encuentra una instancia para W(5)"""
        known = EllipticNet(1, self.Q, RANK1_SEEDS)
        instance = generic_instance_search(known, (5,), 3)
        self.assertEqual(solve_instance(instance, (5,), known.get), 38)
        self.assertIsNone(generic_instance_search(known, (3,), 3))
        with self.assertRaises(SearchExhausted):
            generic_instance_search(known, (9,), 1)

    def test_rank3_agrees_with_curve(self):
        """Propagación de rango 3 y evaluación por la curva coinciden"""
        curve = WeierstrassCurve.from_coefficients(self.Q, CURVE_389)
        ctx = CurveNetContext(curve, [curve.point(*P_389), curve.point(*Q_389), curve.point(*R_389)])
        seeds = SeedSet(3, self.Q, {v: ctx.term(v) for v in baseset(3)})
        engine = PropagationEngine(seeds)
        lifted = rank3_lift(engine)
        self.assertEqual(lifted[(1, 1, 1)], Fraction(5, 6))
        self.assertEqual(lifted[(1, 1, -1)], 6)
        for v in fill_block(engine, [(-4, 4), (-4, 4), (-4, 4)]).indices():
            self.assertEqual(engine.term(v), ctx.term(v), v)
        self.assertEqual(rankn_term(seeds, (3, 1, 2)), ctx.term((3, 1, 2)))

    def test_rank3_lift_from_net(self):
        """Los términos de signo se recuperan de las subredes de rango 2"""
        curve = WeierstrassCurve.from_coefficients(self.Q, CURVE_389)
        ctx = CurveNetContext(curve, [curve.point(*P_389), curve.point(*Q_389), curve.point(*R_389)])
        expected = {v: ctx.term(v) for v in ((1, 1, 1), (-1, 1, 1), (1, -1, 1), (1, 1, -1))}
        for v in baseset(3):
            ctx.term(v)
        lifted = rank3_lift(ctx.net)
        self.assertEqual(lifted, expected)

    def test_rank3_lift_with_dependent_point(self):
        """P3 = P1 + P2: W(1,1,-1) = 0 y W(1,1,1) = -1/6"""
        curve = WeierstrassCurve.from_coefficients(self.Q, CURVE_389)
        P, Qp = curve.point(*P_389), curve.point(*Q_389)
        ctx = CurveNetContext(curve, [P, Qp, curve.add_points(P, Qp)])
        for v in baseset(3):
            ctx.term(v)
        lifted = rank3_lift(ctx.net)
        self.assertEqual(lifted[(1, 1, 1)], Fraction(-1, 6))
        self.assertEqual(lifted[(1, 1, -1)], 0)
        for v, value in lifted.items():
            self.assertEqual(value, ctx.term(v), v)

    def test_rank3_lift_permutation_equivariance(self):
        """Permutar los puntos permuta los términos levantados"""
        curve = WeierstrassCurve.from_coefficients(self.Q, CURVE_389)
        points = [curve.point(*P_389), curve.point(*Q_389), curve.point(*R_389)]

        def lift(pts):
            ctx = CurveNetContext(curve, pts)
            for v in baseset(3):
                ctx.term(v)
            return rank3_lift(ctx.net)

        reference = lift(points)
        for perm in itertools.permutations(range(3)):
            lifted = lift([points[k] for k in perm])
            for v, value in lifted.items():
                u = [0, 0, 0]
                for k in range(3):
                    u[perm[k]] = v[k]
                self.assertEqual(value, reference[tuple(u)], (perm, v))


if __name__ == '__main__':
    unittest.main()
