# src/nets/seeds.py
# EVALUACIÓN DE REDES A PARTIR DE UNA CURVA Y SUS PUNTOS

import itertools
import logging
from typing import Dict, Optional, Sequence

from ..arith.field import FieldElement
from ..config.settings import Config
from ..curves.weierstrass import CurvePoint, WeierstrassCurve
from ..utils.errors import (DegenerateSeeds, NoUsableDirection, NotAppropriate, RankMismatch,
                            SearchExhausted, SeedLiftFailure)
from .elliptic_net import EllipticNet, Range, block_indices
from .lattice import NetIndex, RelationInstance, as_index, canonical, sign, sub, sup_norm, support, unit
from .propagate import (OPTIONAL_SEEDS, RANK2_TABLE, PropagationEngine, SeedSet, baseset,
                        embed_rows, generic_instance_search, solve_instance, unit_vector_rows)

logger = logging.getLogger(__name__)


# ========== FÓRMULAS EXPLÍCITAS ==========

def division_values(curve: WeierstrassCurve, P: CurvePoint) -> Dict[int, FieldElement]:
    """Ω_1..Ω_4 evaluados en P"""
    b2, b4, b6, b8 = curve.b_invariants()
    x, y = P.x, P.y
    omega2 = 2 * y + curve.a1 * x + curve.a3
    omega3 = 3 * x ** 4 + b2 * x ** 3 + 3 * b4 * x ** 2 + 3 * b6 * x + b8
    omega4 = omega2 * (2 * x ** 6 + b2 * x ** 5 + 5 * b4 * x ** 4 + 10 * b6 * x ** 3 + 10 * b8 * x ** 2
                       + (b2 * b8 - b4 * b6) * x + b4 * b8 - b6 * b6)
    return {1: curve.field.one, 2: omega2, 3: omega3, 4: omega4}


def pair_values(curve: WeierstrassCurve, P: CurvePoint, Q: CurvePoint) -> Dict[NetIndex, FieldElement]:
    """Valores de rango 2 en (1,0),(0,1),(1,1),(1,-1),(2,0),(0,2),(2,1),(1,2),(2,-1),(2,2)"""
    one = curve.field.one
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    slope = (y2 - y1) / (x2 - x1)
    common = slope * slope + curve.a1 * slope - curve.a2
    Y = y1 + y2 + curve.a1 * x2 + curve.a3
    values = {
        (1, 0): one,
        (0, 1): one,
        (1, 1): one,
        (1, -1): x2 - x1,
        (2, 0): division_values(curve, P)[2],
        (0, 2): division_values(curve, Q)[2],
        (2, 1): 2 * x1 + x2 - common,
        (1, 2): x1 + 2 * x2 - common,
        (2, -1): Y * Y - curve.a1 * Y * (x2 - x1) - (2 * x1 + x2 + curve.a2) * (x1 - x2) ** 2,
    }

    def lookup(v: NetIndex) -> FieldElement:
        orientation, key = canonical(v)
        if orientation == 0:
            return curve.field.zero
        return values[key] if orientation > 0 else -values[key]

    values[(2, 2)] = solve_instance(RelationInstance.from_rows(RANK2_TABLE[(2, 2)]), (2, 2), lookup)
    return values


def triple_values(curve: WeierstrassCurve, P1: CurvePoint, P2: CurvePoint, P3: CurvePoint) -> Dict[NetIndex, FieldElement]:
    """Términos (1,1,1), (-1,1,1), (1,-1,1), (1,1,-1)"""
    x1, y1, x2, y2, x3, y3 = P1.x, P1.y, P2.x, P2.y, P3.x, P3.y
    t1, t2, t3 = y1 * (x2 - x3), y2 * (x3 - x1), y3 * (x1 - x2)
    a1, a3 = curve.a1, curve.a3
    return {
        (1, 1, 1): (t1 + t2 + t3) / ((x1 - x2) * (x1 - x3) * (x2 - x3)),
        (-1, 1, 1): (t1 - t2 - t3) / (x2 - x3) + a1 * x1 + a3,
        (1, -1, 1): (-t1 + t2 - t3) / (x3 - x1) + a1 * x2 + a3,
        (1, 1, -1): (-t1 - t2 + t3) / (x1 - x2) + a1 * x3 + a3,
    }


# ========== CONTEXTO ==========

class CurveNetContext:
    """Curva con n puntos apropiados; calcula W_{C,P}(v) con caché de combinaciones"""

    def __init__(self, curve: WeierstrassCurve, points: Sequence[CurvePoint]):
        points = tuple(points)
        if not points:
            raise RankMismatch("se necesita al menos un punto")
        appropriate, reason = curve.is_appropriate(points)
        if not appropriate:
            raise NotAppropriate(reason)
        self.curve = curve
        self.points = points
        self.rank = len(points)
        self.field = curve.field
        self.b_invariants = curve.b_invariants()
        self._combinations: Dict[NetIndex, CurvePoint] = {}
        self._axis_engines: Dict[int, PropagationEngine] = {}
        self._fallback: Optional[PropagationEngine] = None
        self.net = EllipticNet(self.rank, self.field, provenance={
            'curve': [str(a) for a in curve.coefficients],
            'points': [str(P) for P in points],
        })
        self._install_explicit_terms()

    def _embed(self, local: NetIndex, coords: Sequence[int]) -> NetIndex:
        full = [0] * self.rank
        for c, e in zip(coords, local):
            full[c] = e
        return tuple(full)

    def _install_explicit_terms(self):
        for i, P in enumerate(self.points):
            for k, value in division_values(self.curve, P).items():
                self.net.set(unit(self.rank, i, k), value)
        for coords in itertools.combinations(range(self.rank), 2):
            values = pair_values(self.curve, *(self.points[c] for c in coords))
            for local, value in values.items():
                self.net.set(self._embed(local, coords), value)
        for coords in itertools.combinations(range(self.rank), 3):
            values = triple_values(self.curve, *(self.points[c] for c in coords))
            for local, value in values.items():
                self.net.set(self._embed(local, coords), value)

    def combination(self, v: Sequence[int]) -> CurvePoint:
        orientation, key = canonical(as_index(v))
        if key not in self._combinations:
            self._combinations[key] = self.curve.linear_combination(key, self.points)
        point = self._combinations[key]
        return point if orientation >= 0 else self.curve.negate_point(point)

    def term(self, v: Sequence[int]) -> FieldElement:
        index = as_index(v)
        if len(index) != self.rank:
            raise RankMismatch(f"índice {index} en un contexto de rango {self.rank}")
        orientation, key = canonical(index)
        if orientation == 0:
            return self.field.zero
        if not self.net.has(key):
            self.net.set(key, self._compute(key))
        return self.net.get(index)

    def _axis_engine(self, i: int) -> PropagationEngine:
        if i not in self._axis_engines:
            values = division_values(self.curve, self.points[i])
            self._axis_engines[i] = PropagationEngine(SeedSet(1, self.field, {(k,): x for k, x in values.items()}))
        return self._axis_engines[i]

    def _compute(self, key: NetIndex) -> FieldElement:
        if self.combination(key).is_infinity:
            return self.field.zero
        coords = support(key)
        if len(coords) == 1:
            return self._axis_engine(coords[0]).term((key[coords[0]],))
        if sup_norm(key) == 1:
            return self._lift_unit_vector(key, coords)
        for i in sorted((c for c in coords if abs(key[c]) >= 2), key=lambda c: (-abs(key[c]), c)):
            d = unit(self.rank, i, sign(key[i]))
            u = sub(key, d)
            if self.combination(u).is_infinity or self.term(sub(u, d)).is_zero():
                continue
            self.term(u)
            break
        try:
            return eval_term_curve_backed(self, key, self.net)
        except NoUsableDirection:
            logger.info("W%s sin dirección útil; se propaga desde semillas", key)
            return self._fallback_engine().term(key)

    def _lift_unit_vector(self, key: NetIndex, coords: Sequence[int]) -> FieldElement:
        rows = unit_vector_rows([key[c] for c in coords])
        try:
            return solve_instance(embed_rows(rows, self.rank, coords), key, self.term)
        except DegenerateSeeds:
            logger.debug("plantilla degenerada para W%s; búsqueda acotada", key)
        try:
            instance = generic_instance_search(self.net, key, Config.SEED_LIFT_BOUND)
        except SearchExhausted:
            raise SeedLiftFailure(key)
        return solve_instance(instance, key, self.net.get)

    def _fallback_engine(self) -> PropagationEngine:
        if self._fallback is None:
            wanted = baseset(self.rank) + OPTIONAL_SEEDS.get(self.rank, [])
            seeds = SeedSet(self.rank, self.field, {v: self.term(v) for v in wanted})
            self._fallback = PropagationEngine(seeds)
        return self._fallback


# ========== OPERACIONES ==========

def seed_rank1(ctx: CurveNetContext) -> Dict[NetIndex, FieldElement]:
    if ctx.rank != 1:
        raise RankMismatch("seed_rank1 necesita un único punto")
    return {(k,): x for k, x in division_values(ctx.curve, ctx.points[0]).items()}


def seed_rank2(ctx: CurveNetContext) -> Dict[NetIndex, FieldElement]:
    if ctx.rank != 2:
        raise RankMismatch("seed_rank2 necesita dos puntos")
    return pair_values(ctx.curve, *ctx.points)


def seed_rank3(ctx: CurveNetContext) -> Dict[NetIndex, FieldElement]:
    if ctx.rank != 3:
        raise RankMismatch("seed_rank3 necesita tres puntos")
    values: Dict[NetIndex, FieldElement] = {}
    for i in range(3):
        values[unit(3, i)] = ctx.field.one
    for i, j in itertools.combinations(range(3), 2):
        Pi, Pj = ctx.points[i], ctx.points[j]
        e_i, e_j = unit(3, i), unit(3, j)
        values[tuple(a + b for a, b in zip(e_i, e_j))] = ctx.field.one
        values[sub(e_i, e_j)] = Pj.x - Pi.x
    values.update(triple_values(ctx.curve, *ctx.points))
    return values


def eval_term_curve_backed(ctx: CurveNetContext, v: Sequence[int], W: Optional[EllipticNet] = None) -> FieldElement:
    """W(u+d) = W(u)²·W(d)²·(x(d·P) - x(u·P)) / W(u-d) para una dirección d = ±e_i"""
    W = ctx.net if W is None else W
    v = as_index(v)
    if ctx.combination(v).is_infinity:
        W.set(v, 0)
        return ctx.field.zero
    for i in sorted(support(v), key=lambda c: (-abs(v[c]), c)):
        d = unit(ctx.rank, i, sign(v[i]))
        u = sub(v, d)
        back = sub(u, d)
        if not (W.has(u) and W.has(back)) or W.get(back).is_zero():
            continue
        U = ctx.combination(u)
        if U.is_infinity:
            continue
        value = W.get(u) ** 2 * W.get(d) ** 2 * (ctx.points[i].x - U.x) / W.get(back)
        W.set(v, value)
        return value
    raise NoUsableDirection(v)


def net_from_curve(ctx: CurveNetContext, ranges: Sequence[Range]) -> EllipticNet:
    """Red W_{C,P} restringida al bloque dado"""
    ranges = [tuple(r) for r in ranges]
    if len(ranges) != ctx.rank:
        raise RankMismatch(f"{len(ranges)} rangos para {ctx.rank} puntos")
    indices = block_indices(ranges)
    for v in sorted(indices, key=lambda v: sum(abs(c) for c in v)):
        ctx.term(v)
    W = EllipticNet(ctx.rank, ctx.field, provenance=dict(ctx.net.provenance, ranges=ranges))
    for v in indices:
        W.set(v, ctx.term(v))
    logger.info("red de rango %d calculada en %d índices", ctx.rank, len(indices))
    return W
