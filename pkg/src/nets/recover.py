# src/nets/recover.py
# RECUPERACIÓN DE CURVA Y PUNTOS A PARTIR DE UNA RED

import logging
from dataclasses import dataclass, field as dataclass_field
from typing import List, Optional, Tuple

from ..arith.field import FieldElement
from ..curves.weierstrass import CurvePoint, WeierstrassCurve
from ..utils.errors import (CharacteristicTwo, DegenerateNet, InconsistentNet, MissingTerm,
                            NotAppropriate, NotNormalised, RankMismatch, format_index)
from .elliptic_net import EllipticNet, subnet
from .lattice import sup_norm
from .seeds import CurveNetContext
from .transform import is_degenerate, is_normalised, normalize

logger = logging.getLogger(__name__)

NORMAL_FORM = "P1-origin"


def _require(W: EllipticNet, rank: Optional[int] = None):
    if rank is not None and W.rank != rank:
        raise RankMismatch(f"se esperaba rango {rank} y la red tiene rango {W.rank}")
    if not is_normalised(W):
        raise NotNormalised("la red no está normalizada; aplique normalize primero")


def _nonzero(W: EllipticNet, *v: int) -> FieldElement:
    value = W.get(v)
    if value.is_zero():
        raise DegenerateNet(f"W{format_index(v)} = 0", v)
    return value


def recover_rank1(W: EllipticNet) -> Tuple[WeierstrassCurve, CurvePoint]:
    """Curva con P = (0,0), a4 = 1 y a6 = 0 que genera la sucesión"""
    _require(W, 1)
    w2 = _nonzero(W, 2)
    w3 = _nonzero(W, 3)
    w4 = W.get((4,))
    a1 = (w4 + w2 ** 5 - 2 * w2 * w3) / (w2 ** 2 * w3)
    a2 = (w2 * w3 ** 2 + (w4 + w2 ** 5) - w2 * w3) / (w2 ** 3 * w3)
    curve = WeierstrassCurve.from_coefficients(W.field, [a1, a2, w2, 1, 0])
    return curve, curve.point(0, 0)


def recover_rank2(W: EllipticNet) -> Tuple[WeierstrassCurve, CurvePoint, CurvePoint]:
    """P1 = (0,0), P2 = (W(1,2) - W(2,1), 0) y a6 = 0"""
    _require(W, 2)
    w20 = _nonzero(W, 2, 0)
    w02 = _nonzero(W, 0, 2)
    w21, w12 = W.get((2, 1)), W.get((1, 2))
    gap = w21 - w12
    if gap.is_zero():
        raise DegenerateNet("W(2,1) = W(1,2), es decir W(1,-1) = 0", (1, -1))
    curve = WeierstrassCurve.from_coefficients(W.field, [
        (w20 - w02) / gap,
        2 * w21 - w12,
        w20,
        gap * w21,
        0,
    ])
    return curve, curve.point(0, 0), curve.point(-gap, 0)


def recover_rank2_symmetric(W: EllipticNet) -> Tuple[WeierstrassCurve, CurvePoint, CurvePoint]:
    """Variante con P1 = (v,0), P2 = (-v,0); necesita característica distinta de 2"""
    _require(W, 2)
    if W.field.characteristic == 2:
        raise CharacteristicTwo("las fórmulas simétricas dividen por 2")
    w20 = _nonzero(W, 2, 0)
    w02 = _nonzero(W, 0, 2)
    w21, w12 = W.get((2, 1)), W.get((1, 2))
    gap = w21 - w12
    if gap.is_zero():
        raise DegenerateNet("W(2,1) = W(1,2), es decir W(1,-1) = 0", (1, -1))
    v = gap / 2
    curve = WeierstrassCurve.from_coefficients(W.field, [
        (w20 - w02) / gap,
        (w21 + w12) / 2,
        (w20 + w02) / 2,
        -(gap * gap) / 4,
        -(gap * gap) * (w21 + w12) / 8,
    ])
    return curve, curve.point(v, 0), curve.point(-v, 0)


def _shear_onto(source: WeierstrassCurve, target: WeierstrassCurve):
    """Cambio (0, s, 0) que lleva source a target, ambas con P1 = (0,0) y a6 = 0"""
    if source.a3 != target.a3 or source.a3.is_zero():
        return None
    s = (source.a4 - target.a4) / source.a3
    image, point_map = source.unihomothetic_transform(0, s, 0)
    if image != target:
        return None
    return point_map


def recover_rankn(W: EllipticNet) -> Tuple[WeierstrassCurve, Tuple[CurvePoint, ...]]:
    """Pega las recuperaciones de rango 2 de los pares {1, j} sobre una misma curva"""
    if W.rank < 3:
        raise RankMismatch("recover_rankn necesita rango ≥ 3")
    _require(W)
    degenerate, reason = is_degenerate(W)
    if degenerate:
        raise DegenerateNet(reason)
    curve, P1, P2 = recover_rank2(subnet(W, [0, 1]))
    points: List[CurvePoint] = [P1, P2]
    for j in range(2, W.rank):
        pair_curve, _, Pj = recover_rank2(subnet(W, [0, j]))
        point_map = _shear_onto(pair_curve, curve)
        if point_map is None:
            raise InconsistentNet(f"los pares {{1,2}} y {{1,{j + 1}}} dan curvas no equivalentes")
        points.append(point_map(Pj))
    try:
        ctx = CurveNetContext(curve, points)
    except NotAppropriate as exc:
        raise DegenerateNet(f"puntos recuperados no apropiados: {exc.reason}")
    for v, x in W.items():
        if sup_norm(v) <= 2 and ctx.term(v) != x:
            raise InconsistentNet(f"W{format_index(v)} no coincide con la curva recuperada")
    logger.info("recuperados %d puntos sobre %s", len(points), curve)
    return curve, tuple(points)


def recover(W: EllipticNet) -> Tuple[WeierstrassCurve, Tuple[CurvePoint, ...]]:
    if W.rank == 1:
        curve, P = recover_rank1(W)
        return curve, (P,)
    if W.rank == 2:
        curve, P1, P2 = recover_rank2(W)
        return curve, (P1, P2)
    return recover_rankn(W)


@dataclass
class Classification:
    degenerate: bool
    reason: Optional[str] = None
    singular: Optional[bool] = None
    discriminant: Optional[FieldElement] = None
    j_invariant: Optional[FieldElement] = None
    curve: Optional[WeierstrassCurve] = None
    points: Tuple[CurvePoint, ...] = dataclass_field(default_factory=tuple)


INSUFFICIENT_DATA = "datos insuficientes"


def _insufficient(exc: Exception) -> Classification:
    reason = f"{INSUFFICIENT_DATA}: {exc}"
    logger.info("clasificación incompleta: %s", reason)
    return Classification(degenerate=False, reason=reason)


def classify(W: EllipticNet) -> Classification:
    """Degeneración, singularidad, Δ y j de la curva asociada a la normalización.

    No lanza errores de dominio: si faltan términos o la red no es coherente
    con una sola curva, singular queda en None y reason empieza por
    INSUFFICIENT_DATA.
    """
    try:
        degenerate, reason = is_degenerate(W)
    except MissingTerm as exc:
        return _insufficient(exc)
    if degenerate:
        logger.info("red degenerada: %s", reason)
        return Classification(degenerate=True, reason=reason)
    try:
        normalised, _ = normalize(W)
        curve, points = recover(normalised)
    except DegenerateNet as exc:
        return Classification(degenerate=True, reason=str(exc))
    except (MissingTerm, InconsistentNet) as exc:
        return _insufficient(exc)
    discriminant = curve.discriminant()
    singular = discriminant.is_zero()
    return Classification(
        degenerate=False,
        singular=singular,
        discriminant=discriminant,
        j_invariant=None if singular else curve.j_invariant(),
        curve=curve,
        points=points,
    )
