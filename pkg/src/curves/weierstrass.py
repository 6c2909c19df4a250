# src/curves/weierstrass.py
# Cúbicas de Weierstrass generales y ley de grupo en el lugar no singular

import logging
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..arith.field import FieldDescriptor, FieldElement, Scalar
from ..utils.errors import (DivisionByZero, MixedFields, PointNotOnCurve,
                            SingularCurve, SingularPointOnCurve)

logger = logging.getLogger(__name__)

PointMap = Callable[["CurvePoint"], "CurvePoint"]

# Motivos de no apropiación, en el orden en que se comprueban
REASON_IDENTITY = "P_i = 0"
REASON_TWO_TORSION = "[2]P_i = 0"
REASON_COLLISION = "P_i = ±P_j"
REASON_THREE_TORSION = "[3]P_1 = 0"


@dataclass(frozen=True)
class CurvePoint:
    """Punto afín (x, y) o el punto del infinito (x = y = None)"""
    x: Optional[FieldElement] = None
    y: Optional[FieldElement] = None

    @classmethod
    def infinity(cls) -> "CurvePoint":
        return INFINITY

    @classmethod
    def affine(cls, x: FieldElement, y: FieldElement) -> "CurvePoint":
        if x.descriptor != y.descriptor:
            raise MixedFields("coordenadas de cuerpos distintos")
        return cls(x, y)

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self) -> str:
        if self.is_infinity:
            return "inf"
        return f"({self.x}, {self.y})"


INFINITY = CurvePoint()


@dataclass(frozen=True)
class WeierstrassCurve:
    """y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6"""
    a1: FieldElement
    a2: FieldElement
    a3: FieldElement
    a4: FieldElement
    a6: FieldElement

    def __post_init__(self):
        descriptors = {a.descriptor for a in self.coefficients}
        if len(descriptors) != 1:
            raise MixedFields("los coeficientes no comparten cuerpo")

    @classmethod
    def from_coefficients(cls, field: FieldDescriptor, coefficients: Sequence[Scalar]) -> "WeierstrassCurve":
        if len(coefficients) != 5:
            raise ValueError("se esperan cinco coeficientes a1, a2, a3, a4, a6")
        return cls(*(field.element(c) for c in coefficients))

    @property
    def coefficients(self) -> Tuple[FieldElement, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def field(self) -> FieldDescriptor:
        return self.a1.descriptor

    # ========== INVARIANTES ==========

    def b_invariants(self) -> Tuple[FieldElement, FieldElement, FieldElement, FieldElement]:
        a1, a2, a3, a4, a6 = self.coefficients
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    def c4(self) -> FieldElement:
        b2, b4, _, _ = self.b_invariants()
        return b2 * b2 - 24 * b4

    def discriminant(self) -> FieldElement:
        b2, b4, b6, b8 = self.b_invariants()
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def j_invariant(self) -> FieldElement:
        delta = self.discriminant()
        if delta.is_zero():
            raise SingularCurve("j no está definido: Δ = 0")
        return self.c4() ** 3 / delta

    def is_singular(self) -> bool:
        return self.discriminant().is_zero()

    # ========== PUNTOS ==========

    def point(self, x: Scalar, y: Scalar) -> CurvePoint:
        """Construye un punto afín y comprueba que esté en la curva"""
        P = CurvePoint.affine(self.field.element(x), self.field.element(y))
        if not self.is_on_curve(P):
            raise PointNotOnCurve(f"{P} no satisface la ecuación de la curva")
        return P

    def evaluate(self, x: FieldElement, y: FieldElement) -> FieldElement:
        a1, a2, a3, a4, a6 = self.coefficients
        return y * y + a1 * x * y + a3 * y - x ** 3 - a2 * x * x - a4 * x - a6

    def partials(self, P: CurvePoint) -> Tuple[FieldElement, FieldElement]:
        a1, a2, a3, a4, _ = self.coefficients
        x, y = P.x, P.y
        fx = a1 * y - 3 * x * x - 2 * a2 * x - a4
        fy = 2 * y + a1 * x + a3
        return fx, fy

    def is_on_curve(self, P: CurvePoint) -> bool:
        if P.is_infinity:
            return True
        if P.x.descriptor != self.field:
            raise MixedFields("punto y curva en cuerpos distintos")
        return self.evaluate(P.x, P.y).is_zero()

    def is_nonsingular_point(self, P: CurvePoint) -> bool:
        if P.is_infinity:
            return True
        fx, fy = self.partials(P)
        return not (fx.is_zero() and fy.is_zero())

    def _require_group_operand(self, P: CurvePoint):
        if not self.is_on_curve(P):
            raise PointNotOnCurve(f"{P} no está en la curva")
        if not self.is_nonsingular_point(P):
            raise SingularPointOnCurve(f"{P} es un punto singular")

    # ========== LEY DE GRUPO ==========

    def negate_point(self, P: CurvePoint) -> CurvePoint:
        if P.is_infinity:
            return P
        return CurvePoint(P.x, -P.y - self.a1 * P.x - self.a3)

    def _add(self, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        a1, a2, a3, a4, a6 = self.coefficients
        x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
        if x1 == x2:
            # P = -Q, o duplicación
            if (y1 + y2 + a1 * x2 + a3).is_zero():
                return INFINITY
            denominator = 2 * y1 + a1 * x1 + a3
            slope = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / denominator
            intercept = (-x1 ** 3 + a4 * x1 + 2 * a6 - a3 * y1) / denominator
        else:
            slope = (y2 - y1) / (x2 - x1)
            intercept = (y1 * x2 - y2 * x1) / (x2 - x1)
        x3 = slope * slope + a1 * slope - a2 - x1 - x2
        y3 = -(slope + a1) * x3 - intercept - a3
        return CurvePoint(x3, y3)

    def add_points(self, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
        self._require_group_operand(P)
        self._require_group_operand(Q)
        return self._add(P, Q)

    def _scalar_mul(self, m: int, P: CurvePoint) -> CurvePoint:
        if m < 0:
            return self._scalar_mul(-m, self.negate_point(P))
        result = INFINITY
        addend = P
        while m:
            if m & 1:
                result = self._add(result, addend)
            addend = self._add(addend, addend)
            m >>= 1
        return result

    def scalar_mul(self, m: int, P: CurvePoint) -> CurvePoint:
        """[m]P por duplicación y suma"""
        self._require_group_operand(P)
        return self._scalar_mul(m, P)

    def linear_combination(self, v: Sequence[int], points: Sequence[CurvePoint]) -> CurvePoint:
        if len(v) != len(points):
            raise ValueError("el vector y la tupla de puntos difieren en longitud")
        for P in points:
            self._require_group_operand(P)
        total = INFINITY
        for coefficient, P in zip(v, points):
            if coefficient:
                total = self._add(total, self._scalar_mul(int(coefficient), P))
        return total

    def point_order(self, P: CurvePoint, bound: int) -> Optional[int]:
        """Orden de P por sumas repetidas; None si supera la cota"""
        self._require_group_operand(P)
        current = P
        for k in range(1, bound + 1):
            if current.is_infinity:
                return k
            current = self._add(current, P)
        return None

    # ========== PUNTOS APROPIADOS ==========

    def is_appropriate(self, points: Sequence[CurvePoint]) -> Tuple[bool, Optional[str]]:
        """Comprueba las condiciones de admisibilidad; devuelve el primer motivo violado"""
        for P in points:
            self._require_group_operand(P)
        for i, P in enumerate(points):
            if P.is_infinity:
                logger.debug("P_%d es el punto del infinito", i + 1)
                return False, REASON_IDENTITY
            if self._add(P, P).is_infinity:
                logger.debug("P_%d es de 2-torsión", i + 1)
                return False, REASON_TWO_TORSION
        for i in range(len(points)):
            for j in range(i + 1, len(points)):
                if points[i].x == points[j].x:
                    logger.debug("P_%d = ±P_%d", i + 1, j + 1)
                    return False, REASON_COLLISION
        if len(points) == 1 and self._scalar_mul(3, points[0]).is_infinity:
            return False, REASON_THREE_TORSION
        return True, None

    # ========== CAMBIOS DE COORDENADAS ==========

    def unihomothetic_transform(self, r: Scalar, s: Scalar, t: Scalar) -> Tuple["WeierstrassCurve", PointMap]:
        """Curva obtenida al sustituir x por x + r e y por y + s·x + t"""
        r, s, t = (self.field.element(c) for c in (r, s, t))
        a1, a2, a3, a4, a6 = self.coefficients
        transformed = WeierstrassCurve(
            a1 + 2 * s,
            a2 - s * a1 + 3 * r - s * s,
            a3 + r * a1 + 2 * t,
            a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t,
            a6 + r * a4 + r * r * a2 + r ** 3 - t * a3 - t * t - r * t * a1,
        )

        def point_map(P: CurvePoint) -> CurvePoint:
            if P.is_infinity:
                return P
            x = P.x - r
            return CurvePoint(x, P.y - s * x - t)

        return transformed, point_map

    def homothety_transform(self, lam: Scalar) -> Tuple["WeierstrassCurve", PointMap]:
        """C_λ con (x, y) ↦ (λ²x, λ³y)"""
        lam = self.field.element(lam)
        if lam.is_zero():
            raise DivisionByZero("λ = 0 en la homotecia")
        a1, a2, a3, a4, a6 = self.coefficients
        transformed = WeierstrassCurve(lam * a1, lam ** 2 * a2, lam ** 3 * a3, lam ** 4 * a4, lam ** 6 * a6)

        def point_map(P: CurvePoint) -> CurvePoint:
            if P.is_infinity:
                return P
            return CurvePoint(lam ** 2 * P.x, lam ** 3 * P.y)

        return transformed, point_map

    def transport_points(self, points: Sequence[CurvePoint], T: Union[np.ndarray, Sequence[Sequence[int]]]) -> List[CurvePoint]:
        """Q_j = Σ_i T_ij·P_i para una matriz entera n×m"""
        matrix = np.asarray(T, dtype=object)
        if matrix.ndim != 2 or matrix.shape[0] != len(points):
            raise ValueError("la matriz debe tener una fila por punto")
        return [self.linear_combination(list(matrix[:, j]), points) for j in range(matrix.shape[1])]

    def __str__(self) -> str:
        return "[" + ", ".join(str(a) for a in self.coefficients) + "]"


def _shear_candidates(source: WeierstrassCurve, target: WeierstrassCurve, r: FieldElement,
                      source_points: Sequence[CurvePoint], target_points: Sequence[CurvePoint]) -> Iterable[FieldElement]:
    field = source.field
    # Dos puntos con x distinta fijan s sin dividir por 2
    for i in range(len(source_points)):
        for j in range(i + 1, len(source_points)):
            Pi, Pj, Qi, Qj = source_points[i], source_points[j], target_points[i], target_points[j]
            if any(P.is_infinity for P in (Pi, Pj, Qi, Qj)) or Qi.x == Qj.x:
                continue
            yield ((Pi.y - Qi.y) - (Pj.y - Qj.y)) / (Qi.x - Qj.x)
            return
    if field.characteristic != 2:
        yield (target.a1 - source.a1) / 2
        return
    for s in range(field.modulus):
        yield field.element(s)


def find_unihomothety(source: WeierstrassCurve, source_points: Sequence[CurvePoint],
                      target: WeierstrassCurve, target_points: Sequence[CurvePoint]) -> Optional[Tuple[FieldElement, FieldElement, FieldElement]]:
    """Busca (r, s, t) que lleve (source, puntos) a (target, puntos); None si no existe"""
    if source.field != target.field or len(source_points) != len(target_points) or not source_points:
        return None
    P1, Q1 = source_points[0], target_points[0]
    if P1.is_infinity or Q1.is_infinity:
        return None
    r = P1.x - Q1.x
    for s in _shear_candidates(source, target, r, source_points, target_points):
        t = P1.y - Q1.y - s * Q1.x
        candidate, point_map = source.unihomothetic_transform(r, s, t)
        if candidate != target:
            continue
        if all(point_map(P) == Q for P, Q in zip(source_points, target_points)):
            return r, s, t
    return None
