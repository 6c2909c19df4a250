# src/nets/transform.py
# Escalados por formas cuadráticas, normalización, homotecias y degeneración

import itertools
import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Dict, Optional, Sequence, Tuple

from ..arith.field import FieldDescriptor, FieldElement, Scalar
from ..utils.errors import (DegenerateNet, DivisionByZero, InsufficientOverlap, MixedFields,
                            RankMismatch, format_index)
from .elliptic_net import EllipticNet
from .lattice import NetIndex, add, unit

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def _pairs(rank: int):
    return [(i, j) for i in range(rank) for j in range(i, rank)]


@dataclass(frozen=True)
class QuadraticFormScaling:
    """f(v) = ∏_{i≤j} A_ij^(v_i·v_j) con coeficientes no nulos (índices base 0)"""
    rank: int
    coefficients: Dict[Pair, FieldElement] = dataclass_field(default_factory=dict)

    def __post_init__(self):
        missing = [pair for pair in _pairs(self.rank) if pair not in self.coefficients]
        if missing:
            raise ValueError(f"faltan coeficientes {missing}")
        for pair, value in self.coefficients.items():
            if value.is_zero():
                raise DivisionByZero(f"A_{pair[0] + 1}{pair[1] + 1} = 0")

    @classmethod
    def identity(cls, rank: int, field: FieldDescriptor) -> "QuadraticFormScaling":
        return cls(rank, {pair: field.one for pair in _pairs(rank)})

    @classmethod
    def from_values(cls, rank: int, field: FieldDescriptor, values: Dict[Pair, Scalar]) -> "QuadraticFormScaling":
        return cls(rank, {pair: field.element(x) for pair, x in values.items()})

    @property
    def field(self) -> FieldDescriptor:
        return next(iter(self.coefficients.values())).descriptor

    def __call__(self, v: Sequence[int]) -> FieldElement:
        result = self.field.one
        for (i, j), a in self.coefficients.items():
            exponent = v[i] * v[j]
            if exponent:
                result = result * a ** exponent
        return result

    def compose(self, other: "QuadraticFormScaling") -> "QuadraticFormScaling":
        if other.rank != self.rank:
            raise RankMismatch("formas de rangos distintos")
        return QuadraticFormScaling(self.rank, {
            pair: a * other.coefficients[pair] for pair, a in self.coefficients.items()})

    def inverse(self) -> "QuadraticFormScaling":
        return QuadraticFormScaling(self.rank, {pair: a.inverse() for pair, a in self.coefficients.items()})

    def is_identity(self) -> bool:
        return all(a == 1 for a in self.coefficients.values())


def apply_scaling(W: EllipticNet, f: QuadraticFormScaling) -> EllipticNet:
    """W^f(v) = f(v)·W(v)"""
    if f.rank != W.rank:
        raise RankMismatch(f"forma de rango {f.rank} sobre una red de rango {W.rank}")
    if f.field != W.field:
        raise MixedFields(f"{f.field.label} frente a {W.field.label}")
    return W.map_values(lambda v, x: f(v) * x, provenance={'scaled_from': W.provenance})


def scale_constant(W: EllipticNet, c: Scalar) -> EllipticNet:
    c = W.field.element(c)
    if c.is_zero():
        raise DivisionByZero("constante nula")
    return W.map_values(lambda v, x: c * x, provenance={'scaled_from': W.provenance})


def _unit_pair(rank: int, i: int, j: int) -> NetIndex:
    return add(unit(rank, i), unit(rank, j))


def normalize(W: EllipticNet) -> Tuple[EllipticNet, QuadraticFormScaling]:
    """Única escala con W(e_i) = W(e_i + e_j) = 1, junto con la forma usada"""
    units = [W.get(unit(W.rank, i)) for i in range(W.rank)]
    coefficients: Dict[Pair, FieldElement] = {}
    for i, value in enumerate(units):
        if value.is_zero():
            raise DegenerateNet(f"W{format_index(unit(W.rank, i))} = 0", unit(W.rank, i))
        coefficients[(i, i)] = value.inverse()
    for i, j in itertools.combinations(range(W.rank), 2):
        v = _unit_pair(W.rank, i, j)
        value = W.get(v)
        if value.is_zero():
            raise DegenerateNet(f"W{format_index(v)} = 0", v)
        coefficients[(i, j)] = units[i] * units[j] / value
    f = QuadraticFormScaling(W.rank, coefficients)
    return apply_scaling(W, f), f


def is_normalised(W: EllipticNet) -> bool:
    checks = [unit(W.rank, i) for i in range(W.rank)]
    checks += [_unit_pair(W.rank, i, j) for i, j in itertools.combinations(range(W.rank), 2)]
    return all(W.get(v) == 1 for v in checks)


def homothety_exponent(v: Sequence[int]) -> int:
    """g(v) = -1 + Σ v_i² - Σ_{i<j} v_i·v_j"""
    cross = sum(v[i] * v[j] for i, j in itertools.combinations(range(len(v)), 2))
    return -1 + sum(c * c for c in v) - cross


def homothety(W: EllipticNet, lam: Scalar) -> EllipticNet:
    """W^λ(v) = λ^g(v)·W(v)"""
    lam = W.field.element(lam)
    if lam.is_zero():
        raise DivisionByZero("λ = 0 en la homotecia")
    return W.map_values(lambda v, x: lam ** homothety_exponent(v) * x,
                        provenance={'homothety': str(lam), 'source': W.provenance})


def degeneracy_terms(rank: int):
    """Términos cuya anulación hace degenerada una red de rango dado, en orden de comprobación"""
    terms = [unit(rank, i) for i in range(rank)]
    terms += [unit(rank, i, 2) for i in range(rank)]
    for i, j in itertools.combinations(range(rank), 2):
        terms.append(_unit_pair(rank, i, j))
        terms.append(tuple(a - b for a, b in zip(unit(rank, i), unit(rank, j))))
    if rank == 1:
        terms.append((3,))
    return terms


def is_degenerate(W: EllipticNet) -> Tuple[bool, Optional[str]]:
    for v in degeneracy_terms(W.rank):
        if W.get(v).is_zero():
            return True, f"W{format_index(v)} = 0"
    return False, None


def are_scale_equivalent(W1: EllipticNet, W2: EllipticNet) -> Optional[QuadraticFormScaling]:
    """Forma f con W2 = W1^f si las normalizaciones coinciden en los índices comunes"""
    if W1.rank != W2.rank:
        raise RankMismatch(f"rangos {W1.rank} y {W2.rank}")
    if W1.field != W2.field:
        raise MixedFields(f"{W1.field.label} frente a {W2.field.label}")
    rank = W1.rank
    units = [unit(rank, i) for i in range(rank)]
    units += [_unit_pair(rank, i, j) for i, j in itertools.combinations(range(rank), 2)]
    for v in units:
        if not (W1.has(v) and W2.has(v)):
            raise InsufficientOverlap(f"W{format_index(v)} no está en ambas redes")
    for W in (W1, W2):
        degenerate, reason = is_degenerate(W)
        if degenerate:
            raise DegenerateNet(reason)
    N1, f1 = normalize(W1)
    N2, f2 = normalize(W2)
    shared = set(W1.indices()) & set(W2.indices())
    for v in sorted(shared):
        if N1.get(v) != N2.get(v):
            logger.debug("normalizaciones distintas en %s", format_index(v))
            return None
    return f1.compose(f2.inverse())
