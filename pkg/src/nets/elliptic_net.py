# src/nets/elliptic_net.py
# Modelo de datos de una red elíptica: almacenamiento disperso por representante de signo

import itertools
import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..arith.field import FieldDescriptor, FieldElement, Scalar
from ..utils.errors import MissingTerm, MixedFields, RankMismatch
from .lattice import NetIndex, as_index, canonical, is_zero

logger = logging.getLogger(__name__)

Range = Tuple[int, int]


class EllipticNet:
    """Red W: Z^n → K guardada solo en índices canónicos; W(-v) = -W(v) y W(0) = 0"""

    def __init__(self, rank: int, field: FieldDescriptor,
                 values: Optional[Dict[Sequence[int], Scalar]] = None,
                 provenance: Optional[Dict[str, Any]] = None):
        if rank < 1:
            raise RankMismatch(f"rango inválido: {rank}")
        self.rank = rank
        self.field = field
        self.provenance = provenance
        self._values: Dict[NetIndex, FieldElement] = {}
        self._frozen = False
        for v, x in (values or {}).items():
            self.set(v, x)

    def _check(self, v: Sequence[int]) -> NetIndex:
        index = as_index(v)
        if len(index) != self.rank:
            raise RankMismatch(f"índice {index} en una red de rango {self.rank}")
        return index

    def get(self, v: Sequence[int]) -> FieldElement:
        sign, key = canonical(self._check(v))
        if sign == 0:
            return self.field.zero
        value = self._values.get(key)
        if value is None:
            raise MissingTerm(v)
        return value if sign > 0 else -value

    def set(self, v: Sequence[int], x: Scalar):
        if self._frozen:
            raise RuntimeError("la red está congelada")
        sign, key = canonical(self._check(v))
        x = self.field.element(x)
        if sign == 0:
            if not x.is_zero():
                raise ValueError("W(0) debe ser 0")
            return
        self._values[key] = x if sign > 0 else -x

    def has(self, v: Sequence[int]) -> bool:
        index = self._check(v)
        if is_zero(index):
            return True
        return canonical(index)[1] in self._values

    def __contains__(self, v) -> bool:
        return self.has(v)

    def __len__(self) -> int:
        return len(self._values)

    def items(self) -> Iterator[Tuple[NetIndex, FieldElement]]:
        return iter(sorted(self._values.items()))

    def indices(self) -> List[NetIndex]:
        return sorted(self._values)

    def freeze(self) -> "EllipticNet":
        self._frozen = True
        return self

    @property
    def frozen(self) -> bool:
        return self._frozen

    def copy(self, provenance: Optional[Dict[str, Any]] = None) -> "EllipticNet":
        twin = EllipticNet(self.rank, self.field, provenance=provenance or self.provenance)
        twin._values = dict(self._values)
        return twin

    def map_values(self, fn, provenance: Optional[Dict[str, Any]] = None) -> "EllipticNet":
        """Nueva red con fn(v, W(v)) en cada índice guardado"""
        image = EllipticNet(self.rank, self.field, provenance=provenance)
        for v, x in self._values.items():
            image._values[v] = self.field.element(fn(v, x))
        return image

    def __eq__(self, other) -> bool:
        if not isinstance(other, EllipticNet):
            return NotImplemented
        return (self.rank, self.field, self._values) == (other.rank, other.field, other._values)

    def __repr__(self) -> str:
        return f"EllipticNet(rank={self.rank}, field={self.field.label}, terms={len(self._values)})"


@dataclass
class NetBlock:
    """Corte rectangular de una red; rejilla en orden de filas (último eje más rápido)"""
    rank: int
    field: FieldDescriptor
    ranges: List[Range]
    grid: List[FieldElement] = dataclass_field(default_factory=list)

    def __post_init__(self):
        if len(self.ranges) != self.rank:
            raise RankMismatch("un rango por eje")
        if len(self.grid) != self.size:
            raise ValueError(f"la rejilla tiene {len(self.grid)} valores y el bloque {self.size}")

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(max(0, hi - lo + 1) for lo, hi in self.ranges)

    @property
    def size(self) -> int:
        return int(np.prod(self.shape, dtype=object)) if self.ranges else 0

    def indices(self) -> Iterator[NetIndex]:
        return itertools.product(*(range(lo, hi + 1) for lo, hi in self.ranges))

    def value(self, v: Sequence[int]) -> FieldElement:
        position = 0
        for c, (lo, hi), extent in zip(v, self.ranges, self.shape):
            if not lo <= c <= hi:
                raise MissingTerm(v)
            position = position * extent + (c - lo)
        return self.grid[position]

    @classmethod
    def from_net(cls, W: EllipticNet, ranges: Sequence[Range]) -> "NetBlock":
        ranges = [tuple(r) for r in ranges]
        if len(ranges) != W.rank:
            raise RankMismatch(f"{len(ranges)} rangos para una red de rango {W.rank}")
        indices = itertools.product(*(range(lo, hi + 1) for lo, hi in ranges))
        return cls(W.rank, W.field, ranges, [W.get(v) for v in indices])

    def to_net(self, provenance: Optional[Dict[str, Any]] = None) -> EllipticNet:
        W = EllipticNet(self.rank, self.field, provenance=provenance)
        for v, x in zip(self.indices(), self.grid):
            W.set(v, x)
        return W


def block_indices(ranges: Sequence[Range]) -> List[NetIndex]:
    return list(itertools.product(*(range(lo, hi + 1) for lo, hi in ranges)))


def transform_by_homomorphism(W: EllipticNet, F, ranges: Sequence[Range]) -> EllipticNet:
    """(W∘F)(u) = W(F·u) sobre el bloque de u dado; F es n×m"""
    matrix = np.asarray(F, dtype=object)
    if matrix.ndim != 2 or matrix.shape[0] != W.rank:
        raise RankMismatch(f"la matriz debe tener {W.rank} filas")
    m = matrix.shape[1]
    if len(ranges) != m:
        raise RankMismatch(f"se esperan {m} rangos")
    image = EllipticNet(m, W.field, provenance={'homomorphism': matrix.tolist()})
    for u in block_indices(ranges):
        image.set(u, W.get(matrix.dot(np.array(u, dtype=object))))
    return image


def subnet(W: EllipticNet, coordinates: Sequence[int]) -> EllipticNet:
    """Subred sobre las coordenadas dadas (base 0), reindexadas en orden"""
    coordinates = list(coordinates)
    if not coordinates or len(set(coordinates)) != len(coordinates) or \
            any(not 0 <= c < W.rank for c in coordinates):
        raise RankMismatch(f"coordenadas inválidas {coordinates} para rango {W.rank}")
    outside = [i for i in range(W.rank) if i not in coordinates]
    image = EllipticNet(len(coordinates), W.field, provenance={'subnet': coordinates})
    for v, x in W.items():
        if any(v[i] for i in outside):
            continue
        u = tuple(int(v[c]) for c in coordinates)
        image.set(u, x)
    return image


def reduce_net(W: EllipticNet, target: FieldDescriptor) -> EllipticNet:
    """Compone W con el morfismo Q → F_p"""
    if not W.field.is_rational or target.is_rational:
        raise MixedFields("solo se reduce de Q a un cuerpo primo")
    image = EllipticNet(W.rank, target, provenance={'reduced_from': W.field.label})
    for v, x in W.items():
        image.set(v, target.element(x.value))
    return image
