# src/nets/builtin.py
# Redes de ejemplo: cero, identidad, símbolo de Legendre módulo 3 y Fibonacci F_2v

from typing import Callable, Dict, Optional, Sequence

from sympy import fibonacci

from ..arith.field import FieldDescriptor
from ..utils.errors import RankMismatch
from .elliptic_net import EllipticNet, Range, block_indices


def _legendre3(v: int) -> int:
    return (0, 1, -1)[v % 3]


def _fibonacci2v(v: int) -> int:
    value = int(fibonacci(2 * abs(v)))
    return value if v >= 0 else -value


RANK_ONE_NETS: Dict[str, Callable[[int], int]] = {
    'identity': lambda v: v,
    'legendre3': _legendre3,
    'fibonacci2v': _fibonacci2v,
}

BUILTIN_NAMES = ('zero',) + tuple(RANK_ONE_NETS)


def builtin_net(name: str, ranges: Sequence[Range], field: Optional[FieldDescriptor] = None) -> EllipticNet:
    field = field or FieldDescriptor.rationals()
    if name == 'zero':
        W = EllipticNet(len(ranges), field, provenance={'builtin': name})
        for v in block_indices(ranges):
            W.set(v, 0)
        return W
    if name not in RANK_ONE_NETS:
        raise ValueError(f"red predefinida desconocida: {name}")
    if len(ranges) != 1:
        raise RankMismatch(f"la red {name} es de rango 1")
    formula = RANK_ONE_NETS[name]
    W = EllipticNet(1, field, provenance={'builtin': name})
    for (v,) in block_indices(ranges):
        W.set((v,), formula(v))
    return W
