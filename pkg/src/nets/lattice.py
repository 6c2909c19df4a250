# src/nets/lattice.py
# Índices de Z^n e instancias de la relación de recurrencia

from dataclasses import dataclass
from typing import Callable, Iterable, List, Sequence, Tuple

from ..config.settings import Config
from ..utils.errors import IndexOverflow

NetIndex = Tuple[int, ...]

# Posiciones de los 12 índices agrupados en los tres monomios
MONOMIALS = ((0, 1, 2, 3), (4, 5, 6, 7), (8, 9, 10, 11))


def as_index(v: Iterable[int]) -> NetIndex:
    index = tuple(int(c) for c in v)
    for c in index:
        if c > Config.INDEX_LIMIT or c < -Config.INDEX_LIMIT:
            raise IndexOverflow(f"coordenada {c} fuera del rango de 64 bits")
    return index


def zero_index(rank: int) -> NetIndex:
    return (0,) * rank


def is_zero(v: NetIndex) -> bool:
    return not any(v)


def negate(v: NetIndex) -> NetIndex:
    return tuple(-c for c in v)


def add(*vectors: NetIndex) -> NetIndex:
    return as_index(sum(cs) for cs in zip(*vectors))


def sub(v: NetIndex, w: NetIndex) -> NetIndex:
    return as_index(a - b for a, b in zip(v, w))


def canonical(v: NetIndex) -> Tuple[int, NetIndex]:
    """(signo, representante) con la primera coordenada no nula positiva"""
    for c in v:
        if c > 0:
            return 1, v
        if c < 0:
            return -1, negate(v)
    return 0, v


def sup_norm(v: NetIndex) -> int:
    return max((abs(c) for c in v), default=0)


def support(v: NetIndex) -> Tuple[int, ...]:
    return tuple(i for i, c in enumerate(v) if c)


def unit(rank: int, i: int, scale: int = 1) -> NetIndex:
    return tuple(scale if k == i else 0 for k in range(rank))


def sign(c: int) -> int:
    return (c > 0) - (c < 0)


def ceil_half(c: int) -> int:
    """⌈c/2⌉ con signo"""
    return -((-c) // 2)


@dataclass(frozen=True)
class RelationInstance:
    """Cuádrupla (p, q, r, s) de la relación que define una red elíptica"""
    p: NetIndex
    q: NetIndex
    r: NetIndex
    s: NetIndex

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "RelationInstance":
        """Una fila (p_i, q_i, r_i, s_i) por coordenada"""
        columns = list(zip(*rows)) if rows else [(), (), (), ()]
        return cls(*(as_index(col) for col in columns))

    @property
    def rank(self) -> int:
        return len(self.p)

    @property
    def indices(self) -> Tuple[NetIndex, ...]:
        p, q, r, s = self.p, self.q, self.r, self.s
        return (
            add(p, q, s), sub(p, q), add(r, s), r,
            add(q, r, s), sub(q, r), add(p, s), p,
            add(r, p, s), sub(r, p), add(q, s), q,
        )

    def target_slots(self, target: NetIndex) -> List[Tuple[int, int]]:
        """Posiciones donde aparece ±target, con el signo correspondiente"""
        negated = negate(target)
        slots = []
        for position, index in enumerate(self.indices):
            if index == target:
                slots.append((position, 1))
            elif index == negated:
                slots.append((position, -1))
        return slots

    def residual(self, lookup: Callable[[NetIndex], "object"]):
        values = [lookup(v) for v in self.indices]
        return sum(values[a] * values[b] * values[c] * values[d] for a, b, c, d in MONOMIALS)

    def __str__(self) -> str:
        return f"(p={self.p}, q={self.q}, r={self.r}, s={self.s})"
