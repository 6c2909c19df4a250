# src/nets/propagate.py
# Propagación de una red a partir de semillas mediante instancias de la relación

import itertools
import logging
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple, Union

from ..arith.field import FieldDescriptor, FieldElement, Scalar
from ..config.settings import Config
from ..utils.errors import (Char2PathUnavailable, DegenerateSeeds, MissingTerm, RankMismatch,
                            SearchExhausted, UnderspecifiedSeeds)
from .elliptic_net import EllipticNet, NetBlock, Range, block_indices
from .lattice import (MONOMIALS, NetIndex, RelationInstance, as_index, canonical, ceil_half,
                      is_zero, negate, sign, sub, sup_norm, support, unit)

logger = logging.getLogger(__name__)

Lookup = Callable[[NetIndex], FieldElement]
Row = Tuple[int, int, int, int]


class _Cycle(Exception):
    def __init__(self, index: NetIndex):
        self.index = index


class _NotIsolated(Exception):
    pass


# ========== INSTANCIAS DE RANGO 2 ==========

# Instancias para norma del supremo ≤ 4, una fila por coordenada
RANK2_BASE_ROWS: Dict[Tuple[int, int], Tuple[Row, Row]] = {
    (1, -1): ((1, 0, 1, 0), (0, 1, 1, 0)),
    (2, 2): ((1, 1, -1, 0), (1, 2, 1, -1)),
    (2, -1): ((-1, 0, 1, 1), (1, 1, 0, 0)),
    (-1, 2): ((0, -1, -1, 0), (1, 1, 0, 0)),
    (2, -2): ((1, 1, -1, 0), (-1, -2, -1, 1)),
    (3, 0): ((2, 1, 0, 0), (0, 0, 1, 0)),
    (3, 1): ((2, 1, 0, 0), (1, 0, 1, 0)),
    (3, 2): ((2, 1, 0, 0), (1, 1, 1, 0)),
    (3, 3): ((2, 1, 1, 0), (2, 1, 0, 0)),
    (3, -1): ((2, 1, 1, 0), (-1, -1, 0, 1)),
    (3, -3): ((1, 2, 1, 0), (-2, -1, 0, 0)),
    (4, 0): ((2, 1, 0, 1), (0, 0, 1, 0)),
    (4, 1): ((3, 2, 1, -1), (0, 0, 0, 1)),
    (4, 2): ((3, 2, 1, -1), (1, 1, 1, 0)),
    (4, 3): ((2, 2, 1, 0), (2, 1, 0, 0)),
    (4, 4): ((3, 2, 1, -1), (2, 2, 1, 0)),
    (4, -2): ((2, 1, -1, 1), (-1, -1, -1, 0)),
    (4, -4): ((2, 1, -1, 1), (-2, -2, -1, 0)),
}

_SWAPPED = ((3, 0), (3, 1), (3, 2), (4, 0), (4, 1), (4, 2), (4, 3), (3, -1), (4, -2))
_SECOND_NEGATED = ((3, 2), (4, 1), (4, 3))


def _build_rank2_table() -> Dict[Tuple[int, int], Tuple[Row, Row]]:
    table = dict(RANK2_BASE_ROWS)
    swapped = list(_SWAPPED)
    for a, b in _SECOND_NEGATED:
        first, second = table[(a, b)]
        table[(a, -b)] = (first, tuple(-e for e in second))
        swapped.append((a, -b))
    for a, b in swapped:
        first, second = table[(a, b)]
        table[(b, a)] = (second, first)
    return table


RANK2_TABLE = _build_rank2_table()


def _rank2_integrality_rows(a: int, b: int) -> Tuple[Row, Row]:
    """Filas para norma > 4 con w = ⌈v/2⌉ según la paridad de cada coordenada"""
    wa, wb = ceil_half(a), ceil_half(b)
    odd_a, odd_b = a % 2 != 0, b % 2 != 0
    if odd_a and odd_b:
        return (wa, wa - 1, 0, 0), (wb, wb - 1, 1, 0)
    if not odd_a and not odd_b:
        return (wa, wa - 1, 0, 1), (wb, wb, 1, 0)
    if odd_a:
        return (wa, wa - 1, 0, 0), (wb, wb, 1, 0)
    return (wa, wa, 1, 0), (wb, wb - 1, 0, 0)


# ========== FILAS DE RANGO n ==========

def _even_row(kind: int, w: int) -> Row:
    return {
        1: (w - 1, w, 0, 1),
        2: (w, w - 1, 0, 1),
        3: (w, w, 0, 0),
        4: (w, w, 1, 0),
    }[kind]


def _odd_row(kind: int, w: int) -> Row:
    return {
        1: (w, w - 1, 0, 0),
        2: (w - 1, w, 0, 0),
        3: (w - 1, w, 1, 0),
        4: (w, w, 0, -1),
        5: (w, w, 1, -1),
    }[kind]


def _rows_large_norm(u: Sequence[int]) -> List[Row]:
    """Norma ≥ 3 y al menos tres coordenadas no nulas"""
    evens = [k for k, c in enumerate(u) if c % 2 == 0]
    rows: List[Row] = []
    if evens:
        for k, c in enumerate(u):
            w = ceil_half(c)
            if c % 2:
                rows.append(_odd_row(1, w))
            elif k == evens[0]:
                rows.append(_even_row(4, w))
            elif len(evens) > 1 and k == evens[1]:
                rows.append(_even_row(2, w))
            else:
                rows.append(_even_row(3, w))
        return rows
    for k, c in enumerate(u):
        rows.append(_odd_row({0: 4, 1: 5}.get(k, 1), ceil_half(c)))
    return rows


def _rows_norm_two(u: Sequence[int]) -> List[Row]:
    """Norma 2 con al menos cuatro coordenadas no nulas"""
    odds = [k for k, c in enumerate(u) if c % 2]
    rows: List[Row] = []
    if len(odds) >= 3:
        kinds = {odds[0]: 1, odds[1]: 4, odds[2]: 5}
        for k, c in enumerate(u):
            w = ceil_half(c)
            rows.append(_odd_row(kinds.get(k, 1), w) if c % 2 else _even_row(3, w))
        return rows
    if odds:
        for k, c in enumerate(u):
            w = ceil_half(c)
            if c % 2:
                rows.append(_odd_row(3 if k == odds[0] else 1, w))
            else:
                rows.append(_even_row(3, w))
        return rows
    for k, c in enumerate(u):
        rows.append(_even_row({0: 1, 1: 4}.get(k, 3), ceil_half(c)))
    return rows


def unit_vector_rows(u: Sequence[int]) -> List[Row]:
    """Norma 1 con al menos cuatro coordenadas no nulas"""
    rows: List[Row] = [
        tuple(sign(u[0]) * e for e in (1, 0, 0, 0)),
        tuple(sign(u[1]) * e for e in (0, 1, 0, 0)),
        tuple(sign(u[2]) * e for e in (0, 0, 0, 1)),
    ]
    for c in u[3:]:
        rows.append((1, 1, 1, -1) if c > 0 else (0, 0, 1, -1))
    return rows


# Filas de tres coordenadas y norma 2; el valor indica |p+q+s| de la fila
_THREE_AXIS_ROWS: Dict[int, Row] = {
    1: (0, 0, 0, 1),
    2: (0, 0, -1, 1),
    3: (2, 1, 1, -1),
    4: (0, 1, 0, 1),
    5: (1, 1, 0, 0),
}
_THREE_AXIS_SETS = {1: (1, 2, 3), 2: (2, 3, 4), 3: (3, 4, 5)}


def _rows_three_axes_norm_two(u: Sequence[int]) -> List[List[Row]]:
    twos = sum(1 for c in u if abs(c) == 2)
    options = []
    for order in itertools.permutations(_THREE_AXIS_SETS[twos]):
        rows = [_THREE_AXIS_ROWS[k] for k in order]
        if all(abs(row[0] + row[1] + row[3]) == abs(c) for row, c in zip(rows, u)):
            options.append([tuple(sign(c) * e for e in row) for row, c in zip(rows, u)])
    return options


# Sistemas de tres coordenadas para los cuatro términos (±1, ±1, ±1)
_LIFT_LINEAR = ((1, 1, 0, -1), (0, 0, -1, 1), (1, 0, 1, 0))
_LIFT_LINEAR_SIGNED = ((0, 0, 1, -1), (1, 1, 0, -1), (0, 1, 1, 0))
_LIFT_QUADRATIC = ((1, 0, 1, 0), (0, 0, 0, 1), (1, 1, 0, -1))


def _rotations(rows: Sequence[Row]) -> List[Tuple[Row, ...]]:
    return [tuple(rows), (rows[2], rows[0], rows[1]), (rows[1], rows[2], rows[0])]


# ========== RESOLUCIÓN DE UNA INSTANCIA ==========

def _product(values: Iterable[FieldElement]) -> FieldElement:
    values = iter(values)
    result = next(values)
    for x in values:
        result = result * x
    return result


def solve_instance(instance: RelationInstance, target: NetIndex, lookup: Lookup) -> FieldElement:
    """Despeja W(target) de una instancia donde aparece una sola vez"""
    slots = instance.target_slots(target)
    if len(slots) != 1:
        raise _NotIsolated()
    position, orientation = slots[0]
    indices = instance.indices
    monomial = position // 4
    partners = [k for k in MONOMIALS[monomial] if k != position]
    factors = []
    for k in partners:
        value = lookup(indices[k])
        if value.is_zero():
            raise DegenerateSeeds(indices[k], target)
        factors.append(value)
    rest = sum(_product(lookup(indices[k]) for k in MONOMIALS[m]) for m in range(3) if m != monomial)
    value = -rest / _product(factors)
    return value if orientation > 0 else -value


def generic_instance_search(known: EllipticNet, target: Sequence[int], entry_bound: int,
                            node_limit: Optional[int] = None) -> Optional[RelationInstance]:
    """Primera instancia (orden lexicográfico descendente) que aísla target; None si ya es conocido"""
    target = as_index(target)
    if len(target) != known.rank:
        raise RankMismatch(f"índice {target} en una red de rango {known.rank}")
    if is_zero(target) or known.has(target):
        return None
    node_limit = node_limit or Config.SEARCH_NODE_LIMIT
    opposite = negate(target)
    coords = support(target)
    entries = range(entry_bound, -entry_bound - 1, -1)

    def embed(values: Sequence[int]) -> NetIndex:
        full = [0] * known.rank
        for c, x in zip(coords, values):
            full[c] = x
        return tuple(full)

    def ok(v: NetIndex) -> bool:
        return v == target or v == opposite or known.has(v)

    vectors = [embed(values) for values in itertools.product(entries, repeat=len(coords))]
    usable = [v for v in vectors if ok(v)]
    nodes = 0
    for p in usable:
        for q in usable:
            if not ok(sub(p, q)):
                continue
            for r in usable:
                nodes += 1
                if nodes > node_limit:
                    raise SearchExhausted(target, entry_bound)
                if not (ok(sub(q, r)) and ok(sub(r, p))):
                    continue
                for s in vectors:
                    instance = RelationInstance(p, q, r, s)
                    if not all(ok(v) for v in instance.indices):
                        continue
                    try:
                        solve_instance(instance, target, known.get)
                    except (_NotIsolated, DegenerateSeeds, MissingTerm):
                        continue
                    logger.debug("instancia genérica para %s: %s", target, instance)
                    return instance
    raise SearchExhausted(target, entry_bound)


# ========== SOLUCIÓN LINEAL EXACTA ==========

def _gauss_jordan(rows: List[List[FieldElement]], width: int, zero: FieldElement):
    """Resuelve Σ a_k x_k = b (última columna b); devuelve solución particular y base del núcleo"""
    matrix = [list(r) for r in rows]
    pivots: List[int] = []
    rank = 0
    for column in range(width):
        pivot = next((i for i in range(rank, len(matrix)) if not matrix[i][column].is_zero()), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        inverse = matrix[rank][column].inverse()
        matrix[rank] = [x * inverse for x in matrix[rank]]
        for i in range(len(matrix)):
            if i != rank and not matrix[i][column].is_zero():
                factor = matrix[i][column]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[rank])]
        pivots.append(column)
        rank += 1
    for i in range(rank, len(matrix)):
        if not matrix[i][width].is_zero():
            return None, []
    particular = [zero] * width
    for i, column in enumerate(pivots):
        particular[column] = matrix[i][width]
    kernel = []
    for free in (c for c in range(width) if c not in pivots):
        direction = [zero] * width
        direction[free] = zero + 1
        for i, column in enumerate(pivots):
            direction[column] = -matrix[i][free]
        kernel.append(direction)
    return particular, kernel


# ========== CONJUNTOS DE SEMILLAS ==========

def baseset(rank: int) -> List[NetIndex]:
    """Índices obligatorios del conjunto de semillas"""
    if rank == 1:
        return [(1,), (2,), (3,), (4,)]
    if rank == 2:
        return [(1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (2, 1), (1, 2)]
    indices: List[NetIndex] = []
    for i in range(rank):
        indices.append(unit(rank, i))
        indices.append(unit(rank, i, 2))
    for i, j in itertools.combinations(range(rank), 2):
        indices.append(tuple(a + b for a, b in zip(unit(rank, i), unit(rank, j))))
        indices.append(tuple(a - b for a, b in zip(unit(rank, i), unit(rank, j))))
    for i, j in itertools.permutations(range(rank), 2):
        indices.append(tuple(a + b for a, b in zip(unit(rank, i, 2), unit(rank, j))))
    for size in range(3, rank):
        for chosen in itertools.combinations(range(rank), size):
            indices.append(tuple(1 if k in chosen else 0 for k in range(rank)))
    return indices


OPTIONAL_SEEDS = {2: [(2, 2)]}


class SeedSet:
    """Valores de semilla sobre el conjunto base de su rango"""

    def __init__(self, rank: int, field: FieldDescriptor, values: Mapping[Sequence[int], Scalar]):
        self.rank = rank
        self.field = field
        self.values: Dict[NetIndex, FieldElement] = {}
        for v, x in values.items():
            index = as_index(v)
            if len(index) != rank:
                raise RankMismatch(f"semilla {index} en un conjunto de rango {rank}")
            orientation, key = canonical(index)
            if orientation == 0:
                continue
            x = field.element(x)
            self.values[key] = x if orientation > 0 else -x
        missing = [v for v in baseset(rank) if v not in self.values]
        if missing:
            raise UnderspecifiedSeeds(missing)
        self.flags = self._unit_conditions()

    def _unit_conditions(self) -> Dict[NetIndex, bool]:
        if self.rank == 1:
            watched = [(1,), (2,)]
        else:
            watched = [unit(self.rank, i) for i in range(self.rank)]
            watched += [tuple(a + b for a, b in zip(unit(self.rank, i), unit(self.rank, j)))
                        for i, j in itertools.combinations(range(self.rank), 2)]
        return {v: not self.values[v].is_zero() for v in watched}

    def validate(self) -> "SeedSet":
        for v, holds in self.flags.items():
            if not holds:
                raise DegenerateSeeds(v)
        return self

    @classmethod
    def from_net(cls, W: EllipticNet) -> "SeedSet":
        wanted = baseset(W.rank) + OPTIONAL_SEEDS.get(W.rank, [])
        values = {}
        for v in wanted:
            if W.has(v):
                values[v] = W.get(v)
        return cls(W.rank, W.field, values)

    def as_net(self) -> EllipticNet:
        return EllipticNet(self.rank, self.field, dict(self.values), provenance={'seeds': len(self.values)})


# ========== MOTOR ==========

class PropagationEngine:
    """Calcula términos arbitrarios con memoización por índice canónico"""

    def __init__(self, seeds: SeedSet, search_bound: Optional[int] = None,
                 search_enabled: Optional[bool] = None):
        self.seeds = seeds.validate()
        self.rank = seeds.rank
        self.field = seeds.field
        self.known = seeds.as_net()
        self.search_bound = Config.DEFAULT_SEARCH_BOUND if search_bound is None else search_bound
        self.search_enabled = Config.SEARCH_ENABLED if search_enabled is None else search_enabled
        self._in_progress: Set[NetIndex] = set()

    def term(self, v: Sequence[int]) -> FieldElement:
        index = as_index(v)
        if len(index) != self.rank:
            raise RankMismatch(f"índice {index} en un motor de rango {self.rank}")
        orientation, key = canonical(index)
        if orientation == 0:
            return self.field.zero
        if self.known.has(key):
            return self.known.get(index)
        if key in self._in_progress:
            raise _Cycle(key)
        outermost = not self._in_progress
        self._in_progress.add(key)
        try:
            value = self._compute(key)
        except _Cycle as exc:
            if not outermost:
                raise
            raise DegenerateSeeds(None, key, message=f"ciclo de dependencias en {exc.index}")
        finally:
            self._in_progress.discard(key)
        self.known.set(key, value)
        return value if orientation > 0 else -value

    def _working_coordinates(self, key: NetIndex) -> Tuple[int, ...]:
        coords = list(support(key))
        for c in range(self.rank):
            if len(coords) >= 2:
                break
            if c not in coords:
                coords.append(c)
        return tuple(sorted(coords))

    def _embed(self, rows: Sequence[Row], coords: Sequence[int]) -> RelationInstance:
        full = [(0, 0, 0, 0)] * self.rank
        for c, row in zip(coords, rows):
            full[c] = row
        return RelationInstance.from_rows(full)

    def _compute(self, key: NetIndex) -> FieldElement:
        if self.rank == 1:
            m = key[0]
            n = m // 2
            row = (n + 1, n, 1, 0) if m % 2 else (n + 1, n - 1, 1, 0)
            return self._solve_candidates(key, [RelationInstance.from_rows([row])])
        coords = self._working_coordinates(key)
        u = [key[c] for c in coords]
        if len(coords) == 2:
            if sup_norm(u) > 4:
                rows = _rank2_integrality_rows(*u)
            else:
                rows = RANK2_TABLE.get(tuple(u)) or RANK2_TABLE.get(tuple(-c for c in u))
            candidates = [self._embed(rows, coords)] if rows else []
            return self._solve_candidates(key, candidates)
        norm = sup_norm(u)
        if norm == 1 and len(coords) == 3:
            return self._lift_three_axes(key, coords)
        if norm == 1:
            options = [unit_vector_rows(u)]
        elif norm == 2 and len(coords) == 3:
            options = _rows_three_axes_norm_two(u)
        elif norm == 2:
            options = [_rows_norm_two(u)]
        else:
            options = [_rows_large_norm(u)]
        return self._solve_candidates(key, [self._embed(rows, coords) for rows in options])

    def _solve_candidates(self, key: NetIndex, candidates: List[RelationInstance]) -> FieldElement:
        failure: Optional[DegenerateSeeds] = None
        for instance in candidates:
            try:
                value = solve_instance(instance, key, self.term)
                logger.debug("W%s con %s", key, instance)
                return value
            except DegenerateSeeds as exc:
                failure = failure or exc
            except (_Cycle, _NotIsolated):
                continue
        if self.search_enabled:
            try:
                instance = generic_instance_search(self.known, key, self.search_bound)
                if instance is not None:
                    logger.warning("W%s resuelto por búsqueda genérica: %s", key, instance)
                    return solve_instance(instance, key, self.known.get)
            except SearchExhausted:
                logger.debug("búsqueda agotada para W%s", key)
        raise failure or DegenerateSeeds(None, key, message=f"ninguna instancia aplicable a W{key}")

    def _lift_three_axes(self, key: NetIndex, coords: Sequence[int]) -> FieldElement:
        values = lift_sign_patterns(self.term, self.known.has, self.rank, self.field, coords)
        for index, value in values.items():
            if not self.known.has(index):
                self.known.set(index, value)
        for index, value in values.items():
            if index == key:
                return value
            if negate(index) == key:
                return -value
        raise DegenerateSeeds(None, key, message=f"W{key} fuera del levantamiento")


# ========== LEVANTAMIENTO DE LOS TÉRMINOS (±1, ±1, ±1) ==========

def _sign_patterns(rank: int, coords: Sequence[int]) -> List[NetIndex]:
    patterns = []
    for signs in ((1, 1, 1), (-1, 1, 1), (1, -1, 1), (1, 1, -1)):
        full = [0] * rank
        for c, e in zip(coords, signs):
            full[c] = e
        patterns.append(tuple(full))
    return patterns


def embed_rows(rows: Sequence[Row], rank: int, coords: Sequence[int]) -> RelationInstance:
    full = [(0, 0, 0, 0)] * rank
    for c, row in zip(coords, rows):
        full[c] = row
    return RelationInstance.from_rows(full)


def _unknown_position(index: NetIndex, unknowns: Sequence[NetIndex]) -> Tuple[Optional[int], int]:
    for k, t in enumerate(unknowns):
        if index == t:
            return k, 1
        if index == negate(t):
            return k, -1
    return None, 1


def _monomial_polynomials(instance: RelationInstance, unknowns: Sequence[NetIndex], lookup: Lookup,
                          base: Sequence[FieldElement], direction: Sequence[FieldElement],
                          zero: FieldElement) -> List[FieldElement]:
    """Coeficientes en t de la relación con incógnitas base + t·direction"""
    total = [zero] * 5
    indices = instance.indices
    for monomial in MONOMIALS:
        poly = [zero + 1]
        for k in monomial:
            position, orientation = _unknown_position(indices[k], unknowns)
            if position is None:
                factor = [lookup(indices[k])]
            else:
                factor = [orientation * base[position], orientation * direction[position]]
            product = [zero] * (len(poly) + len(factor) - 1)
            for i, a in enumerate(poly):
                for j, b in enumerate(factor):
                    product[i + j] = product[i + j] + a * b
            poly = product
        for i, c in enumerate(poly):
            total[i] = total[i] + c
    return total


def _solve_on_line(polynomials: List[List[FieldElement]]) -> Optional[FieldElement]:
    """Raíz común de polinomios de grado ≤ 2, eliminando el término cuadrático"""
    linear = []
    quadratic = []
    for poly in polynomials:
        if any(not c.is_zero() for c in poly[3:]):
            continue
        if poly[2].is_zero():
            linear.append(poly)
        else:
            quadratic.append(poly)
    for a, b in itertools.combinations(quadratic, 2):
        linear.append([b[2] * x - a[2] * y for x, y in zip(a, b)])
    for poly in linear:
        if poly[1].is_zero():
            continue
        t = -poly[0] / poly[1]
        if all(sum(c * t ** i for i, c in enumerate(p)).is_zero() for p in polynomials):
            return t
    return None


def lift_sign_patterns(lookup: Lookup, is_known: Callable[[NetIndex], bool], rank: int,
                       field: FieldDescriptor, coords: Sequence[int] = (0, 1, 2)) -> Dict[NetIndex, FieldElement]:
    """Valores en (1,1,1), (-1,1,1), (1,-1,1), (1,1,-1) sobre tres coordenadas"""
    patterns = _sign_patterns(rank, coords)
    zero = field.zero
    unknowns = [t for t in patterns if not is_known(t)]
    result = {t: lookup(t) for t in patterns if is_known(t)}
    if not unknowns:
        return result
    primary = _rotations(_LIFT_LINEAR) + [_LIFT_LINEAR_SIGNED]
    supplementary = _rotations(_LIFT_LINEAR_SIGNED)[1:]

    def linear_rows(systems):
        rows = []
        for pattern in systems:
            instance = embed_rows(pattern, rank, coords)
            coefficients = [zero] * len(unknowns)
            constant = zero
            for monomial in MONOMIALS:
                value = zero + 1
                hit = None
                for k in monomial:
                    index = instance.indices[k]
                    position, orientation = _unknown_position(index, unknowns)
                    if position is None:
                        value = value * lookup(index)
                    elif hit is None:
                        hit = position
                        value = value * orientation
                    else:
                        raise DegenerateSeeds(None, index, message="sistema no lineal inesperado")
                if hit is None:
                    constant = constant + value
                else:
                    coefficients[hit] = coefficients[hit] + value
            rows.append(coefficients + [-constant])
        return rows

    particular, kernel = _gauss_jordan(linear_rows(primary), len(unknowns), zero)
    if particular is not None and kernel:
        particular, kernel = _gauss_jordan(linear_rows(primary + supplementary), len(unknowns), zero)
    if particular is None:
        raise DegenerateSeeds(None, unknowns[0], message="sistema incompatible para los términos (±1,±1,±1)")
    if kernel:
        if len(kernel) > 1:
            raise _lift_failure(field, unknowns[0])
        direction = kernel[0]
        polynomials = [
            _monomial_polynomials(embed_rows(pattern, rank, coords), unknowns, lookup,
                                  particular, direction, zero)
            for pattern in _rotations(_LIFT_QUADRATIC)
        ]
        t = _solve_on_line(polynomials)
        if t is None:
            raise _lift_failure(field, unknowns[0])
        logger.debug("términos (±1,±1,±1) por eliminación sobre la recta de soluciones")
        particular = [a + t * d for a, d in zip(particular, direction)]
    for t_index, value in zip(unknowns, particular):
        result[t_index] = value
    return result


def _lift_failure(field: FieldDescriptor, index: NetIndex):
    if field.characteristic == 2:
        return Char2PathUnavailable(f"eliminación de característica 2 fallida en {index}")
    return DegenerateSeeds(None, index, message=f"sistema degenerado para W{index}")


# ========== OPERACIONES DE MÓDULO ==========

SeedSource = Union[SeedSet, PropagationEngine]


def _engine(seeds: SeedSource) -> PropagationEngine:
    return seeds if isinstance(seeds, PropagationEngine) else PropagationEngine(seeds)


def rank1_term(seeds: SeedSource, m: int) -> FieldElement:
    engine = _engine(seeds)
    if engine.rank != 1:
        raise RankMismatch("rank1_term necesita semillas de rango 1")
    return engine.term((m,))


def rank2_bootstrap(seeds: SeedSource) -> Dict[NetIndex, FieldElement]:
    """W(1,-1) y W(2,2) a partir de las siete semillas"""
    engine = _engine(seeds)
    if engine.rank != 2:
        raise RankMismatch("rank2_bootstrap necesita semillas de rango 2")
    values = {}
    for target in ((1, -1), (2, 2)):
        instance = RelationInstance.from_rows(RANK2_TABLE[target])
        values[target] = solve_instance(instance, target, engine.term)
    return values


def rank2_term(seeds: SeedSource, v: Sequence[int]) -> FieldElement:
    engine = _engine(seeds)
    if engine.rank != 2:
        raise RankMismatch("rank2_term necesita semillas de rango 2")
    return engine.term(v)


def rankn_term(seeds: SeedSource, v: Sequence[int]) -> FieldElement:
    engine = _engine(seeds)
    if engine.rank < 3:
        raise RankMismatch("rankn_term necesita rango ≥ 3")
    return engine.term(v)


def rank3_lift(known: Union[EllipticNet, PropagationEngine],
               coords: Sequence[int] = (0, 1, 2)) -> Dict[NetIndex, FieldElement]:
    """Levanta los cuatro términos de signo a partir de valores de subredes de rango ≤ 2"""
    if isinstance(known, PropagationEngine):
        return lift_sign_patterns(known.term, known.known.has, known.rank, known.field, coords)
    if known.rank < 3:
        raise RankMismatch("rank3_lift necesita rango ≥ 3")
    patterns = set(_sign_patterns(known.rank, coords))

    def is_known(t: NetIndex) -> bool:
        return t not in patterns and known.has(t)

    return lift_sign_patterns(known.get, is_known, known.rank, known.field, coords)


def fill_block(source, ranges: Sequence[Range]) -> NetBlock:
    """Rellena el bloque rectangular con el motor o el contexto dado"""
    if isinstance(source, SeedSet):
        source = PropagationEngine(source)
    ranges = [tuple(r) for r in ranges]
    if len(ranges) != source.rank:
        raise RankMismatch(f"{len(ranges)} rangos para rango {source.rank}")
    indices = block_indices(ranges)
    for v in sorted(indices, key=lambda v: sum(abs(c) for c in v)):
        source.term(v)
    return NetBlock(source.rank, source.field, ranges, [source.term(v) for v in indices])
