# src/nets/axiom.py
# Verificación de la relación de recurrencia sobre cuádruplas

import logging
import random
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from ..config.settings import Config
from ..utils.errors import IndexOverflow
from .elliptic_net import EllipticNet
from .lattice import NetIndex, RelationInstance, as_index

logger = logging.getLogger(__name__)

Quadruple = Tuple[NetIndex, NetIndex, NetIndex, NetIndex]


@dataclass
class AxiomReport:
    """Residuo exacto de cada cuádrupla comprobada"""
    entries: List[Tuple[RelationInstance, object]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(residual == 0 for _, residual in self.entries)

    @property
    def failures(self) -> List[Tuple[RelationInstance, object]]:
        return [(instance, residual) for instance, residual in self.entries if residual != 0]

    def summary(self) -> str:
        zero = len(self.entries) - len(self.failures)
        return f"{zero}/{len(self.entries)} residuos nulos"


def check_axiom(W: EllipticNet, quadruples: Sequence[Sequence[Sequence[int]]]) -> AxiomReport:
    report = AxiomReport()
    for quadruple in quadruples:
        instance = RelationInstance(*(as_index(v) for v in quadruple))
        report.entries.append((instance, instance.residual(W.get)))
    if not report.passed:
        logger.warning("relación violada en %d cuádruplas", len(report.failures))
    return report


def sample_quadruples(W: EllipticNet, count: int, seed: Optional[int] = None) -> List[Quadruple]:
    """Cuádruplas pseudoaleatorias cuyos 12 índices están todos guardados"""
    rng = random.Random(Config.DEFAULT_SEED if seed is None else seed)
    stored = W.indices()
    if not stored:
        return []
    extent = max(abs(c) for v in stored for c in v)
    radius = max(1, extent // 3)
    samples: List[Quadruple] = []
    attempts = count * Config.SAMPLE_ATTEMPTS_FACTOR
    while len(samples) < count and attempts > 0:
        attempts -= 1
        quadruple = tuple(tuple(rng.randint(-radius, radius) for _ in range(W.rank)) for _ in range(4))
        try:
            instance = RelationInstance(*quadruple)
            if all(W.has(v) for v in instance.indices):
                samples.append(quadruple)
        except IndexOverflow:
            continue
    if len(samples) < count:
        logger.warning("solo se obtuvieron %d de %d cuádruplas", len(samples), count)
    return samples
