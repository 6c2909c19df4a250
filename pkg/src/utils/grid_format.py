# src/utils/grid_format.py
# Rejilla de texto alineada: eje 1 hacia la derecha, eje 2 hacia arriba

import itertools
from typing import List, Sequence, Tuple

from ..arith.field import format_element
from ..config.settings import Config

Range = Tuple[int, int]


def _cell(W, v: Sequence[int]) -> str:
    text = format_element(W.get(v))
    if not any(v):
        text += Config.GRID_ORIGIN_MARK
    return text


def _render_rows(rows: List[List[str]]) -> str:
    width = max((len(cell) for row in rows for cell in row), default=0)
    gap = " " * Config.GRID_COLUMN_GAP
    return "\n".join(gap.join(cell.rjust(width) for cell in row).rstrip() for row in rows)


def _plane(W, ranges: Sequence[Range], fixed: Sequence[int]) -> str:
    (lo1, hi1), (lo2, hi2) = ranges[0], ranges[1]
    rows = []
    for b in range(hi2, lo2 - 1, -1):
        rows.append([_cell(W, (a, b) + tuple(fixed)) for a in range(lo1, hi1 + 1)])
    return _render_rows(rows)


def format_grid(W, ranges: Sequence[Range]) -> str:
    """Rango 1 en una fila; rango 2 como plano; rango ≥ 3 como cortes por las coordenadas restantes"""
    ranges = [tuple(r) for r in ranges]
    if len(ranges) == 1:
        lo, hi = ranges[0]
        return _render_rows([[_cell(W, (v,)) for v in range(lo, hi + 1)]])
    if len(ranges) == 2:
        return _plane(W, ranges, ())
    slices = []
    for fixed in itertools.product(*(range(lo, hi + 1) for lo, hi in ranges[2:])):
        header = ", ".join(f"v{k + 3} = {c}" for k, c in enumerate(fixed))
        slices.append(f"[{header}]\n{_plane(W, ranges, fixed)}")
    return "\n\n".join(slices)
