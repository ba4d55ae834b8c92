from __future__ import annotations

import csv
import math
from collections.abc import Iterable, Sequence
from decimal import ROUND_HALF_UP, Decimal
from typing import Any, TextIO

from ..core.domain.graph import Graph, VertexSubset

LABEL_SEPARATOR = ";"


class CsvResponse:
    """Plot-ready CSV: a `# seed=` line, a header, then one line per row."""

    def __init__(self, out: TextIO, seed: int, header: Sequence[str]) -> None:
        self.out = out
        self.header = tuple(header)
        out.write(f"# seed={seed}\n")
        self.writer = csv.writer(out, lineterminator="\n")
        self.writer.writerow(self.header)

    def row(self, values: Iterable[Any]) -> None:
        cells = [format_cell(v) for v in values]
        if len(cells) != len(self.header):
            raise ValueError(f"Row has {len(cells)} cells for {len(self.header)} columns")
        self.writer.writerow(cells)


def format_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return repr(value)
    return str(value)


def labels_cell(g: Graph, subset: VertexSubset | Iterable[int]) -> str:
    return LABEL_SEPARATOR.join(g.labels_of(subset))


def percent(value: float) -> str:
    """Percentage rounded half away from zero to two decimals."""
    return str(Decimal(repr(value * 100.0)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))
