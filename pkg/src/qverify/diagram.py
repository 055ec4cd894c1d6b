"""Plain-text Ferrers diagrams, including the staircase-plus-partition overlays."""

from __future__ import annotations

from typing import Optional

from .bijection import SourcePair, add_and_split
from .partitions import Partition, add_pointwise, format_partition

CELL = "█"
OVERLAY = "░"
ZERO_ROW = "·"


def _caption(p: Partition) -> str:
    if not p:
        return "∅ (empty partition)"
    return f"({format_partition(p)})  weight {p.weight}, {p.length} parts"


def render_diagram(p: Partition, overlay: Optional[Partition] = None) -> str:
    """Rows of cells, one per part; zero parts show as a lone ``·``.

    With ``overlay`` the rows of ``p + overlay`` are drawn, ``p``'s cells
    first in solid glyphs and the overlay's cells after them in light shade.
    """
    if overlay is None:
        rows = [CELL * x if x else ZERO_ROW for x in p.parts]
        return "\n".join([_caption(p)] + rows) + "\n"
    total = add_pointwise(p, overlay)
    rows = []
    for i in range(total.length):
        left, right = p.part(i), overlay.part(i)
        row = CELL * left + OVERLAY * right
        rows.append(row if row else ZERO_ROW)
    head = f"({format_partition(p)}) + ({format_partition(overlay)}) = ({format_partition(total)})"
    return "\n".join([head] + rows) + "\n"


def render_split(pair: SourcePair) -> str:
    """The sum diagram with a rule after row k, followed by the resulting X and Y."""
    out = add_and_split(pair)
    k = min(pair.lam.length, pair.mu.length)
    lines = render_diagram(pair.lam, pair.mu).rstrip("\n").split("\n")
    head, rows = lines[0], lines[1:]
    width = max((len(r) for r in rows), default=0)
    body = rows[:k] + ["-" * max(width, 1)] + rows[k:]
    tail = [
        f"X = ({format_partition(out.x)})",
        f"Y = ({format_partition(out.y)})",
        f"tag {out.tag}",
    ]
    return "\n".join([head] + body + tail) + "\n"
