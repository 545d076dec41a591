"""Vertex colorings plus proper- and total-dominator-coloring checks.

A total dominator coloring is a proper coloring in which every vertex is
adjacent to *all* vertices of at least one (non-empty) color class. A vertex
can never witness its own class, because it is not adjacent to itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph

__all__ = [
    "Coloring",
    "normalize",
    "is_proper",
    "dominated_class_witness",
    "is_td_coloring",
]


@dataclass(frozen=True)
class Coloring:
    """Assignment of 1-based integer colors to vertices ``0 .. len(colors)-1``."""

    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        for v, c in enumerate(self.colors):
            if not isinstance(c, int) or isinstance(c, bool) or c < 1:
                raise ValueError(f"vertex {v} has invalid color {c!r}; colors are integers >= 1")

    @classmethod
    def from_sequence(cls, colors: Iterable[int]) -> Coloring:
        return cls(tuple(colors))

    @property
    def num_colors(self) -> int:
        """Number of distinct colors actually used."""
        return len(set(self.colors))

    def classes(self) -> dict[int, frozenset[int]]:
        """Non-empty color classes keyed by color, in ascending color order."""
        grouped: dict[int, set[int]] = {}
        for v, c in enumerate(self.colors):
            grouped.setdefault(c, set()).add(v)
        return {c: frozenset(grouped[c]) for c in sorted(grouped)}


def normalize(coloring: Coloring) -> Coloring:
    """Relabel colors to 1..k in order of first appearance; idempotent."""
    remap: dict[int, int] = {}
    out = []
    for c in coloring.colors:
        if c not in remap:
            remap[c] = len(remap) + 1
        out.append(remap[c])
    return Coloring(tuple(out))


def _check_sized(g: Graph, coloring: Coloring) -> None:
    if len(coloring.colors) != g.vertex_count:
        raise ValueError(
            f"coloring has {len(coloring.colors)} entries for a graph on "
            f"{g.vertex_count} vertices"
        )


def is_proper(g: Graph, coloring: Coloring) -> bool:
    """True iff no edge joins two vertices of the same color."""
    _check_sized(g, coloring)
    colors = coloring.colors
    return all(colors[u] != colors[v] for u, v in g.edges())


def dominated_class_witness(g: Graph, coloring: Coloring, v: int) -> int | None:
    """Smallest color whose entire class lies inside the neighborhood of ``v``.

    Returns None when no class qualifies. Requires a proper coloring.
    """
    if not 0 <= v < g.vertex_count:
        raise ValueError(f"vertex {v} out of range 0..{g.vertex_count - 1}")
    if not is_proper(g, coloring):
        raise ValueError("coloring is not proper")
    nbrs = g.adjacency[v]
    for color, members in coloring.classes().items():
        if members <= nbrs:
            return color
    return None


def is_td_coloring(g: Graph, coloring: Coloring) -> bool:
    """True iff proper and every vertex is adjacent to all of some color class."""
    _check_sized(g, coloring)
    if not is_proper(g, coloring):
        return False
    classes = list(coloring.classes().values())
    for v in range(g.vertex_count):
        nbrs = g.adjacency[v]
        if not any(members <= nbrs for members in classes):
            return False
    return True
