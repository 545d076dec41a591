"""Deterministic constructors for the supported graph families and products."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .graph import Graph

__all__ = [
    "Path",
    "Cycle",
    "Complete",
    "Empty",
    "Friendship",
    "Ladder",
    "Grid",
    "TriChain",
    "OrthoChain",
    "Corona",
    "Join",
    "Cart",
    "FamilySpec",
    "basic_family",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "empty_graph",
    "corona",
    "join",
    "cartesian_product",
    "friendship_family",
    "grid",
    "chain_cactus",
    "realize",
]


@dataclass(frozen=True)
class Path:
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("path order must be >= 1")


@dataclass(frozen=True)
class Cycle:
    n: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError("cycle order must be >= 3")


@dataclass(frozen=True)
class Complete:
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("complete graph order must be >= 1")


@dataclass(frozen=True)
class Empty:
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("empty graph order must be >= 0")


@dataclass(frozen=True)
class Friendship:
    """n cycles of length q sharing one common vertex (q = 3: friendship graph)."""

    q: int
    n: int

    def __post_init__(self) -> None:
        if self.q < 3:
            raise ValueError("blade cycle length must be >= 3")
        if self.n < 1:
            raise ValueError("blade count must be >= 1")


@dataclass(frozen=True)
class Ladder:
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("ladder length must be >= 1")


@dataclass(frozen=True)
class Grid:
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise ValueError("grid dimensions must be >= 1")


@dataclass(frozen=True)
class TriChain:
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("chain length must be >= 1")


@dataclass(frozen=True)
class OrthoChain:
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("chain length must be >= 1")


@dataclass(frozen=True)
class Corona:
    left: "FamilySpec"
    right: "FamilySpec"


@dataclass(frozen=True)
class Join:
    left: "FamilySpec"
    right: "FamilySpec"


@dataclass(frozen=True)
class Cart:
    left: "FamilySpec"
    right: "FamilySpec"


FamilySpec = Union[
    Path,
    Cycle,
    Complete,
    Empty,
    Friendship,
    Ladder,
    Grid,
    TriChain,
    OrthoChain,
    Corona,
    Join,
    Cart,
]


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path order must be >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle order must be >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph order must be >= 1")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("empty graph order must be >= 0")
    return Graph.from_edges(n, [])


_BASIC = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "empty": empty_graph,
}


def basic_family(kind: str, n: int) -> Graph:
    """Build one of the base families: path, cycle, complete or empty."""
    try:
        builder = _BASIC[kind]
    except KeyError:
        raise ValueError(f"unknown family kind {kind!r}") from None
    return builder(n)


def corona(g: Graph, h: Graph) -> Graph:
    """Corona product: one copy of h per vertex of g, fully joined to it.

    Vertices of g come first; copy i of h occupies the block starting at
    ``g.vertex_count + i * h.vertex_count``.
    """
    ng, nh = g.vertex_count, h.vertex_count
    edges = list(g.edges())
    h_edges = h.edges()
    for i in range(ng):
        base = ng + i * nh
        edges.extend((base + a, base + b) for a, b in h_edges)
        edges.extend((i, base + j) for j in range(nh))
    return Graph.from_edges(ng + ng * nh, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus every edge between the two vertex sets."""
    ng, nh = g.vertex_count, h.vertex_count
    edges = list(g.edges())
    edges.extend((ng + a, ng + b) for a, b in h.edges())
    edges.extend((u, ng + w) for u in range(ng) for w in range(nh))
    return Graph.from_edges(ng + nh, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex (u, v) maps to index u * |V(h)| + v."""
    nh = h.vertex_count
    edges: list[tuple[int, int]] = []
    h_edges = h.edges()
    for u in range(g.vertex_count):
        edges.extend((u * nh + a, u * nh + b) for a, b in h_edges)
    for u, v in g.edges():
        edges.extend((u * nh + w, v * nh + w) for w in range(nh))
    return Graph.from_edges(g.vertex_count * nh, edges)


def friendship_family(q: int, n: int) -> Graph:
    """n cycles of length q meeting at vertex 0.

    Blade i occupies vertices ``1 + i*(q-1) .. (i+1)*(q-1)``, forming a path
    whose two endpoints both join the center.
    """
    if q < 3:
        raise ValueError("blade cycle length must be >= 3")
    if n < 1:
        raise ValueError("blade count must be >= 1")
    edges: list[tuple[int, int]] = []
    for i in range(n):
        first = 1 + i * (q - 1)
        last = first + q - 2
        edges.extend((w, w + 1) for w in range(first, last))
        edges.append((0, first))
        edges.append((0, last))
    return Graph.from_edges(n * (q - 1) + 1, edges)


def grid(m: int, n: int) -> Graph:
    """m-by-n grid with row-major labels; equals cartesian_product of paths."""
    return cartesian_product(path_graph(m), path_graph(n))


def chain_cactus(kind: str, n: int) -> Graph:
    """Chain of n triangles or n squares joined at consecutive cut-vertices.

    Cut-vertices are labeled 0..n; they are adjacent along the chain. For the
    square chain, each square i is the 4-cycle (i, x_i, y_i, i+1), so the two
    cut-vertices of a square are adjacent inside it.
    """
    if n < 1:
        raise ValueError("chain length must be >= 1")
    edges: list[tuple[int, int]] = [(i, i + 1) for i in range(n)]
    if kind == "triangular":
        for i in range(n):
            apex = n + 1 + i
            edges.append((i, apex))
            edges.append((apex, i + 1))
        return Graph.from_edges(2 * n + 1, edges)
    if kind == "ortho":
        for i in range(n):
            x = n + 1 + 2 * i
            y = x + 1
            edges.append((i, x))
            edges.append((x, y))
            edges.append((y, i + 1))
        return Graph.from_edges(3 * n + 1, edges)
    raise ValueError(f"unknown chain kind {kind!r}")


def realize(spec: FamilySpec) -> Graph:
    """Build the labeled graph for a family spec; deterministic."""
    if isinstance(spec, Path):
        return path_graph(spec.n)
    if isinstance(spec, Cycle):
        return cycle_graph(spec.n)
    if isinstance(spec, Complete):
        return complete_graph(spec.n)
    if isinstance(spec, Empty):
        return empty_graph(spec.n)
    if isinstance(spec, Friendship):
        return friendship_family(spec.q, spec.n)
    if isinstance(spec, Ladder):
        return grid(2, spec.n)
    if isinstance(spec, Grid):
        return grid(spec.m, spec.n)
    if isinstance(spec, TriChain):
        return chain_cactus("triangular", spec.n)
    if isinstance(spec, OrthoChain):
        return chain_cactus("ortho", spec.n)
    if isinstance(spec, Corona):
        return corona(realize(spec.left), realize(spec.right))
    if isinstance(spec, Join):
        return join(realize(spec.left), realize(spec.right))
    if isinstance(spec, Cart):
        return cartesian_product(realize(spec.left), realize(spec.right))
    raise TypeError(f"not a family spec: {spec!r}")
