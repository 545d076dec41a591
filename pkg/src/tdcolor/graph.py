"""Immutable simple undirected graphs with DIMACS .col import/export.

Vertices are always the contiguous integers ``0 .. vertex_count - 1``.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable

__all__ = ["Graph", "DimacsError"]


class DimacsError(ValueError):
    """Raised for malformed DIMACS .col input."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: no loops, no multi-edges, no direction.

    Instances are immutable and safe to share between concurrent workers.
    ``adjacency[v]`` is the open neighborhood of ``v``.
    """

    vertex_count: int
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        n = self.vertex_count
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adjacency) != n:
            raise ValueError("adjacency size does not match vertex count")
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < n:
                    raise ValueError(f"neighbor {u} of vertex {v} out of range")
                if v not in self.adjacency[u]:
                    raise ValueError(f"asymmetric edge ({v}, {u})")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from an edge list; duplicate edges collapse."""
        adj: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(
                    f"edge ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}"
                )
            if u == v:
                raise ValueError(f"self-loop ({u}, {v}) is not allowed")
            adj[u].add(v)
            adj[v].add(u)
        return cls(vertex_count, tuple(frozenset(s) for s in adj))

    def neighbors(self, v: int) -> frozenset[int]:
        """Open neighborhood of ``v``; never contains ``v`` itself."""
        self._check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        return [
            (u, v)
            for u in range(self.vertex_count)
            for v in sorted(self.adjacency[u])
            if u < v
        ]

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def is_connected(self) -> bool:
        """True iff every vertex is reachable from vertex 0 (true for n <= 1)."""
        if self.vertex_count <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in self.adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.vertex_count

    def has_isolated_vertex(self) -> bool:
        return any(not nbrs for nbrs in self.adjacency)

    def to_dimacs(self) -> str:
        """Serialize as DIMACS .col text: ``p edge n m`` header, 1-based edges."""
        lines = [f"p edge {self.vertex_count} {self.edge_count}"]
        lines.extend(f"e {u + 1} {v + 1}" for u, v in self.edges())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dimacs(cls, text: str) -> Graph:
        """Parse DIMACS .col text.

        Comment lines starting with ``c`` and blank lines are ignored. The
        declared edge count must equal the number of distinct edges.
        """
        vertex_count: int | None = None
        declared = 0
        edges: list[tuple[int, int]] = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("c"):
                continue
            parts = line.split()
            if parts[0] == "p":
                if vertex_count is not None:
                    raise DimacsError("duplicate problem line")
                if len(parts) != 4 or parts[1] != "edge":
                    raise DimacsError(f"malformed problem line: {line!r}")
                try:
                    vertex_count, declared = int(parts[2]), int(parts[3])
                except ValueError:
                    raise DimacsError(f"malformed problem line: {line!r}") from None
                if vertex_count < 0 or declared < 0:
                    raise DimacsError(f"negative counts in problem line: {line!r}")
            elif parts[0] == "e":
                if vertex_count is None:
                    raise DimacsError("edge line before problem line")
                if len(parts) != 3:
                    raise DimacsError(f"malformed edge line: {line!r}")
                try:
                    u, v = int(parts[1]), int(parts[2])
                except ValueError:
                    raise DimacsError(f"malformed edge line: {line!r}") from None
                if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                    raise DimacsError(f"edge ({u}, {v}) out of range 1..{vertex_count}")
                if u == v:
                    raise DimacsError(f"self-loop edge at vertex {u}")
                edges.append((u - 1, v - 1))
            else:
                raise DimacsError(f"unrecognized line: {line!r}")
        if vertex_count is None:
            raise DimacsError("missing problem line")
        g = cls.from_edges(vertex_count, edges)
        if g.edge_count != declared:
            raise DimacsError(
                f"problem line declares {declared} edges, found {g.edge_count} distinct"
            )
        return g

    def canonical_key(self) -> str:
        """Deterministic cache key for this labeled graph.

        Label-sensitive (hash of the sorted edge list), not an isomorphism
        invariant: equal labeled graphs get equal keys, isomorphic relabelings
        generally do not.
        """
        payload = f"{self.vertex_count}|" + ",".join(
            f"{u}-{v}" for u, v in self.edges()
        )
        return hashlib.sha256(payload.encode("ascii")).hexdigest()

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise ValueError(f"vertex {v} out of range 0..{self.vertex_count - 1}")
