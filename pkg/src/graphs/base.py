"""Vertex and edge sets of K_n^k and K_m.

Everything is 1-based: vertex x_j^(i) is ``VertexId(part=i, index=j)``.
The canonical edge order defined here is the serialization contract for
every coloring in the package.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import NamedTuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator


class PartiteSpec(BaseModel):
    """The pair (k, n) defining K_n^k."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=1)
    n: int = Field(ge=1)

    @property
    def vertex_count(self) -> int:
        return self.k * self.n

    @property
    def edge_count(self) -> int:
        return self.n * self.n * self.k * (self.k - 1) // 2

    def __str__(self) -> str:
        return f"K_{self.n}^{self.k}"


class VertexId(NamedTuple):
    part: int
    index: int

    def __str__(self) -> str:
        return f"x_{self.index}^({self.part})"


class EdgeId(NamedTuple):
    """Cross-part edge, stored with ``u.part < v.part``."""

    u: VertexId
    v: VertexId

    def __str__(self) -> str:
        return f"({self.u},{self.v})"


class IntervalSet(BaseModel):
    """The integer interval {lo, ..., hi}; ``Int(q, h)`` is ``from_start(q, h)``."""

    model_config = ConfigDict(frozen=True)

    lo: int
    hi: int

    @model_validator(mode="after")
    def _ordered(self) -> IntervalSet:
        if self.lo > self.hi:
            raise ValueError(f"empty interval: lo={self.lo} > hi={self.hi}")
        return self

    @classmethod
    def from_start(cls, q: int, h: int) -> IntervalSet:
        return cls(lo=q, hi=q + h - 1)

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def shift(self, p: int) -> IntervalSet:
        """D ⊕ p: same size, start moved by p."""
        return IntervalSet(lo=self.lo + p, hi=self.hi + p)

    def as_range(self) -> range:
        return range(self.lo, self.hi + 1)

    def members(self) -> tuple[int, ...]:
        return tuple(self.as_range())

    def __contains__(self, value: int) -> bool:
        return self.lo <= value <= self.hi

    def __str__(self) -> str:
        return f"Int({self.lo},{self.size})"


@lru_cache(maxsize=256)
def enumerate_vertices(spec: PartiteSpec) -> tuple[VertexId, ...]:
    """All vertices ordered by (part, index)."""
    return tuple(
        VertexId(i, j) for i in range(1, spec.k + 1) for j in range(1, spec.n + 1)
    )


@lru_cache(maxsize=256)
def enumerate_edges(spec: PartiteSpec) -> tuple[EdgeId, ...]:
    """Canonical edge order: lexicographic by (u.part, v.part, u.index, v.index)."""
    return tuple(
        EdgeId(VertexId(i, p), VertexId(j, q))
        for i in range(1, spec.k + 1)
        for j in range(i + 1, spec.k + 1)
        for p in range(1, spec.n + 1)
        for q in range(1, spec.n + 1)
    )


@lru_cache(maxsize=256)
def edge_positions(spec: PartiteSpec) -> dict[EdgeId, int]:
    """Map each edge to its 0-based position in the canonical order."""
    return {edge: pos for pos, edge in enumerate(enumerate_edges(spec))}


def vertex_degrees(spec: PartiteSpec) -> dict[VertexId, int]:
    """Degrees counted from the edge enumeration (not from the formula)."""
    counts: Counter[VertexId] = Counter()
    for edge in enumerate_edges(spec):
        counts[edge.u] += 1
        counts[edge.v] += 1
    return {v: counts[v] for v in enumerate_vertices(spec)}


@lru_cache(maxsize=64)
def complete_edges(m: int) -> tuple[tuple[int, int], ...]:
    """Canonical K_m edge order: lexicographic pairs (i, j), 1 <= i < j <= m."""
    return tuple((i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1))


def partite_graph(spec: PartiteSpec) -> nx.Graph:
    """K_n^k as a networkx graph on VertexId nodes."""
    graph = nx.Graph()
    graph.add_nodes_from(enumerate_vertices(spec))
    graph.add_edges_from(enumerate_edges(spec))
    return graph
