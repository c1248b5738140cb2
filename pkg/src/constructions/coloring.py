"""Edge coloring value types.

A coloring is a flat color array aligned to a canonical edge order plus a
declared color count ``t``. Construction checks the array length only;
properness, palettes, surjectivity and the color range are the verifier's job.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Hashable, Mapping, Sequence
from typing import Any

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.errors import LengthMismatch
from src.graphs.base import (
    PartiteSpec,
    complete_edges,
    edge_positions,
    enumerate_edges,
    enumerate_vertices,
)


class BaseColoring(BaseModel):
    """Shared behaviour; subclasses define the vertex and edge orders."""

    model_config = ConfigDict(frozen=True)

    t: int = Field(ge=1)
    colors: tuple[int, ...]

    def edge_list(self) -> Sequence[tuple[Any, Any]]:
        raise NotImplementedError

    def vertex_list(self) -> Sequence[Any]:
        raise NotImplementedError

    @property
    def label(self) -> str:
        raise NotImplementedError

    def check_length(self) -> None:
        expected = len(self.edge_list())
        if len(self.colors) != expected:
            raise LengthMismatch(
                f"{self.label}: {len(self.colors)} colors for {expected} edges"
            )

    def incidence(self) -> dict[Any, list[int]]:
        """Vertex -> positions of its incident edges, in canonical order."""
        incident: dict[Any, list[int]] = {v: [] for v in self.vertex_list()}
        for pos, (u, v) in enumerate(self.edge_list()):
            incident[u].append(pos)
            incident[v].append(pos)
        return incident

    def degrees(self) -> dict[Any, int]:
        counts: dict[Any, int] = defaultdict(int)
        for u, v in self.edge_list():
            counts[u] += 1
            counts[v] += 1
        return {v: counts[v] for v in self.vertex_list()}

    def max_degree(self) -> int:
        return max(self.degrees().values(), default=0)

    def is_regular(self) -> bool:
        return len(set(self.degrees().values())) <= 1

    def recolored(self, colors: Sequence[int], t: int):
        """Same graph, new colors and color count."""
        raise NotImplementedError


class EdgeColoring(BaseColoring):
    """A coloring of K_n^k aligned to ``enumerate_edges(spec)``."""

    spec: PartiteSpec

    @model_validator(mode="after")
    def _length(self) -> EdgeColoring:
        self.check_length()
        return self

    @property
    def label(self) -> str:
        return str(self.spec)

    def edge_list(self):
        return enumerate_edges(self.spec)

    def vertex_list(self):
        return enumerate_vertices(self.spec)

    def color_of(self, edge) -> int:
        return self.colors[edge_positions(self.spec)[edge]]

    def degrees(self) -> dict[Any, int]:
        degree = (self.spec.k - 1) * self.spec.n
        return {v: degree for v in self.vertex_list()}

    def recolored(self, colors: Sequence[int], t: int) -> EdgeColoring:
        return EdgeColoring(spec=self.spec, t=t, colors=tuple(colors))


class CompleteColoring(BaseColoring):
    """A coloring of K_m aligned to ``complete_edges(m)``."""

    m: int = Field(ge=2)

    @model_validator(mode="after")
    def _length(self) -> CompleteColoring:
        self.check_length()
        return self

    @property
    def label(self) -> str:
        return f"K_{self.m}"

    def edge_list(self):
        return complete_edges(self.m)

    def vertex_list(self):
        return range(1, self.m + 1)

    def color_of(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        # position of (i, j) in lexicographic pair order
        pos = (i - 1) * self.m - (i - 1) * i // 2 + (j - i - 1)
        return self.colors[pos]

    def palette_minimum(self, vertex: int) -> int:
        """l(S(u, φ)): smallest color at a vertex."""
        return min(
            self.color_of(vertex, other)
            for other in self.vertex_list()
            if other != vertex
        )

    def degrees(self) -> dict[Any, int]:
        return {v: self.m - 1 for v in self.vertex_list()}

    def recolored(self, colors: Sequence[int], t: int) -> CompleteColoring:
        return CompleteColoring(m=self.m, t=t, colors=tuple(colors))


class GraphColoring(BaseColoring):
    """A coloring of an arbitrary simple graph with sortable vertex labels."""

    vertices: tuple[Hashable, ...]
    edges: tuple[tuple[Hashable, Hashable], ...]

    @model_validator(mode="after")
    def _length(self) -> GraphColoring:
        self.check_length()
        return self

    @property
    def label(self) -> str:
        return f"graph({len(self.vertices)} vertices, {len(self.edges)} edges)"

    def edge_list(self):
        return self.edges

    def vertex_list(self):
        return self.vertices

    @staticmethod
    def canonical_edges(graph: nx.Graph) -> tuple[tuple[Hashable, Hashable], ...]:
        """Edges oriented (smaller, larger) and sorted."""
        return tuple(sorted(tuple(sorted(edge)) for edge in graph.edges()))

    @classmethod
    def from_graph(
        cls,
        graph: nx.Graph,
        colors: Mapping[tuple[Hashable, Hashable], int] | Sequence[int],
        t: int,
    ) -> GraphColoring:
        """Build from a networkx graph.

        ``colors`` is either aligned to ``canonical_edges(graph)`` or keyed by
        edge in either orientation.
        """
        edges = cls.canonical_edges(graph)
        if isinstance(colors, Mapping):
            aligned = []
            for u, v in edges:
                aligned.append(colors[(u, v)] if (u, v) in colors else colors[(v, u)])
            colors = aligned
        return cls(
            vertices=tuple(sorted(graph.nodes())),
            edges=edges,
            t=t,
            colors=tuple(colors),
        )

    def recolored(self, colors: Sequence[int], t: int) -> GraphColoring:
        return GraphColoring(vertices=self.vertices, edges=self.edges, t=t, colors=tuple(colors))


AnyColoring = EdgeColoring | CompleteColoring | GraphColoring
