"""Lift an interval coloring of K_k to K_n^k.

Part i of K_n^k replaces vertex u_i of K_k. The block between parts i and j
is colored ``(φ(u_i, u_j) - 1)·n + r + s - 1``, so an interval t-coloring of
K_k becomes an interval ((t+1)·n - 1)-coloring of K_n^k.
"""

from __future__ import annotations

import logging

from src.constructions.coloring import CompleteColoring, EdgeColoring
from src.errors import InvalidBase, InvalidSpec
from src.graphs.base import IntervalSet, PartiteSpec, VertexId, enumerate_edges
from src.verifier.checks import verify

logger = logging.getLogger(__name__)


def lifted_t(base: CompleteColoring, n: int) -> int:
    return (base.t + 1) * n - 1


def lifted_palette(base: CompleteColoring, n: int, vertex: VertexId) -> IntervalSet:
    """Int(j + n·(l(S(u_i)) - 1), (k-1)·n), the palette the lift puts at x_j^(i)."""
    start = vertex.index + n * (base.palette_minimum(vertex.part) - 1)
    return IntervalSet.from_start(start, (base.m - 1) * n)


def lift_coloring(base: CompleteColoring, n: int) -> EdgeColoring:
    """Transport a verified interval coloring of K_k onto K_n^k."""
    if n < 1:
        raise InvalidSpec(f"part size must be >= 1, got n={n}")
    report = verify(base)
    if not report.passed:
        first = report.violations[0].detail if report.violations else "unknown"
        raise InvalidBase(f"base coloring of {base.label} is not an interval coloring: {first}")

    spec = PartiteSpec(k=base.m, n=n)
    colors = tuple(
        (base.color_of(edge.u.part, edge.v.part) - 1) * n + edge.u.index + edge.v.index - 1
        for edge in enumerate_edges(spec)
    )
    t = lifted_t(base, n)
    logger.debug("lifted %s (t=%d) to %s (t=%d)", base.label, base.t, spec, t)
    return EdgeColoring(spec=spec, t=t, colors=colors)
