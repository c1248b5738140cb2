"""Closed-form palette audit for the max-span coloring of K_n^k (k even).

Each vertex x_j^(i) of the max-span coloring has palette Int(start, (k-1)·n)
where the start depends only on which band part i falls in.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict

from src.constructions.coloring import EdgeColoring
from src.errors import OddK
from src.graphs.base import IntervalSet, PartiteSpec, VertexId
from src.verifier.checks import palettes


class PaletteMismatch(BaseModel):
    model_config = ConfigDict(frozen=True)

    vertex: VertexId
    expected: IntervalSet
    actual: tuple[int, ...]


def expected_palette(spec: PartiteSpec, vertex: VertexId) -> IntervalSet:
    """The interval the max-span coloring puts at ``vertex``."""
    k, n = spec.k, spec.n
    if k % 2:
        raise OddK(f"closed-form palettes exist only for even k, got k={k}")
    i, j = vertex.part, vertex.index
    half = k // 2
    if i <= 2:
        start = j
    elif i <= half:
        start = j + n * (i - 2)
    elif i <= k - 2:
        start = j + n * (i - half)
    else:
        start = j + n * (half - 1)
    return IntervalSet.from_start(start, (k - 1) * n)


def palette_formula_check(coloring: EdgeColoring) -> tuple[bool, list[PaletteMismatch]]:
    """Compare every vertex palette with its closed form; return all mismatches."""
    mismatches = []
    for palette in palettes(coloring):
        expected = expected_palette(coloring.spec, palette.vertex)
        if palette.duplicates or palette.colors != expected.members():
            mismatches.append(
                PaletteMismatch(vertex=palette.vertex, expected=expected, actual=palette.colors)
            )
    return not mismatches, mismatches
