"""Plain-text exports of a coloring in canonical edge order."""

from __future__ import annotations

from src.constructions.coloring import CompleteColoring, EdgeColoring

EXPORT_FORMATS = ("edgelist", "matrix")


def export_edgelist(coloring: EdgeColoring | CompleteColoring) -> str:
    """One line per edge: ``i p j q c`` for K_n^k, ``i j c`` for K_m."""
    lines = []
    for edge, color in zip(coloring.edge_list(), coloring.colors):
        if isinstance(coloring, EdgeColoring):
            lines.append(f"{edge.u.part} {edge.u.index} {edge.v.part} {edge.v.index} {color}")
        else:
            lines.append(f"{edge[0]} {edge[1]} {color}")
    return "\n".join(lines) + "\n"


def _grid(rows: list[list[str]]) -> list[str]:
    width = max(len(cell) for row in rows for cell in row)
    return [" ".join(cell.rjust(width) for cell in row) for row in rows]


def export_matrix(coloring: EdgeColoring | CompleteColoring) -> str:
    """Color grids.

    K_n^k gets one n×n block per part pair (i, j), row p and column q holding
    the color of (x_p^(i), x_q^(j)). K_m gets a single symmetric m×m grid
    with ``.`` on the diagonal.
    """
    if isinstance(coloring, CompleteColoring):
        m = coloring.m
        rows = [
            ["." if i == j else str(coloring.color_of(i, j)) for j in range(1, m + 1)]
            for i in range(1, m + 1)
        ]
        return "\n".join(_grid(rows)) + "\n"

    n = coloring.spec.n
    blocks = []
    colors = iter(coloring.colors)
    # canonical order walks each part pair as a contiguous n·n block
    for i in range(1, coloring.spec.k + 1):
        for j in range(i + 1, coloring.spec.k + 1):
            rows = [[str(next(colors)) for _ in range(n)] for _ in range(n)]
            blocks.append("\n".join([f"parts {i}-{j}"] + _grid(rows)))
    return "\n\n".join(blocks) + "\n"


def export_coloring(coloring: EdgeColoring | CompleteColoring, fmt: str) -> str:
    if fmt == "edgelist":
        return export_edgelist(coloring)
    if fmt == "matrix":
        return export_matrix(coloring)
    raise ValueError(f"unknown export format: {fmt}")
