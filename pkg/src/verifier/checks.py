"""Interval t-coloring checks.

A proper coloring with colors 1..t is an interval t-coloring when every color
is used and the colors at each vertex x are d(x) consecutive integers. The
checks here collect every violation instead of stopping at the first one.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from enum import Enum
from typing import Any

import networkx as nx
from pydantic import BaseModel, ConfigDict

from src.constructions.coloring import GraphColoring, BaseColoring
from src.errors import EmptySet


class ViolationKind(str, Enum):
    DUPLICATE_AT_VERTEX = "DuplicateAtVertex"
    GAP_AT_VERTEX = "GapAtVertex"
    UNUSED_COLOR = "UnusedColor"
    COLOR_OUT_OF_RANGE = "ColorOutOfRange"


class Palette(BaseModel):
    """S(x, α): the set of colors on edges at ``vertex``."""

    model_config = ConfigDict(frozen=True)

    vertex: Any
    colors: tuple[int, ...]
    degree: int
    duplicates: tuple[int, ...] = ()

    @property
    def is_interval(self) -> bool:
        return (
            bool(self.colors)
            and self.colors[-1] - self.colors[0] + 1 == len(self.colors) == self.degree
        )


class Violation(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: ViolationKind
    vertex: Any = None
    color: int | None = None
    detail: str = ""


class VerificationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: str
    t: int
    proper: bool
    interval_at_every_vertex: bool
    all_colors_used: bool
    violations: tuple[Violation, ...] = ()

    @property
    def passed(self) -> bool:
        return self.proper and self.interval_at_every_vertex and self.all_colors_used


def is_interval_set(values: Iterable[int]) -> bool:
    """True when the non-empty set has no holes."""
    members = set(values)
    if not members:
        raise EmptySet("an interval is a non-empty set")
    return max(members) - min(members) + 1 == len(members)


def palettes(coloring: BaseColoring) -> list[Palette]:
    """One palette per vertex, in the coloring's vertex order.

    Duplicates are kept on the palette rather than merged away silently.
    """
    coloring.check_length()
    result = []
    for vertex, positions in coloring.incidence().items():
        seen = Counter(coloring.colors[pos] for pos in positions)
        result.append(
            Palette(
                vertex=vertex,
                colors=tuple(sorted(seen)),
                degree=len(positions),
                duplicates=tuple(sorted(c for c, count in seen.items() if count > 1)),
            )
        )
    return result


def verify(coloring: BaseColoring) -> VerificationReport:
    """Check every interval t-coloring axiom and list all violations."""
    t = coloring.t
    order = {v: idx for idx, v in enumerate(coloring.vertex_list())}
    vertex_violations: list[tuple[int, int, Violation]] = []
    color_violations: list[tuple[int, Violation]] = []

    proper = True
    for (u, v), color in zip(coloring.edge_list(), coloring.colors):
        if not 1 <= color <= t:
            proper = False
            a, b = sorted((u, v), key=order.__getitem__)
            color_violations.append((color, Violation(
                kind=ViolationKind.COLOR_OUT_OF_RANGE,
                color=color,
                detail=f"edge ({a}, {b}) has color {color} outside 1..{t}",
            )))

    interval = True
    for palette in palettes(coloring):
        if palette.degree == 0:
            continue
        where = order[palette.vertex]
        for color in palette.duplicates:
            proper = False
            vertex_violations.append((where, color, Violation(
                kind=ViolationKind.DUPLICATE_AT_VERTEX,
                vertex=palette.vertex,
                color=color,
                detail=f"color {color} appears more than once at {palette.vertex}",
            )))
        if not palette.is_interval:
            interval = False
        if not is_interval_set(palette.colors):
            # gaps as ranges; colors may be arbitrarily far apart
            gaps = [(a + 1, b - 1) for a, b in zip(palette.colors, palette.colors[1:]) if b - a > 1]
            missing = ", ".join(str(lo) if lo == hi else f"{lo}..{hi}" for lo, hi in gaps)
            vertex_violations.append((where, gaps[0][0], Violation(
                kind=ViolationKind.GAP_AT_VERTEX,
                vertex=palette.vertex,
                color=gaps[0][0],
                detail=f"palette {list(palette.colors)} at {palette.vertex} misses {missing}",
            )))

    present = set(coloring.colors)
    unused = [c for c in range(1, t + 1) if c not in present]
    for color in unused:
        color_violations.append((color, Violation(
            kind=ViolationKind.UNUSED_COLOR,
            color=color,
            detail=f"no edge has color {color}",
        )))

    vertex_violations.sort(key=lambda item: (item[0], item[1]))
    color_violations.sort(key=lambda item: item[0])
    return VerificationReport(
        label=coloring.label,
        t=t,
        proper=proper,
        interval_at_every_vertex=interval,
        all_colors_used=not unused,
        violations=tuple(v for *_, v in vertex_violations) + tuple(v for _, v in color_violations),
    )


def verify_graph(graph: nx.Graph, colors, t: int) -> VerificationReport:
    """Verify a coloring of an arbitrary simple graph."""
    return verify(GraphColoring.from_graph(graph, colors, t))


def format_verification_report(report: VerificationReport, max_violations: int = 50) -> str:
    """Format a verification report as human-readable text."""
    lines = [f"## Verification Report: {report.label}, t = {report.t}", ""]
    lines.append(f"**Overall Status:** {'PASS' if report.passed else 'FAIL'}")
    lines.append("")
    for name in ("proper", "interval_at_every_vertex", "all_colors_used"):
        icon = "PASS" if getattr(report, name) else "FAIL"
        lines.append(f"  [{icon}] {name}")

    if report.violations:
        lines.append("")
        lines.append(f"### Violations ({len(report.violations)})")
        for violation in report.violations[:max_violations]:
            lines.append(f"  - {violation.kind.value}: {violation.detail}")
        hidden = len(report.violations) - max_violations
        if hidden > 0:
            lines.append(f"  ... {hidden} more")

    return "\n".join(lines)
