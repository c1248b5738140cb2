"""Bounds tables: one row of closed-form quantities per (k, n), rendered as CSV."""

from __future__ import annotations

import csv
import io
import logging
from collections.abc import Iterable

from pydantic import BaseModel, ConfigDict, model_validator

from src.errors import EmptySet, InvalidSpec
from src.graphs.base import PartiteSpec
from src.graphs.bounds import bound_report
from src.solver.exact import exact_W
from src.solver.search import SearchBudget

logger = logging.getLogger(__name__)

CSV_COLUMNS = (
    "k", "n", "delta", "chi_prime", "colorable", "w",
    "thm3_bound", "thm4_bound", "best_bound", "oracle_W",
)


class BoundsTableRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: int
    n: int
    delta: int
    chi_prime: int
    colorable: bool
    w: int | None = None
    thm3_bound: int | None = None
    thm4_bound: int | None = None
    best_bound: int | None = None
    oracle_W: int | None = None

    @model_validator(mode="after")
    def _consistent(self) -> BoundsTableRow:
        present = [b for b in (self.thm3_bound, self.thm4_bound) if b is not None]
        if present and self.best_bound != max(present):
            raise ValueError(f"best_bound {self.best_bound} is not the largest bound {max(present)}")
        if self.oracle_W is not None and self.best_bound is not None and self.oracle_W < self.best_bound:
            raise ValueError(f"oracle W {self.oracle_W} is below the proven bound {self.best_bound}")
        return self

    def csv_cells(self) -> list[str]:
        cells = []
        for column in CSV_COLUMNS:
            value = getattr(self, column)
            if value is None:
                cells.append("")
            elif isinstance(value, bool):
                cells.append("true" if value else "false")
            else:
                cells.append(str(value))
        return cells


def bounds_row(
    spec: PartiteSpec,
    oracle_max_edges: int = 0,
    budget: SearchBudget | None = None,
) -> BoundsTableRow:
    """Closed forms for one instance; the oracle runs only on small colorable ones."""
    report = bound_report(spec)
    oracle = None
    if report.colorable and spec.edge_count <= oracle_max_edges:
        oracle = exact_W(spec, budget)
        logger.debug("oracle W(%s) = %s", spec, oracle)
    return BoundsTableRow(
        k=spec.k,
        n=spec.n,
        delta=report.delta,
        chi_prime=report.chi_prime,
        colorable=report.colorable,
        w=report.w_value,
        thm3_bound=report.max_span_bound,
        thm4_bound=report.lift_bound,
        best_bound=report.W_lower,
        oracle_W=oracle,
    )


def bounds_table(
    k_values: Iterable[int],
    n_values: Iterable[int],
    oracle_max_edges: int = 0,
    budget: SearchBudget | None = None,
) -> list[BoundsTableRow]:
    """Rows ordered by k, then n."""
    ks, ns = sorted(set(k_values)), sorted(set(n_values))
    if not ks or not ns:
        raise EmptySet("k and n ranges must be non-empty")
    return [
        bounds_row(PartiteSpec(k=k, n=n), oracle_max_edges, budget)
        for k in ks
        for n in ns
    ]


def render_bounds_csv(rows: Iterable[BoundsTableRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.csv_cells())
    return buffer.getvalue()


def parse_range(text: str) -> list[int]:
    """``"2-6"``, ``"4"`` or ``"2,4,8"`` to a sorted list of integers."""
    values: set[int] = set()
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            if "-" in chunk:
                lo, hi = (int(part) for part in chunk.split("-", 1))
                values.update(range(lo, hi + 1))
            else:
                values.add(int(chunk))
        except ValueError as exc:
            raise InvalidSpec(f"cannot read {chunk!r} in range {text!r}") from exc
    if not values:
        raise EmptySet(f"range {text!r} is empty")
    return sorted(values)
