"""Exact w, W and feasibility spectra by repeated search.

Every query scans t upward from the maximum degree. Each color must be used,
so no interval coloring has more colors than edges and |E| caps every scan.
For regular graphs the feasible values of t form an interval starting at Δ,
which lets the scans stop at the first infeasible t.
"""

from __future__ import annotations

import logging
from enum import Enum

import networkx as nx

from src.constructions.coloring import EdgeColoring
from src.errors import ContiguityViolation, NotColorable, NotIntervalColorable, TargetInfeasibleAtBudget
from src.graphs.base import PartiteSpec
from src.graphs.bounds import is_interval_colorable, max_degree
from src.solver.search import (
    SearchBudget,
    SearchInstance,
    SolveStatus,
    as_instance,
    find_interval_coloring,
)

logger = logging.getLogger(__name__)

Target = SearchInstance | PartiteSpec | nx.Graph


class Feasibility(str, Enum):
    FEASIBLE = "Feasible"
    INFEASIBLE = "Infeasible"
    UNKNOWN = "Unknown"

    @property
    def short(self) -> str:
        return self.value[0]


_FROM_STATUS = {
    SolveStatus.WITNESS: Feasibility.FEASIBLE,
    SolveStatus.PROVEN_INFEASIBLE: Feasibility.INFEASIBLE,
    SolveStatus.BUDGET_EXHAUSTED: Feasibility.UNKNOWN,
}


def _reject_known_uncolorable(instance: SearchInstance) -> None:
    if instance.colorable is False:
        raise NotColorable(f"{instance.label} has no interval coloring (χ' > Δ)")


def _scan_start(instance: SearchInstance) -> int:
    return max(instance.max_degree(), 1)


def exact_w(target: Target, budget: SearchBudget | None = None,
            workers: int = 1, symmetry: bool = False) -> int | None:
    """Least t with an interval t-coloring, or None when the budget runs out first."""
    instance = as_instance(target)
    _reject_known_uncolorable(instance)
    regular = instance.is_regular()
    for t in range(_scan_start(instance), instance.edge_count + 1):
        outcome = find_interval_coloring(instance, t, budget, symmetry=symmetry, workers=workers)
        if outcome.status == SolveStatus.WITNESS:
            return t
        if outcome.status == SolveStatus.BUDGET_EXHAUSTED:
            return None
        if regular:
            break
    raise NotColorable(f"{instance.label} has no interval coloring")


def exact_W(target: Target, budget: SearchBudget | None = None,
            workers: int = 1, symmetry: bool = False) -> int | None:
    """Greatest t with an interval t-coloring, or None when it cannot be bracketed."""
    instance = as_instance(target)
    _reject_known_uncolorable(instance)
    regular = instance.is_regular()
    best = None
    unknown = False
    for t in range(_scan_start(instance), instance.edge_count + 1):
        outcome = find_interval_coloring(instance, t, budget, symmetry=symmetry, workers=workers)
        if outcome.status == SolveStatus.WITNESS:
            best = t
        elif outcome.status == SolveStatus.BUDGET_EXHAUSTED:
            if regular:
                return None
            unknown = True
        elif regular:
            break
    if unknown:
        return None
    if best is None:
        raise NotColorable(f"{instance.label} has no interval coloring")
    return best


def feasible_spectrum(target: Target, t_max: int | None = None,
                      budget: SearchBudget | None = None,
                      workers: int = 1, symmetry: bool = False) -> dict[int, Feasibility]:
    """Feasibility of every t from Δ to ``t_max``.

    Without ``t_max`` the scan runs to |E|, stopping early on a regular
    instance at the first infeasible t after a feasible one. Regular
    instances must come out contiguous; a gap raises ContiguityViolation.
    """
    instance = as_instance(target)
    regular = instance.is_regular()
    stop = instance.edge_count if t_max is None else t_max
    spectrum: dict[int, Feasibility] = {}
    seen_feasible = False
    for t in range(_scan_start(instance), stop + 1):
        outcome = find_interval_coloring(instance, t, budget, symmetry=symmetry, workers=workers)
        spectrum[t] = _FROM_STATUS[outcome.status]
        if spectrum[t] == Feasibility.FEASIBLE:
            seen_feasible = True
        elif spectrum[t] == Feasibility.INFEASIBLE and seen_feasible and regular and t_max is None:
            break

    if regular:
        _check_contiguous(instance.label, spectrum)
    return spectrum


def _check_contiguous(label: str, spectrum: dict[int, Feasibility]) -> None:
    feasible = [t for t, value in spectrum.items() if value == Feasibility.FEASIBLE]
    if not feasible:
        return
    for t in range(min(feasible), max(feasible) + 1):
        if spectrum.get(t) == Feasibility.INFEASIBLE:
            raise ContiguityViolation(
                f"{label}: t={t} is infeasible between feasible {min(feasible)} and {max(feasible)}"
            )


def format_spectrum(spectrum: dict[int, Feasibility]) -> str:
    """``{2:F, 3:F, 4:I}`` style rendering."""
    body = ", ".join(f"{t}:{value.short}" for t, value in sorted(spectrum.items()))
    return "{" + body + "}"


def solver_min_coloring(spec: PartiteSpec, budget: SearchBudget | None = None,
                        workers: int = 1) -> EdgeColoring:
    """A witness interval (k-1)·n-coloring of K_n^k found by search.

    This is the only source of minimal colorings for odd k.
    """
    if not is_interval_colorable(spec):
        raise NotIntervalColorable(f"{spec} has n·k odd and no interval coloring")
    t = max_degree(spec)
    outcome = find_interval_coloring(spec, t, budget, symmetry=True, workers=workers)
    if outcome.status == SolveStatus.WITNESS:
        return outcome.witness
    if outcome.status == SolveStatus.PROVEN_INFEASIBLE:
        raise NotColorable(f"{spec} has no interval {t}-coloring")
    raise TargetInfeasibleAtBudget(
        f"no interval {t}-coloring of {spec} found within budget", outcome=outcome
    )
