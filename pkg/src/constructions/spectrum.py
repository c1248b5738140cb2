"""One verified coloring of K_n^k for every t from (k-1)·n up to the best top construction."""

from __future__ import annotations

import logging

from src.constructions.coloring import CompleteColoring, EdgeColoring
from src.constructions.complete import complete_graph_coloring
from src.constructions.compress import compress_chain
from src.constructions.lift import lift_coloring, lifted_t
from src.constructions.max_span import max_span_coloring
from src.errors import InvalidSpec, NotIntervalColorable, NotVerified, RangeUnavailable, TargetInfeasibleAtBudget
from src.graphs.base import PartiteSpec
from src.graphs.bounds import is_interval_colorable, lift_bound, max_degree, max_span_bound
from src.output.document import load_builtin_bases
from src.solver.search import SearchBudget
from src.verifier.checks import verify

logger = logging.getLogger(__name__)


def _find_base(
    k: int,
    base: CompleteColoring | None,
    search_base: bool,
    budget: SearchBudget | None,
) -> CompleteColoring | None:
    if base is not None:
        if base.m != k:
            raise InvalidSpec(f"base colors K_{base.m} but K_{k} is needed")
        return base
    builtin = load_builtin_bases().get(k)
    if builtin is not None:
        return builtin
    if not search_base:
        return None
    try:
        return complete_graph_coloring(k, budget=budget)
    except TargetInfeasibleAtBudget as exc:
        logger.info("no base at the lift bound for K_%d; using t=%d", k, exc.baseline.t)
        return exc.baseline


def top_coloring(
    spec: PartiteSpec,
    base: CompleteColoring | None = None,
    search_base: bool = False,
    budget: SearchBudget | None = None,
) -> EdgeColoring:
    """The widest interval coloring available for even k.

    The max-span coloring is replaced by a lift only when the lift bound is
    larger and a base with enough colors is at hand.
    """
    top = max_span_coloring(spec)
    lift_target = lift_bound(spec)
    if lift_target is None or lift_target <= max_span_bound(spec):
        return top
    chosen = _find_base(spec.k, base, search_base, budget)
    if chosen is not None and lifted_t(chosen, spec.n) > top.t:
        top = lift_coloring(chosen, spec.n)
    return top


def spectrum_sweep(
    spec: PartiteSpec,
    base: CompleteColoring | None = None,
    search_base: bool = False,
    budget: SearchBudget | None = None,
) -> dict[int, EdgeColoring]:
    """Map t to a verified interval t-coloring for every t in the reachable range."""
    if not is_interval_colorable(spec):
        raise NotIntervalColorable(f"{spec} has n·k odd and no interval coloring")
    if spec.k % 2:
        raise RangeUnavailable(
            f"no construction covers {spec} for odd k; use the solver for single values of t"
        )

    top = top_coloring(spec, base, search_base, budget)
    chain = compress_chain(top)
    for coloring in chain:
        if not verify(coloring).passed:
            raise NotVerified(f"{spec} at t={coloring.t} failed verification")

    logger.info("spectrum of %s covers t = %d..%d", spec, max_degree(spec), top.t)
    return {coloring.t: coloring for coloring in reversed(chain)}
