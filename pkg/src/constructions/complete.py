"""Interval colorings of K_m for even m, aimed at a target color count.

No closed-form construction reaching 2m - 1 - p - q colors is implemented,
so this tries, in order, the round-robin baseline, the verified bases
shipped with the package, and backtracking search. A target is never
reported as met without a verified coloring.
"""

from __future__ import annotations

import logging

from src.constructions.coloring import CompleteColoring
from src.constructions.compress import compress_chain
from src.constructions.factorization import round_robin_factorization
from src.errors import BadT, OddM, TargetInfeasibleAtBudget
from src.graphs.bounds import complete_graph_bound
from src.output.document import load_builtin_bases
from src.solver.search import SearchBudget, SolveStatus, find_interval_coloring, instance_for_complete

logger = logging.getLogger(__name__)


def complete_graph_coloring(
    k: int,
    target_t: int | None = None,
    budget: SearchBudget | None = None,
    workers: int = 1,
    symmetry: bool = True,
    use_builtin: bool = True,
) -> CompleteColoring:
    """A verified interval coloring of K_k with exactly ``target_t`` colors.

    ``target_t`` defaults to 2k - 1 - p - q. When it cannot be reached,
    TargetInfeasibleAtBudget carries the best verified coloring found as
    ``baseline``.
    """
    if k < 2 or k % 2:
        raise OddM(f"K_{k} has no interval coloring (k must be even and >= 2)")
    target = complete_graph_bound(k) if target_t is None else target_t
    if target < k - 1:
        raise BadT(f"t={target} is below the maximum degree {k - 1} of K_{k}")

    best = round_robin_factorization(k)
    if target == best.t:
        return best

    if use_builtin:
        builtin = load_builtin_bases().get(k)
        if builtin is not None:
            if builtin.t >= target:
                logger.debug("using built-in base for K_%d (t=%d)", k, builtin.t)
                return compress_chain(builtin, stop_at=target)[-1]
            best = builtin

    logger.info("searching for an interval %d-coloring of K_%d", target, k)
    outcome = find_interval_coloring(
        instance_for_complete(k), target, budget, symmetry=symmetry, workers=workers
    )
    if outcome.status == SolveStatus.WITNESS:
        return outcome.witness

    reason = "proven infeasible" if outcome.status == SolveStatus.PROVEN_INFEASIBLE else "budget exhausted"
    logger.warning("K_%d at t=%d: %s; best verified t is %d", k, target, reason, best.t)
    raise TargetInfeasibleAtBudget(
        f"K_{k} at t={target}: {reason} after {outcome.nodes_explored} nodes",
        baseline=best,
        outcome=outcome,
    )
