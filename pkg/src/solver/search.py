"""Exhaustive backtracking search for interval t-colorings.

The search assigns one edge per node. An edge's candidates are the colors
still free at both endpoints and inside both endpoints' feasible windows: a
vertex x of degree d whose assigned colors span [lo, hi] can only finish as
an interval inside [hi - d + 1, lo + d - 1]. The next edge is the one with
the fewest candidates, ties broken by canonical edge position, so sequential
runs are deterministic.
"""

from __future__ import annotations

import logging
import multiprocessing
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from enum import Enum

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.constructions.coloring import (
    AnyColoring,
    CompleteColoring,
    EdgeColoring,
    GraphColoring,
)
from src.errors import BadT, InvalidSpec, NotVerified
from src.graphs.base import PartiteSpec
from src.graphs.bounds import is_interval_colorable
from src.verifier.checks import verify

logger = logging.getLogger(__name__)

# Nodes between wall-clock and shared-counter checks.
CHECK_INTERVAL = 1024


class SearchBudget(BaseModel):
    """Per-query limits: explored nodes and wall-clock seconds."""

    model_config = ConfigDict(frozen=True)

    max_nodes: int = Field(default=100_000_000, gt=0)
    max_seconds: float = Field(default=60.0, gt=0)


class SolveStatus(str, Enum):
    WITNESS = "Witness"
    PROVEN_INFEASIBLE = "ProvenInfeasible"
    BUDGET_EXHAUSTED = "BudgetExhausted"


class SolveOutcome(BaseModel):
    model_config = ConfigDict(frozen=True)

    status: SolveStatus
    t: int
    witness: AnyColoring | None = None
    nodes_explored: int = 0

    @model_validator(mode="after")
    def _witness_matches_status(self) -> SolveOutcome:
        if (self.status == SolveStatus.WITNESS) != (self.witness is not None):
            raise ValueError("a witness is present exactly when the status is Witness")
        return self


class SearchInstance(BaseModel):
    """A graph to search over, carried as an all-ones coloring of it.

    The template fixes the vertex and edge order and knows how to rebuild a
    coloring of the right type from a color array. ``edge_transitive``
    allows fixing the first edge to color 1. ``colorable`` is set when a
    closed form already decides interval colorability.
    """

    model_config = ConfigDict(frozen=True)

    template: AnyColoring
    edge_transitive: bool = False
    colorable: bool | None = None

    @property
    def label(self) -> str:
        return self.template.label

    @property
    def edge_count(self) -> int:
        return len(self.template.colors)

    def max_degree(self) -> int:
        return self.template.max_degree()

    def is_regular(self) -> bool:
        return self.template.is_regular()

    def coloring(self, colors, t: int) -> AnyColoring:
        return self.template.recolored(colors, t)


def instance_for_spec(spec: PartiteSpec) -> SearchInstance:
    if spec.k < 2:
        raise InvalidSpec(f"{spec} has no edges to color")
    template = EdgeColoring(spec=spec, t=1, colors=(1,) * spec.edge_count)
    return SearchInstance(
        template=template, edge_transitive=True, colorable=is_interval_colorable(spec)
    )


def instance_for_complete(m: int) -> SearchInstance:
    if m < 2:
        raise InvalidSpec(f"K_{m} has no edges to color")
    template = CompleteColoring(m=m, t=1, colors=(1,) * (m * (m - 1) // 2))
    # K_m is regular of degree m-1, so colorable exactly when m is even
    return SearchInstance(template=template, edge_transitive=True, colorable=m % 2 == 0)


def instance_for_graph(graph: nx.Graph) -> SearchInstance:
    """Arbitrary graphs are never assumed edge-transitive."""
    template = GraphColoring.from_graph(graph, [1] * graph.number_of_edges(), 1)
    return SearchInstance(template=template)


def as_instance(target: SearchInstance | PartiteSpec | nx.Graph) -> SearchInstance:
    if isinstance(target, SearchInstance):
        return target
    if isinstance(target, PartiteSpec):
        return instance_for_spec(target)
    if isinstance(target, nx.Graph):
        return instance_for_graph(target)
    raise InvalidSpec(f"cannot search over {type(target).__name__}")


class _Frame:
    __slots__ = ("edge", "candidates", "pos", "color", "saved")

    def __init__(self, edge: int, candidates: list[int]):
        self.edge = edge
        self.candidates = candidates
        self.pos = 0
        self.color = 0
        self.saved: tuple[int, int, int, int] | None = None


# Sentinel returned by _Search.expand when every edge is colored.
_COMPLETE = object()


class _Search:
    """Mutable search state over one instance and one t."""

    def __init__(self, instance: SearchInstance, t: int, budget: SearchBudget,
                 counter=None, stop=None):
        template = instance.template
        index = {v: pos for pos, v in enumerate(template.vertex_list())}
        self.edges = [(index[u], index[v]) for u, v in template.edge_list()]
        vertex_count = len(index)
        self.degree = [0] * vertex_count
        for u, v in self.edges:
            self.degree[u] += 1
            self.degree[v] += 1

        self.t = t
        self.colors = [0] * len(self.edges)
        self.used: list[set[int]] = [set() for _ in range(vertex_count)]
        self.low = [t + 1] * vertex_count
        self.high = [0] * vertex_count
        self.class_size = [0] * (t + 1)
        self.unused = t
        self.remaining = len(self.edges)

        self.budget = budget
        self.deadline = time.monotonic() + budget.max_seconds
        self.nodes = 0
        self.exhausted = False
        self.counter = counter
        self.stop = stop
        self._unreported = 0

    def candidates(self, edge: int) -> list[int]:
        u, v = self.edges[edge]
        lo, hi = 1, self.t
        for x in (u, v):
            if self.used[x]:
                lo = max(lo, self.high[x] - self.degree[x] + 1)
                hi = min(hi, self.low[x] + self.degree[x] - 1)
        used_u, used_v = self.used[u], self.used[v]
        return [c for c in range(lo, hi + 1) if c not in used_u and c not in used_v]

    def assign(self, edge: int, color: int) -> tuple[int, int, int, int]:
        u, v = self.edges[edge]
        saved = (self.low[u], self.high[u], self.low[v], self.high[v])
        self.colors[edge] = color
        for x in (u, v):
            self.used[x].add(color)
            self.low[x] = min(self.low[x], color)
            self.high[x] = max(self.high[x], color)
        if self.class_size[color] == 0:
            self.unused -= 1
        self.class_size[color] += 1
        self.remaining -= 1
        return saved

    def unassign(self, edge: int, color: int, saved: tuple[int, int, int, int]) -> None:
        u, v = self.edges[edge]
        self.colors[edge] = 0
        self.used[u].discard(color)
        self.used[v].discard(color)
        self.low[u], self.high[u], self.low[v], self.high[v] = saved
        self.class_size[color] -= 1
        if self.class_size[color] == 0:
            self.unused += 1
        self.remaining += 1

    def _out_of_budget(self) -> bool:
        if self.nodes > self.budget.max_nodes:
            return True
        self._unreported += 1
        if self._unreported < CHECK_INTERVAL:
            return False
        self._unreported = 0
        if time.monotonic() > self.deadline:
            return True
        if self.counter is not None:
            with self.counter.get_lock():
                self.counter.value += CHECK_INTERVAL
                if self.counter.value > self.budget.max_nodes:
                    return True
        return self.stop is not None and self.stop.is_set()

    def expand(self):
        """Visit a node: _COMPLETE, a frame to branch on, or None to backtrack."""
        self.nodes += 1
        if self._out_of_budget():
            self.exhausted = True
            return None
        if self.remaining == 0:
            return _COMPLETE if self.unused == 0 else None
        if self.unused > self.remaining:
            return None

        best: _Frame | None = None
        for edge, color in enumerate(self.colors):
            if color:
                continue
            options = self.candidates(edge)
            if not options:
                return None
            if best is None or len(options) < len(best.candidates):
                best = _Frame(edge, options)
                if len(options) == 1:
                    break
        return best

    def run(self) -> bool:
        """Depth-first search from the current partial assignment."""
        root = self.expand()
        if root is _COMPLETE:
            return True
        frames = [root] if root is not None else []
        while frames:
            if self.exhausted:
                return False
            top = frames[-1]
            if top.saved is not None:
                self.unassign(top.edge, top.color, top.saved)
                top.saved = None
            if top.pos == len(top.candidates):
                frames.pop()
                continue
            top.color = top.candidates[top.pos]
            top.pos += 1
            top.saved = self.assign(top.edge, top.color)
            child = self.expand()
            if child is _COMPLETE:
                return True
            if child is not None:
                frames.append(child)
        return False

    def fix_first_edge(self) -> None:
        if self.edges:
            self.assign(0, 1)


def _check_t(instance: SearchInstance, t: int) -> None:
    delta = instance.max_degree()
    if t < max(delta, 1):
        raise BadT(f"t={t} is below the maximum degree {delta} of {instance.label}")


def _outcome(instance: SearchInstance, search: _Search, found: bool, nodes: int) -> SolveOutcome:
    t = search.t
    if found:
        witness = instance.coloring(search.colors, t)
        if not verify(witness).passed:
            raise NotVerified(f"search produced an invalid coloring of {instance.label} at t={t}")
        return SolveOutcome(status=SolveStatus.WITNESS, t=t, witness=witness, nodes_explored=nodes)
    status = SolveStatus.BUDGET_EXHAUSTED if search.exhausted else SolveStatus.PROVEN_INFEASIBLE
    return SolveOutcome(status=status, t=t, nodes_explored=nodes)


def find_interval_coloring(
    target: SearchInstance | PartiteSpec | nx.Graph,
    t: int,
    budget: SearchBudget | None = None,
    symmetry: bool = False,
    workers: int = 1,
) -> SolveOutcome:
    """Find an interval t-coloring or prove there is none.

    ``symmetry`` fixes the first edge to color 1 and is honoured only on
    edge-transitive instances. ``workers > 1`` splits the search on the first
    branching edge's colors across processes; the status agrees with the
    sequential run but the witness may differ.
    """
    instance = as_instance(target)
    _check_t(instance, t)
    # every color needs its own edge
    if t > instance.edge_count:
        logger.debug("%s at t=%d: more colors than its %d edges", instance.label, t, instance.edge_count)
        return SolveOutcome(status=SolveStatus.PROVEN_INFEASIBLE, t=t, nodes_explored=0)
    budget = budget or SearchBudget()
    use_symmetry = symmetry and instance.edge_transitive
    if symmetry and not instance.edge_transitive:
        logger.debug("symmetry reduction ignored: %s is not known to be edge-transitive", instance.label)

    if workers > 1:
        outcome = _solve_parallel(instance, t, budget, use_symmetry, workers)
    else:
        search = _Search(instance, t, budget)
        if use_symmetry:
            search.fix_first_edge()
        found = search.run()
        outcome = _outcome(instance, search, found, search.nodes)

    logger.debug(
        "%s at t=%d: %s after %d nodes",
        instance.label, t, outcome.status.value, outcome.nodes_explored,
    )
    if outcome.status == SolveStatus.BUDGET_EXHAUSTED:
        logger.info("budget exhausted on %s at t=%d", instance.label, t)
    return outcome


# ── Parallel mode ──

_shared: dict = {}


def _init_worker(counter, stop) -> None:
    _shared["counter"] = counter
    _shared["stop"] = stop


def _run_branch(instance: SearchInstance, t: int, budget: SearchBudget, symmetry: bool,
                edge: int, color: int) -> tuple[str, list[int], int]:
    search = _Search(instance, t, budget, counter=_shared.get("counter"), stop=_shared.get("stop"))
    if symmetry:
        search.fix_first_edge()
    search.assign(edge, color)
    found = search.run()
    if found:
        status = SolveStatus.WITNESS
    elif search.exhausted:
        status = SolveStatus.BUDGET_EXHAUSTED
    else:
        status = SolveStatus.PROVEN_INFEASIBLE
    return status.value, list(search.colors), search.nodes


def _solve_parallel(instance: SearchInstance, t: int, budget: SearchBudget,
                    symmetry: bool, workers: int) -> SolveOutcome:
    root = _Search(instance, t, budget)
    if symmetry:
        root.fix_first_edge()
    frame = root.expand()
    if frame is _COMPLETE or frame is None:
        return _outcome(instance, root, frame is _COMPLETE, root.nodes)

    counter = multiprocessing.Value("q", 0)
    stop = multiprocessing.Event()
    nodes = root.nodes
    statuses = []
    with ProcessPoolExecutor(
        max_workers=workers, initializer=_init_worker, initargs=(counter, stop)
    ) as executor:
        futures = [
            executor.submit(_run_branch, instance, t, budget, symmetry, frame.edge, color)
            for color in frame.candidates
        ]
        for future in as_completed(futures):
            status, colors, branch_nodes = future.result()
            nodes += branch_nodes
            statuses.append(SolveStatus(status))
            if status == SolveStatus.WITNESS.value:
                stop.set()
                for other in futures:
                    other.cancel()
                witness = instance.coloring(colors, t)
                if not verify(witness).passed:
                    raise NotVerified(f"search produced an invalid coloring of {instance.label} at t={t}")
                return SolveOutcome(status=SolveStatus.WITNESS, t=t, witness=witness, nodes_explored=nodes)

    if all(status == SolveStatus.PROVEN_INFEASIBLE for status in statuses):
        return SolveOutcome(status=SolveStatus.PROVEN_INFEASIBLE, t=t, nodes_explored=nodes)
    return SolveOutcome(status=SolveStatus.BUDGET_EXHAUSTED, t=t, nodes_explored=nodes)
