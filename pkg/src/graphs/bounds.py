"""Closed-form degree, chromatic index and interval-coloring bounds for K_n^k."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict, model_validator

from src.errors import InvalidSpec, NotIntervalColorable, OddM
from src.graphs.base import PartiteSpec


class BoundSource(str, Enum):
    MAX_SPAN = "Theorem3"
    LIFT = "Theorem4"
    LIFTED_FACTORIZATION = "LiftedFactorization"
    NONE = "None"


class BoundReport(BaseModel):
    """Degree, chromatic index, colorability, w and the best lower bound on W."""

    model_config = ConfigDict(frozen=True)

    k: int
    n: int
    delta: int
    chi_prime: int
    colorable: bool
    w_value: int | None = None
    max_span_bound: int | None = None
    lift_bound: int | None = None
    W_lower: int | None = None
    W_lower_source: BoundSource = BoundSource.NONE

    @model_validator(mode="after")
    def _consistent(self) -> BoundReport:
        if self.colorable != (self.chi_prime == self.delta):
            raise ValueError("colorable must hold exactly when chi_prime == delta")
        if self.W_lower is not None and self.w_value is not None and self.W_lower < self.w_value:
            raise ValueError("W_lower below w_value")
        return self


def _require_edges(spec: PartiteSpec) -> None:
    if spec.k < 2:
        raise InvalidSpec(f"{spec} has no edges; coloring quantities need k >= 2")


def two_adic_split(value: int) -> tuple[int, int]:
    """Write ``value = p * 2**q`` with p odd, by repeated halving."""
    if value < 1:
        raise ValueError(f"need a positive integer, got {value}")
    q = 0
    while value % 2 == 0:
        value //= 2
        q += 1
    return value, q


def max_degree(spec: PartiteSpec) -> int:
    """Δ(K_n^k) = (k-1)·n; every vertex attains it."""
    return (spec.k - 1) * spec.n


def chromatic_index(spec: PartiteSpec) -> int:
    _require_edges(spec)
    delta = max_degree(spec)
    return delta if (spec.n * spec.k) % 2 == 0 else delta + 1


def is_interval_colorable(spec: PartiteSpec) -> bool:
    """A regular graph is interval colorable iff χ' = Δ, i.e. iff n·k is even."""
    return chromatic_index(spec) == max_degree(spec)


def w_value(spec: PartiteSpec) -> int:
    """Least number of colors in an interval coloring of K_n^k."""
    if not is_interval_colorable(spec):
        raise NotIntervalColorable(f"{spec} has n·k odd and no interval coloring")
    return max_degree(spec)


def max_span_bound(spec: PartiteSpec) -> int | None:
    """(3k/2 - 1)·n - 1 for even k, None otherwise."""
    _require_edges(spec)
    if spec.k % 2:
        return None
    return (3 * spec.k // 2 - 1) * spec.n - 1


def lift_bound(spec: PartiteSpec) -> int | None:
    """(2k - p - q)·n - 1 for k = p·2^q with q >= 1, None for odd k."""
    _require_edges(spec)
    p, q = two_adic_split(spec.k)
    if q < 1:
        return None
    return (2 * spec.k - p - q) * spec.n - 1


def lifted_factorization_bound(spec: PartiteSpec) -> int | None:
    """k·n - 1: the lift of the (k-1)-color 1-factorization of K_k."""
    _require_edges(spec)
    if spec.k % 2:
        return None
    return spec.k * spec.n - 1


def complete_graph_bound(m: int) -> int:
    """2m - 1 - p - q for even m = p·2^q, the lower bound on W(K_m) lifted from."""
    if m < 2 or m % 2:
        raise OddM(f"K_{m} has no interval coloring bound (m must be even and >= 2)")
    p, q = two_adic_split(m)
    return 2 * m - 1 - p - q


def best_W_lower(spec: PartiteSpec) -> BoundReport:
    """Evaluate every applicable lower bound on W(K_n^k) and keep the largest.

    Ties go to the earlier source in ``BoundSource`` order.
    """
    w = w_value(spec)
    span = max_span_bound(spec)
    lift = lift_bound(spec)
    candidates = [
        (span, BoundSource.MAX_SPAN),
        (lift, BoundSource.LIFT),
        (lifted_factorization_bound(spec), BoundSource.LIFTED_FACTORIZATION),
    ]
    best, source = None, BoundSource.NONE
    for value, origin in candidates:
        if value is not None and (best is None or value > best):
            best, source = value, origin
    return BoundReport(
        k=spec.k,
        n=spec.n,
        delta=max_degree(spec),
        chi_prime=chromatic_index(spec),
        colorable=True,
        w_value=w,
        max_span_bound=span,
        lift_bound=lift,
        W_lower=best,
        W_lower_source=source,
    )


def bound_report(spec: PartiteSpec) -> BoundReport:
    """Like ``best_W_lower`` but also answers for non-colorable instances."""
    if is_interval_colorable(spec):
        return best_W_lower(spec)
    return BoundReport(
        k=spec.k,
        n=spec.n,
        delta=max_degree(spec),
        chi_prime=chromatic_index(spec),
        colorable=False,
    )
