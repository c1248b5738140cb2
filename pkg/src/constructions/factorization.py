"""1-factorization of K_m and its blow-up to a minimal coloring of K_n^k."""

from __future__ import annotations

from src.constructions.coloring import CompleteColoring, EdgeColoring
from src.errors import OddK, OddM
from src.graphs.base import PartiteSpec, complete_edges, enumerate_edges


def one_factor_round(m: int, round_idx: int) -> list[tuple[int, int]]:
    """The perfect matching of round ``round_idx`` (0-based) by the circle method.

    Vertex m stays fixed while 1..m-1 rotate one step per round. Pairs are
    returned with the smaller vertex first, sorted.
    """
    if not 0 <= round_idx < m - 1:
        raise ValueError(f"round_idx {round_idx} must satisfy 0 <= round_idx < {m - 1}")
    rotated = list(range(1, m))
    rotated = rotated[round_idx:] + rotated[:round_idx]
    order = [m] + rotated
    pairs = []
    for i in range(m // 2):
        a, b = order[i], order[m - 1 - i]
        pairs.append((a, b) if a < b else (b, a))
    return sorted(pairs)


def round_robin_factorization(m: int) -> CompleteColoring:
    """Proper (m-1)-coloring of K_m whose color classes are perfect matchings.

    Every vertex sees all m-1 colors, so it is an interval (m-1)-coloring.
    """
    if m < 2 or m % 2:
        raise OddM(f"a 1-factorization of K_m needs even m >= 2, got m={m}")
    color_of = {}
    for round_idx in range(m - 1):
        for pair in one_factor_round(m, round_idx):
            color_of[pair] = round_idx + 1
    return CompleteColoring(
        m=m,
        t=m - 1,
        colors=tuple(color_of[pair] for pair in complete_edges(m)),
    )


def blowup_min_coloring(spec: PartiteSpec) -> EdgeColoring:
    """Interval (k-1)·n-coloring of K_n^k for even k.

    The matching edge (a, b) of factor l becomes a K_{n,n} colored inside
    block l: (l-1)·n + ((p+q-2) mod n) + 1. Each vertex meets every factor
    once, so it sees every block in full.
    """
    k, n = spec.k, spec.n
    if k < 2 or k % 2:
        raise OddK(f"the blow-up needs even k >= 2, got k={k}")
    factors = round_robin_factorization(k)
    colors = tuple(
        (factors.color_of(edge.u.part, edge.v.part) - 1) * n
        + (edge.u.index + edge.v.index - 2) % n
        + 1
        for edge in enumerate_edges(spec)
    )
    return EdgeColoring(spec=spec, t=(k - 1) * n, colors=colors)
