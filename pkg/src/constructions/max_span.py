"""Interval ((3k/2 - 1)·n - 1)-coloring of K_n^k for even k.

Every part pair (i, j), i < j, falls in exactly one of eight cases. Each case
assigns the whole K_{n,n} block between parts i and j the colors
``block·n + p + q - 1`` where ``block`` is a case-specific offset, so a block
is a diagonal-shift coloring sitting at height ``block·n``. Case ranges use
floors of k/4 and (k-2)/4, and several are empty for small k.
"""

from __future__ import annotations

import logging
from collections.abc import Callable

from src.constructions.coloring import EdgeColoring
from src.errors import CasePartitionError, OddK
from src.graphs.base import PartiteSpec, enumerate_edges

logger = logging.getLogger(__name__)

# (name, range predicate on (i, j, k), block offset in units of n)
Case = tuple[str, Callable[[int, int, int], bool], Callable[[int, int, int], int]]


def _cases() -> list[Case]:
    return [
        (
            "low-low",
            lambda i, j, k: 1 <= i <= k // 4 and 2 <= j <= k // 2 and i < j and i + j <= k // 2 + 1,
            lambda i, j, k: i + j - 3,
        ),
        (
            "low-low-wrapped",
            lambda i, j, k: (
                2 <= i <= k // 2 - 1 and k // 4 + 2 <= j <= k // 2 and i < j and i + j >= k // 2 + 2
            ),
            lambda i, j, k: i + j + k // 2 - 4,
        ),
        (
            "low-high-near",
            lambda i, j, k: 3 <= i <= k // 2 and k // 2 + 1 <= j <= k - 2 and j - i <= k // 2 - 2,
            lambda i, j, k: k // 2 + j - i - 1,
        ),
        (
            "low-high-far",
            lambda i, j, k: 1 <= i <= k // 2 and k // 2 + 1 <= j <= k and j - i >= k // 2,
            lambda i, j, k: j - i - 1,
        ),
        (
            "diagonal-lower",
            lambda i, j, k: (
                2 <= i <= 1 + (k - 2) // 4
                and k // 2 + 1 <= j <= k // 2 + (k - 2) // 4
                and j - i == k // 2 - 1
            ),
            lambda i, j, k: 2 * i - 3,
        ),
        (
            "diagonal-upper",
            lambda i, j, k: (
                (k - 2) // 4 + 2 <= i <= k // 2
                and k // 2 + 1 + (k - 2) // 4 <= j <= k - 1
                and j - i == k // 2 - 1
            ),
            lambda i, j, k: i + j - 3,
        ),
        (
            "high-high",
            lambda i, j, k: (
                k // 2 + 1 <= i <= k // 2 + k // 4 - 1
                and k // 2 + 2 <= j <= k - 2
                and i < j
                and 2 * (i + j) <= 3 * k - 2
            ),
            lambda i, j, k: i + j - k - 1,
        ),
        (
            "high-high-wrapped",
            lambda i, j, k: (
                k // 2 + 1 <= i <= k - 1
                and k // 2 + k // 4 + 1 <= j <= k
                and i < j
                and 2 * (i + j) >= 3 * k
            ),
            lambda i, j, k: i + j - k // 2 - 2,
        ),
    ]


CASES = _cases()


def case_table(k: int) -> dict[tuple[int, int], int]:
    """Map every part pair (i, j) to the index of the single case covering it.

    Raises CasePartitionError when a pair is covered by no case or by several.
    """
    if k % 2:
        raise OddK(f"the max-span coloring needs even k, got k={k}")
    table = {}
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            hits = [idx for idx, (_, covers, _) in enumerate(CASES) if covers(i, j, k)]
            if len(hits) != 1:
                names = [CASES[idx][0] for idx in hits] or ["none"]
                raise CasePartitionError(
                    f"k={k}: part pair ({i},{j}) matched {len(hits)} cases: {', '.join(names)}"
                )
            table[(i, j)] = hits[0]
    return table


def max_span_target(spec: PartiteSpec) -> int:
    return (3 * spec.k // 2 - 1) * spec.n - 1


def max_span_coloring(spec: PartiteSpec, audit: bool = True) -> EdgeColoring:
    """Build the eight-case coloring of K_n^k with (3k/2 - 1)·n - 1 colors."""
    k, n = spec.k, spec.n
    if k % 2 or k < 2:
        raise OddK(f"the max-span coloring needs even k >= 2, got k={k}")

    if audit:
        table = case_table(k)
        offset = {pair: CASES[idx][2](*pair, k) for pair, idx in table.items()}
    else:
        offset = {}
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                block = next(block for _, covers, block in CASES if covers(i, j, k))
                offset[(i, j)] = block(i, j, k)

    colors = tuple(
        offset[(edge.u.part, edge.v.part)] * n + edge.u.index + edge.v.index - 1
        for edge in enumerate_edges(spec)
    )
    t = max_span_target(spec)
    logger.debug("max-span coloring of %s with t=%d", spec, t)
    return EdgeColoring(spec=spec, t=t, colors=colors)
