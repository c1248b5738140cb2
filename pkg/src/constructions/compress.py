"""Spectrum compression for regular graphs.

In an interval t-coloring of a Δ-regular graph both ends of a color-1 edge
have palette exactly Int(1, Δ), so color Δ+1 is free at both. Recoloring
every color-1 edge to Δ+1 and then shifting all colors down by one gives an
interval (t-1)-coloring.
"""

from __future__ import annotations

import logging

from src.constructions.coloring import BaseColoring
from src.errors import AlreadyMinimal, NotRegular, NotVerified
from src.verifier.checks import verify

logger = logging.getLogger(__name__)


def compress(coloring: BaseColoring) -> BaseColoring:
    """One step down: an interval t-coloring becomes an interval (t-1)-coloring."""
    if not coloring.is_regular():
        raise NotRegular(f"{coloring.label} is not regular")
    report = verify(coloring)
    if not report.passed:
        raise NotVerified(
            f"{coloring.label} with t={coloring.t} is not an interval coloring "
            f"({len(report.violations)} violations)"
        )
    delta = coloring.max_degree()
    if coloring.t <= delta:
        raise AlreadyMinimal(f"{coloring.label} already uses t = Δ = {delta} colors")

    colors = tuple(delta if c == 1 else c - 1 for c in coloring.colors)
    logger.debug("compressed %s from t=%d to t=%d", coloring.label, coloring.t, coloring.t - 1)
    return coloring.recolored(colors, coloring.t - 1)


def compress_chain(coloring: BaseColoring, stop_at: int | None = None) -> list[BaseColoring]:
    """The input followed by every compression step down to ``stop_at`` (default Δ)."""
    floor = coloring.max_degree() if stop_at is None else stop_at
    chain = [coloring]
    while chain[-1].t > floor:
        chain.append(compress(chain[-1]))
    return chain
