"""Removable edges of a Skolem circle.

Edge ``e_p`` (joining positions ``p`` and ``p % 2m + 1``) is removable when
cutting it leaves a path on which every symbol is still at distance equal
to itself, i.e. when the cut yields a Skolem sequence.

Two independent routes are provided:

- :func:`removable_edges_oracle` checks every edge against every short arc;
- :func:`interior_mask` / :func:`removable_count_weight` /
  :func:`removable_edges_fast` mark the cells strictly inside the arcs of
  symbols ``2..m-1`` and read the removable edges off the unmarked cells.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CircleLabeling, SkolemTypeSeq, _as_symbols, cut, pairs_from_symbols

__all__ = [
    "InteriorMask",
    "RemovabilityReport",
    "interior_mask",
    "removable_count_weight",
    "removable_edges_oracle",
    "removable_edges_fast",
    "removability",
    "sequences_of_circle",
]


def _circle(c) -> CircleLabeling:
    return c if isinstance(c, CircleLabeling) else CircleLabeling(_as_symbols(c))


@dataclass(frozen=True)
class InteriorMask:
    """``bits[p - 1] == 1`` iff position ``p`` is not strictly inside any arc of symbols ``2..m-1``."""

    bits: tuple[int, ...]

    @property
    def weight(self) -> int:
        return sum(self.bits)

    def ones(self) -> list[int]:
        return [p for p, b in enumerate(self.bits, start=1) if b]


@dataclass(frozen=True)
class RemovabilityReport:
    edges: frozenset[int]
    j: int
    weight: int


def interior_mask(c: CircleLabeling) -> InteriorMask:
    c = _circle(c)
    m, n = c.order, len(c)
    pairs = pairs_from_symbols(c)
    bits = [1] * n
    for i in range(2, m):
        a = pairs[i][0]
        for t in range(1, i):
            bits[(a - 1 + t) % n] = 0
    return InteriorMask(tuple(bits))


def removable_count_weight(c: CircleLabeling) -> int:
    """Number of removable edges from the Hamming weight ``w`` of the interior mask: ``ceil(w / 2)``."""
    w = interior_mask(c).weight
    return w // 2 if w % 2 == 0 else (w + 1) // 2


def removable_edges_oracle(c: CircleLabeling) -> frozenset[int]:
    """Brute force: keep ``e_p`` unless it lies on the short arc of some symbol.

    The short arc of ``i`` runs forward from ``a_i`` over the ``i`` edges
    ``e_{a_i} .. e_{a_i + i - 1}``.  Symbol ``m`` is at distance ``m`` from its
    partner along either arc and never blocks a cut.  Symbol 1 always blocks
    the edge between its copies, including on the 2-cycle where it is also ``m``.
    """
    c = _circle(c)
    m, n = c.order, len(c)
    pairs = pairs_from_symbols(c)
    blocking = set(range(1, m)) | {1}
    removable = set()
    for p in range(1, n + 1):
        on_arc = False
        for i in blocking:
            a = pairs[i][0]
            for t in range(i):
                if (a - 1 + t) % n + 1 == p:
                    on_arc = True
                    break
            if on_arc:
                break
        if not on_arc:
            removable.add(p)
    return frozenset(removable)


def removable_edges_fast(c: CircleLabeling) -> frozenset[int]:
    """Edges whose two endpoints are both unmarked in the interior mask, less the edge inside the 1-pair."""
    c = _circle(c)
    n = len(c)
    bits = interior_mask(c).bits
    a1 = pairs_from_symbols(c)[1][0]
    edges = {p for p in range(1, n + 1) if bits[p - 1] and bits[p % n]}
    edges.discard(a1)
    return frozenset(edges)


def removability(c: CircleLabeling) -> RemovabilityReport:
    mask = interior_mask(c)
    edges = removable_edges_fast(c)
    return RemovabilityReport(edges=edges, j=len(edges), weight=mask.weight)


def sequences_of_circle(c: CircleLabeling) -> list[SkolemTypeSeq]:
    """The ``2j`` Skolem sequences obtained by cutting each removable edge and reading both ways.

    Anticlockwise readings come first, then clockwise, each in edge order.
    """
    c = _circle(c)
    edges = sorted(removable_edges_fast(c))
    return [cut(c, e, "acw") for e in edges] + [cut(c, e, "cw") for e in edges]
