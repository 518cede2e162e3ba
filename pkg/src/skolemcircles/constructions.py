"""Existence criteria, explicit constructions and counting bounds."""

from __future__ import annotations

import math
from decimal import Decimal, localcontext
from dataclasses import dataclass
from typing import Sequence

from .core import CircleLabeling, SkolemTypeSeq, _as_symbols, validate_sequence
from .errors import CoverageError, DisjointnessError, InvalidInput, InvalidPartError

__all__ = [
    "skolem_order_exists",
    "skolem_labeled_cycle_exists",
    "langford_exists",
    "langford_power3",
    "glue",
    "junction_edges",
    "theorem9_circle",
    "theorem9_order",
    "BoundsSummary",
    "bounds",
]


def skolem_order_exists(m: int) -> bool:
    """Skolem sequences (and hence Skolem circles) of order m exist iff m = 0, 1 mod 4."""
    return m >= 1 and m % 4 in (0, 1)


def skolem_labeled_cycle_exists(m: int) -> bool:
    """Whether some circle of order m has no removable edge (a proper Skolem labeled cycle)."""
    return m >= 8 and m % 4 in (0, 1)


def langford_exists(d: int, m: int) -> bool:
    if d < 1 or m < 1 or m < 2 * d - 1:
        return False
    if d % 2:
        return m % 4 in (0, 1)
    return m % 4 in (0, 3)


def langford_power3(n: int) -> SkolemTypeSeq:
    """Langford sequence of order ``3**n`` and defect ``(3**n + 1) // 2``.

    With ``2d = m + 1``, symbols of the parity of ``d + m - 1`` are laid out as
    nested pairs ``(y + 1, m + d - y)`` for ``y = 0..d-1``; the others as
    ``(d + z, 2m - z + 1)`` for ``z = 1..d-1``.  Both families together tile
    ``1..2m``.
    """
    if n < 0:
        raise InvalidInput("n must be non-negative")
    m = 3**n
    d = (m + 1) // 2
    cells = [0] * (2 * m)

    def place(symbol: int, a: int, b: int):
        if b - a != symbol:
            raise AssertionError(f"gap {b - a} for symbol {symbol}")
        for p in (a, b):
            if cells[p - 1]:
                raise AssertionError(f"position {p} used twice")
            cells[p - 1] = symbol

    for y in range(d):
        place(d + m - 1 - 2 * y, y + 1, m + d - y)
    for z in range(1, d):
        place(d + m - 2 * z, d + z, 2 * m - z + 1)

    seq = SkolemTypeSeq(tuple(cells), frozenset(range(d, d + m)))
    report = validate_sequence(seq, "langford", defect=d)
    if not report.valid:
        raise AssertionError(f"langford_power3({n}) failed validation: {report.violations[:3]}")
    return seq


def glue(parts: Sequence) -> CircleLabeling:
    """Concatenate null-free Skolem-type sequences and wrap the result around a cycle.

    The symbol sets must be pairwise disjoint and together equal ``{1..m}``.
    Every junction between consecutive parts (including the wrap-around) is
    then a removable edge.
    """
    if not parts:
        raise InvalidInput("nothing to glue")
    seen: set[int] = set()
    cells: list[int] = []
    for k, part in enumerate(parts):
        syms = _as_symbols(part)
        if 0 in syms:
            raise InvalidPartError(f"part {k} contains a null")
        report = validate_sequence(syms, "skolem-type")
        if not syms or not report.valid:
            raise InvalidPartError(f"part {k} is not a Skolem-type sequence: {report.violations[:1]}")
        own = set(syms)
        if own & seen:
            raise DisjointnessError(f"part {k} repeats symbols {sorted(own & seen)}")
        seen |= own
        cells.extend(syms)
    m = max(seen)
    if seen != set(range(1, m + 1)):
        raise CoverageError(f"symbols missing from 1..{m}: {sorted(set(range(1, m + 1)) - seen)}")
    return CircleLabeling(tuple(cells))


def junction_edges(parts: Sequence) -> frozenset[int]:
    """Edge ids at the boundaries of glued parts (the last one is the wrap edge ``e_{2m}``)."""
    edges, pos = set(), 0
    for part in parts:
        pos += len(_as_symbols(part))
        edges.add(pos)
    return frozenset(edges)


def theorem9_order(k: int) -> int:
    return (3**k - 1) // 2


def theorem9_circle(k: int) -> CircleLabeling:
    """Glue the power-of-3 Langford sequences for ``n = 0..k-1`` into a circle of order ``(3**k - 1) / 2``."""
    if k < 1:
        raise InvalidInput("k must be at least 1")
    return glue([langford_power3(n) for n in range(k)])


@dataclass(frozen=True)
class BoundsSummary:
    m: int
    max_removable_bound: float
    circle_lower_bound: float | Decimal
    sequence_lower_bound: int
    naive_sequence_upper_bound: int
    naive_circle_upper_bound: int | None


def _circle_lower_bound(third: int, log_term: float):
    if third - 1 < 1000:
        return 2.0 ** (third - 1) / log_term + 1
    with localcontext() as ctx:
        ctx.prec = 40
        return Decimal(2) ** (third - 1) / Decimal(log_term) + 1


def bounds(m: int) -> BoundsSummary:
    """Evaluate the removable-edge bound and the counting bounds for order ``m``.

    Products and powers are exact Python integers; only the log terms are floats.
    The naive circle bound is ``None`` for ``m < 5``.  The circle lower bound
    is a float while it fits one and a :class:`~decimal.Decimal` beyond that.
    """
    if m < 1:
        raise InvalidInput("m must be positive")
    log_term = 2 + math.log2(m)
    third = m // 3
    seq_upper = 2 * math.prod(2 * m - i for i in range(1, m - 1))
    circ_upper = 2 * (m - 2) * (2 * m - 2) ** (m - 5) if m >= 5 else None
    return BoundsSummary(
        m=m,
        max_removable_bound=log_term,
        circle_lower_bound=_circle_lower_bound(third, log_term),
        sequence_lower_bound=2**third,
        naive_sequence_upper_bound=seq_upper,
        naive_circle_upper_bound=circ_upper,
    )
