"""Domain types, pair/symbol conversions and validators.

Positions are 1-based everywhere in the public API: a circle of order ``m``
has positions ``1..2m`` and the edge ``e_p`` joins position ``p`` to
position ``p % 2m + 1``.

A circle is stored as its position-indexed symbol tuple.  The dual form is a
:class:`PairList`, where symbol ``i`` sits at ``(a_i, b_i)`` with
``b_i - a_i == i (mod 2m)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import DistanceError, InvalidInput, OverlapError, SymbolCountError

__all__ = [
    "CircleLabeling",
    "PairList",
    "SkolemTypeSeq",
    "Violation",
    "ValidationReport",
    "parse_symbols",
    "format_symbols",
    "pairs_from_symbols",
    "symbols_from_pairs",
    "validate_circle",
    "validate_sequence",
    "wrap",
    "cut",
]


def parse_symbols(text: str) -> tuple[int, ...]:
    """Parse the text form ``"1 1 4 2 3 2 4 3"`` (commas and brackets tolerated)."""
    cleaned = text.replace(",", " ").strip().strip("()[]")
    try:
        return tuple(int(tok) for tok in cleaned.split())
    except ValueError as exc:
        raise InvalidInput(f"not a symbol list: {text!r}") from exc


def format_symbols(symbols: Iterable[int]) -> str:
    return " ".join(str(s) for s in symbols)


@dataclass(frozen=True)
class CircleLabeling:
    """Labeling of the cycle on ``2m`` nodes; ``symbols[p - 1]`` is the label of position ``p``."""

    symbols: tuple[int, ...]

    def __post_init__(self):
        syms = tuple(int(s) for s in self.symbols)
        if len(syms) < 2 or len(syms) % 2:
            raise InvalidInput(f"circle needs an even number >= 2 of cells, got {len(syms)}")
        object.__setattr__(self, "symbols", syms)

    @classmethod
    def parse(cls, text: str) -> CircleLabeling:
        return cls(parse_symbols(text))

    @property
    def order(self) -> int:
        return len(self.symbols) // 2

    def at(self, p: int) -> int:
        """Symbol at 1-based position ``p`` (taken modulo ``2m``)."""
        return self.symbols[(p - 1) % len(self.symbols)]

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __str__(self):
        return format_symbols(self.symbols)


@dataclass(frozen=True)
class PairList:
    """``pairs[i - 1] == (a_i, b_i)``, 1-based positions with ``b_i - a_i == i (mod 2m)``."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(a), int(b)) for a, b in self.pairs))

    @classmethod
    def from_dict(cls, mapping: dict[int, tuple[int, int]]) -> PairList:
        m = len(mapping)
        if sorted(mapping) != list(range(1, m + 1)):
            raise InvalidInput(f"pair keys must be 1..{m}, got {sorted(mapping)}")
        return cls(tuple(mapping[i] for i in range(1, m + 1)))

    @property
    def order(self) -> int:
        return len(self.pairs)

    def __getitem__(self, symbol: int) -> tuple[int, int]:
        if not 1 <= symbol <= len(self.pairs):
            raise KeyError(symbol)
        return self.pairs[symbol - 1]

    def as_dict(self) -> dict[int, tuple[int, int]]:
        return {i: ab for i, ab in enumerate(self.pairs, start=1)}


@dataclass(frozen=True)
class SkolemTypeSeq:
    """Linear sequence over a symbol set ``D`` with at most one null (``0``).

    ``symbol_set`` defaults to the positive symbols present and
    ``null_position`` to the 1-based index of the first ``0``.
    """

    symbols: tuple[int, ...]
    symbol_set: frozenset[int] | None = None
    null_position: int | None = None

    def __post_init__(self):
        syms = tuple(int(s) for s in self.symbols)
        object.__setattr__(self, "symbols", syms)
        if self.symbol_set is None:
            object.__setattr__(self, "symbol_set", frozenset(s for s in syms if s > 0))
        else:
            object.__setattr__(self, "symbol_set", frozenset(self.symbol_set))
        if self.null_position is None and 0 in syms:
            object.__setattr__(self, "null_position", syms.index(0) + 1)

    @classmethod
    def parse(cls, text: str) -> SkolemTypeSeq:
        return cls(parse_symbols(text))

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __str__(self):
        return format_symbols(self.symbols)


class Violation(NamedTuple):
    kind: str
    where: int
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid


def _as_symbols(obj) -> tuple[int, ...]:
    if isinstance(obj, (CircleLabeling, SkolemTypeSeq)):
        return obj.symbols
    if isinstance(obj, str):
        return parse_symbols(obj)
    return tuple(int(s) for s in obj)


def _positions(symbols: Sequence[int]) -> dict[int, list[int]]:
    where: dict[int, list[int]] = {}
    for p, s in enumerate(symbols, start=1):
        where.setdefault(s, []).append(p)
    return where


def pairs_from_symbols(c: CircleLabeling) -> PairList:
    """Pair representation of a circle.

    For symbol ``m`` both orderings satisfy the congruence; ``a_m < b_m`` is stored.
    """
    c = c if isinstance(c, CircleLabeling) else CircleLabeling(_as_symbols(c))
    m, n = c.order, len(c)
    where = _positions(c.symbols)
    pairs = []
    for i in range(1, m + 1):
        pos = where.get(i, [])
        if len(pos) != 2:
            raise SymbolCountError(f"symbol {i} occurs {len(pos)} times")
        p, q = pos
        if (q - p) % n == i:
            pairs.append((p, q))
        elif (p - q) % n == i:
            pairs.append((q, p))
        else:
            raise DistanceError(f"symbol {i} at positions {p},{q}: no ordering has gap {i} mod {n}")
    extra = set(where) - set(range(1, m + 1))
    if extra:
        raise SymbolCountError(f"symbols outside 1..{m}: {sorted(extra)}")
    return PairList(tuple(pairs))


def symbols_from_pairs(p: PairList) -> CircleLabeling:
    if not isinstance(p, PairList):
        p = PairList.from_dict(p) if isinstance(p, dict) else PairList(tuple(p))
    m = p.order
    n = 2 * m
    cells = [0] * n
    for i, (a, b) in enumerate(p.pairs, start=1):
        for pos in (a, b):
            if not 1 <= pos <= n:
                raise InvalidInput(f"position {pos} of symbol {i} outside 1..{n}")
            if cells[pos - 1]:
                raise OverlapError(f"position {pos} claimed by symbols {cells[pos - 1]} and {i}")
            cells[pos - 1] = i
        if (b - a) % n != i % n:
            raise DistanceError(f"pair {(a, b)} of symbol {i}: gap is not {i} mod {n}")
    return CircleLabeling(tuple(cells))


def validate_circle(c) -> ValidationReport:
    """Check that every symbol of ``1..m`` occurs twice at cycle distance equal to itself."""
    symbols = _as_symbols(c)
    n = len(symbols)
    out: list[Violation] = []
    if n < 2 or n % 2:
        return ValidationReport((Violation("length", n, "circle length must be even and >= 2"),))
    m = n // 2
    where = _positions(symbols)
    for s, pos in sorted(where.items()):
        if not 1 <= s <= m:
            out.append(Violation("symbol-range", pos[0], f"symbol {s} outside 1..{m}"))
    for i in range(1, m + 1):
        pos = where.get(i, [])
        if len(pos) != 2:
            out.append(Violation("symbol-count", i, f"symbol {i} occurs {len(pos)} times"))
            continue
        gap = pos[1] - pos[0]
        dist = min(gap, n - gap)
        if dist != i:
            out.append(Violation("distance", i, f"symbol {i} at {pos[0]},{pos[1]}: cycle distance {dist}"))
    return ValidationReport(tuple(out))


_KINDS = ("skolem", "langford", "skolem-type", "extended", "hook")


def validate_sequence(
    s,
    kind: str = "skolem",
    *,
    defect: int | None = None,
    symbols: Iterable[int] | None = None,
    null_position: int | None = None,
) -> ValidationReport:
    """Check the linear placement rule for a Skolem-type sequence.

    ``kind`` selects the symbol set ``D``:

    - ``"skolem"``: ``{1..m}``, no null;
    - ``"langford"``: ``{defect..defect+m-1}``, no null;
    - ``"skolem-type"``: ``symbols`` (or the positive symbols present);
    - ``"extended"``: ``{1..m}`` (or ``symbols``) with exactly one null at
      ``null_position`` (default: wherever the null is);
    - ``"hook"``: extended with the null in the penultimate cell.

    Every ``i`` in ``D`` must appear exactly twice, at ``j`` and ``j + i``.
    """
    if kind not in _KINDS:
        raise InvalidInput(f"unknown sequence kind {kind!r}; expected one of {_KINDS}")
    seq = _as_symbols(s)
    L = len(seq)
    out: list[Violation] = []
    nulls = [p for p, v in enumerate(seq, start=1) if v == 0]
    negatives = [p for p, v in enumerate(seq, start=1) if v < 0]
    for p in negatives:
        out.append(Violation("symbol-range", p, f"negative symbol {seq[p - 1]}"))

    extended = kind in ("extended", "hook")
    if extended:
        m = (L - 1) // 2
        if kind == "hook":
            k = L - 1
            if null_position is not None and null_position != k:
                raise InvalidInput(f"a hook has its null at position {k}, not {null_position}")
        else:
            k = null_position
            if k is None and isinstance(s, SkolemTypeSeq):
                k = s.null_position
        if len(nulls) != 1:
            out.append(Violation("null-count", len(nulls), f"expected exactly one null, found {len(nulls)}"))
        elif k is not None and nulls[0] != k:
            out.append(Violation("null-position", nulls[0], f"null at {nulls[0]}, expected {k}"))
    else:
        m = L // 2
        allow_null = kind == "skolem-type" and null_position is not None
        if allow_null:
            if len(nulls) > 1:
                out.append(Violation("null-count", len(nulls), "at most one null allowed"))
            elif nulls and nulls[0] != null_position:
                out.append(Violation("null-position", nulls[0], f"null at {nulls[0]}, expected {null_position}"))
        else:
            for p in nulls:
                out.append(Violation("null", p, "null symbol not allowed for this kind"))

    if kind in ("skolem", "extended", "hook") and symbols is None:
        D = set(range(1, m + 1))
    elif kind == "langford":
        if defect is None or defect < 1:
            raise InvalidInput("langford validation needs a positive defect")
        D = set(range(defect, defect + m))
    elif symbols is not None:
        D = set(int(x) for x in symbols)
    elif isinstance(s, SkolemTypeSeq):
        D = set(s.symbol_set)
    else:
        D = {v for v in seq if v > 0}

    expected_len = 2 * len(D) + (1 if extended or (nulls and null_position is not None) else 0)
    if L != expected_len:
        out.append(Violation("length", L, f"length {L} does not match |D|={len(D)}"))

    where = _positions(seq)
    for v, pos in sorted(where.items()):
        if v > 0 and v not in D:
            out.append(Violation("symbol-range", pos[0], f"symbol {v} not in the symbol set"))
    for i in sorted(D):
        pos = where.get(i, [])
        if len(pos) != 2:
            out.append(Violation("symbol-count", i, f"symbol {i} occurs {len(pos)} times"))
        elif pos[1] - pos[0] != i:
            out.append(Violation("distance", i, f"symbol {i} at {pos[0]},{pos[1]}: gap {pos[1] - pos[0]}"))
    return ValidationReport(tuple(out))


def wrap(s) -> CircleLabeling:
    """Wrap a Skolem sequence around the cycle on ``2m`` nodes."""
    seq = _as_symbols(s)
    report = validate_sequence(seq, "skolem")
    if not report.valid or not seq:
        raise InvalidInput(f"not a Skolem sequence: {format_symbols(seq)} ({report.violations[:1]})")
    return CircleLabeling(seq)


def cut(c: CircleLabeling, e: int, direction: str = "acw") -> SkolemTypeSeq:
    """Remove edge ``e_e`` and read the resulting path.

    ``"acw"`` starts at position ``e + 1`` and walks up the position index;
    ``"cw"`` is its reversal.  The result need not be a valid sequence
    unless the edge is removable.
    """
    n = len(c.symbols)
    if not 1 <= e <= n:
        raise InvalidInput(f"edge {e} outside 1..{n}")
    start = e % n
    reading = c.symbols[start:] + c.symbols[:start]
    if direction == "cw":
        reading = reading[::-1]
    elif direction != "acw":
        raise InvalidInput(f"direction must be 'acw' or 'cw', not {direction!r}")
    return SkolemTypeSeq(reading)
