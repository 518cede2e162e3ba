"""Exhaustive enumeration of Skolem circles in standard positional labeling.

The 1s are fixed at positions 1 and 2 and the first 2 at ``a_2`` in
``3..m``; every other symbol may take any pair ``(a, a + i mod 2m)`` that
avoids the 1s.  Symbols are placed in the order ``2, m, m-1, ..., 3`` so the
long arcs prune first.  Each visited leaf is a distinct circle class.

Work can be split into shards, each fixing the placements of the first few
symbols in that order.  Shards are independent and their counts merge by
summation, so the result does not depend on how many shards or threads are
used, or on completion order.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Iterator, Mapping

import numpy as np

from . import _kernels
from .core import CircleLabeling
from .errors import InvalidInput, ShardOverlapError

log = logging.getLogger(__name__)

__all__ = [
    "MAX_ORDER",
    "ClassifiedCounts",
    "ShardSpec",
    "candidate_placements",
    "placement_order",
    "enumerate_circles",
    "iter_circles",
    "classify",
    "enumerate_sequences",
    "iter_sequences",
    "make_shards",
    "plan_shards",
    "verify_partition",
    "enumerate_shard",
    "merge",
]

MAX_ORDER = 32


@dataclass(frozen=True)
class ClassifiedCounts:
    """Number of circle classes of order ``m`` with ``j`` removable edges; zero entries are dropped."""

    m: int
    counts_by_j: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(j): int(c) for j, c in sorted(self.counts_by_j.items()) if c}
        if any(c < 0 for c in clean.values()):
            raise ValueError("negative count")
        object.__setattr__(self, "counts_by_j", clean)

    @property
    def total(self) -> int:
        return sum(self.counts_by_j.values())

    @property
    def max_j(self) -> int | None:
        return max(self.counts_by_j) if self.counts_by_j else None

    def sequence_count(self) -> int:
        """Skolem sequences represented: each class with ``j`` removable edges holds ``2j``."""
        return sum(2 * j * c for j, c in self.counts_by_j.items())

    def row(self, width: int | None = None) -> list[int]:
        width = width if width is not None else (self.max_j + 1 if self.counts_by_j else 0)
        return [self.counts_by_j.get(j, 0) for j in range(width)]

    def __str__(self):
        parts = [f"j={j}:{c}" for j, c in enumerate(self.row())]
        return " ".join(parts + [f"total={self.total}"])


@dataclass(frozen=True)
class ShardSpec:
    """A piece of the search space.

    Each prefix is a tuple of ``(symbol, a)`` placements (1-based ``a``) in
    placement order, starting with symbol 2.  A shard covers the union of
    the subtrees below its prefixes.
    """

    m: int
    prefixes: tuple[tuple[tuple[int, int], ...], ...]
    shard_id: int = 0
    of_total: int = 1

    @property
    def prefix(self) -> tuple[tuple[int, int], ...]:
        if len(self.prefixes) != 1:
            raise ValueError(f"shard {self.shard_id} holds {len(self.prefixes)} prefixes")
        return self.prefixes[0]

    def describe(self) -> str:
        return ";".join(",".join(f"{s}@{a}" for s, a in pre) for pre in self.prefixes) or "-"


def placement_order(m: int) -> list[int]:
    return [2] + list(range(m, 2, -1)) if m >= 3 else ([2] if m == 2 else [])


def candidate_placements(m: int) -> dict[int, list[tuple[int, int]]]:
    """All pairs ``(a, b)`` (1-based) each symbol may occupy before any clash check.

    Symbol 1 is fixed at ``(1, 2)`` and symbol 2 starts in ``3..m``.  For
    ``3 <= i < m`` every start avoiding positions 1 and 2 is allowed
    (``2m - 4`` of them); the ``m`` pair is unordered, so ``m - 2`` starts.
    """
    if m < 2:
        return {1: [(1, 2)]} if m == 1 else {}
    n = 2 * m
    out = {1: [(1, 2)], 2: [(a, a + 2) for a in range(3, m + 1)]}
    for i in range(3, m + 1):
        starts = range(1, m + 1) if i == m else range(1, n + 1)
        out[i] = [
            (a, (a - 1 + i) % n + 1)
            for a in starts
            if a > 2 and (a - 1 + i) % n + 1 > 2
        ]
    return out


@dataclass(frozen=True)
class _Tables:
    m: int
    order: tuple[int, ...]
    cand: np.ndarray
    inter: np.ndarray
    apos: np.ndarray
    bpos: np.ndarray
    cnt: np.ndarray
    full: np.uint64
    start: np.uint64
    index: tuple[dict[int, int], ...]  # per depth: 1-based a -> candidate index


@lru_cache(maxsize=None)
def _tables(m: int) -> _Tables:
    if not 2 <= m <= MAX_ORDER:
        raise InvalidInput(f"circle search supports 2 <= m <= {MAX_ORDER}, got {m}")
    n = 2 * m
    order = placement_order(m)
    places = candidate_placements(m)
    width = max((len(places[s]) for s in order), default=1) or 1
    depth_n = len(order)
    cand = np.zeros((depth_n, width), np.uint64)
    inter = np.zeros((depth_n, width), np.uint64)
    apos = np.zeros((depth_n, width), np.int64)
    bpos = np.zeros((depth_n, width), np.int64)
    cnt = np.zeros(depth_n, np.int64)
    index = []
    for d, s in enumerate(order):
        lookup = {}
        for k, (a, b) in enumerate(places[s]):
            cand[d, k] = (1 << (a - 1)) | (1 << (b - 1))
            inside = 0
            if s < m:
                for t in range(1, s):
                    inside |= 1 << ((a - 1 + t) % n)
            inter[d, k] = inside
            apos[d, k], bpos[d, k] = a - 1, b - 1
            lookup[a] = k
        cnt[d] = len(places[s])
        index.append(lookup)
    return _Tables(
        m=m,
        order=tuple(order),
        cand=cand,
        inter=inter,
        apos=apos,
        bpos=bpos,
        cnt=cnt,
        full=np.uint64((1 << n) - 1),
        start=np.uint64(0b11),
        index=tuple(index),
    )


def _bounds_for(t: _Tables, prefix) -> tuple[np.ndarray, np.ndarray] | None:
    """Candidate-index windows pinning the prefix; ``None`` if the prefix is impossible."""
    lo = np.zeros(len(t.order), np.int64)
    hi = t.cnt.copy()
    for d, (symbol, a) in enumerate(prefix):
        if d >= len(t.order) or t.order[d] != symbol:
            raise InvalidInput(f"prefix {prefix} does not follow the placement order {t.order}")
        k = t.index[d].get(a)
        if k is None:
            return None
        lo[d], hi[d] = k, k + 1
    return lo, hi


def _count(t: _Tables, prefix) -> np.ndarray:
    counts = np.zeros(t.m + 2, np.int64)
    if not t.order:
        return counts
    windows = _bounds_for(t, prefix)
    if windows is None:
        return counts
    lo, hi = windows
    _kernels.count_circles(t.cand, t.inter, lo, hi, t.start, t.full, counts)
    return counts


def _collect(t: _Tables, prefix) -> np.ndarray:
    """Symbol arrays (one row per circle, 0-based cells) for the subtree under ``prefix``."""
    n = 2 * t.m
    total = int(_count(t, prefix).sum())
    if total == 0:
        return np.zeros((0, n), np.int16)
    lo, hi = _bounds_for(t, prefix)
    picks = np.zeros((total, len(t.order)), np.int64)
    rows = _kernels.collect_circles(t.cand, lo, hi, t.start, picks)
    assert rows == total
    sym = np.zeros((total, n), np.int16)
    sym[:, 0] = sym[:, 1] = 1
    r = np.arange(total)
    for d, s in enumerate(t.order):
        k = picks[:, d]
        sym[r, t.apos[d, k]] = s
        sym[r, t.bpos[d, k]] = s
    return sym


def _prefixes(m: int, granularity: int) -> list[tuple[tuple[int, int], ...]]:
    """All clash-free placements of the first ``granularity`` symbols in placement order."""
    order = placement_order(m)
    granularity = max(1, min(granularity, len(order)))
    places = candidate_placements(m)
    out = []
    for combo in product(*(places[s] for s in order[:granularity])):
        cells = [1, 2]
        for a, b in combo:
            cells += [a, b]
        if len(set(cells)) == len(cells):
            out.append(tuple((s, ab[0]) for s, ab in zip(order, combo)))
    return out


def make_shards(m: int, granularity: int = 1) -> list[ShardSpec]:
    """One shard per clash-free prefix of ``granularity`` placements.

    ``granularity=1`` splits on ``a_2`` alone (``m - 2`` shards);
    ``granularity=2`` also fixes the placement of symbol ``m``, and so on.
    """
    if m < 2:
        raise InvalidInput("m must be at least 2")
    pres = _prefixes(m, granularity)
    return [ShardSpec(m, (p,), i, len(pres)) for i, p in enumerate(pres)]


def plan_shards(m: int, n: int) -> list[ShardSpec]:
    """Exactly ``n`` shards: the coarsest prefix split with at least ``n`` pieces, dealt round-robin."""
    if n < 1:
        raise InvalidInput("need at least one shard")
    depth = len(placement_order(m))
    g = 1
    pres = _prefixes(m, g)
    while len(pres) < n and g < depth:
        g += 1
        pres = _prefixes(m, g)
    return [ShardSpec(m, tuple(pres[i::n]), i, n) for i in range(n)]


def verify_partition(shards: Iterable[ShardSpec]) -> None:
    """Raise :class:`ShardOverlapError` unless the shards' prefixes cover the search space exactly once."""
    shards = list(shards)
    if not shards:
        raise ShardOverlapError("no shards")
    m = shards[0].m
    pres = [p for s in shards for p in s.prefixes]
    if any(s.m != m for s in shards):
        raise ShardOverlapError("shards of different orders")
    depths = {len(p) for p in pres}
    if len(depths) > 1:
        raise ShardOverlapError(f"mixed prefix depths {sorted(depths)}")
    if len(set(pres)) != len(pres):
        raise ShardOverlapError("a prefix appears in more than one shard")
    expected = set(_prefixes(m, depths.pop())) if pres else set()
    missing = expected - set(pres)
    if missing:
        raise ShardOverlapError(f"{len(missing)} prefixes not covered, e.g. {sorted(missing)[0]}")


def enumerate_shard(spec: ShardSpec, visitor: Callable[[CircleLabeling], object] | None = None) -> ClassifiedCounts:
    """Classify (and optionally visit) the circles under one shard's prefixes."""
    t = _tables(spec.m)
    counts = np.zeros(spec.m + 2, np.int64)
    for pre in spec.prefixes:
        counts += _count(t, pre)
        if visitor is not None:
            for row in _collect(t, pre):
                visitor(CircleLabeling(tuple(row.tolist())))
    return ClassifiedCounts(spec.m, {j: int(c) for j, c in enumerate(counts)})


def merge(partials: Iterable[ClassifiedCounts]) -> ClassifiedCounts:
    partials = list(partials)
    if not partials:
        raise InvalidInput("nothing to merge")
    m = partials[0].m
    acc: dict[int, int] = {}
    for p in partials:
        if p.m != m:
            raise InvalidInput(f"cannot merge orders {m} and {p.m}")
        for j, c in p.counts_by_j.items():
            acc[j] = acc.get(j, 0) + c
    return ClassifiedCounts(m, acc)


def iter_circles(m: int) -> Iterator[CircleLabeling]:
    """Yield every circle of order ``m`` in standard positional labeling, in search order."""
    if m < 2:
        raise InvalidInput("m must be at least 2")
    t = _tables(m)
    for pre in _prefixes(m, 1):
        for row in _collect(t, pre):
            yield CircleLabeling(tuple(row.tolist()))


def enumerate_circles(m: int, visitor: Callable[[CircleLabeling], object]) -> int:
    """Call ``visitor`` once per circle class of order ``m``; returns the number of visits."""
    visited = 0
    for c in iter_circles(m):
        visitor(c)
        visited += 1
    return visited


def classify(
    m: int,
    *,
    shards: int = 1,
    threads: int = 1,
    checkpoint_dir: str | os.PathLike | None = None,
) -> ClassifiedCounts:
    """Count the circle classes of order ``m`` by number of removable edges.

    With ``checkpoint_dir`` each finished shard is written to its own file and
    shards whose file already exists are loaded instead of recomputed.
    """
    if m < 2:
        raise InvalidInput("m must be at least 2")
    specs = plan_shards(m, shards)
    verify_partition(specs)
    partials = run_shards(specs, threads=threads, checkpoint_dir=checkpoint_dir)
    return merge(partials)


def run_shards(
    specs: list[ShardSpec],
    *,
    threads: int = 1,
    checkpoint_dir: str | os.PathLike | None = None,
) -> list[ClassifiedCounts]:
    from . import catalog

    def work(spec: ShardSpec) -> ClassifiedCounts:
        if checkpoint_dir is not None:
            path = catalog.checkpoint_path(checkpoint_dir, spec)
            if os.path.exists(path):
                log.info("shard %d/%d: loading %s", spec.shard_id, spec.of_total, path)
                return catalog.read_checkpoint(path, spec)
        result = enumerate_shard(spec)
        if checkpoint_dir is not None:
            catalog.write_checkpoint(path, spec, result)
        return result

    if threads <= 1:
        return [work(s) for s in specs]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(work, specs))


def iter_sequences(m: int) -> Iterator[tuple[int, ...]]:
    """Yield every Skolem sequence of order ``m`` (reversals included), filling the lowest free cell first."""
    n = 2 * m
    cells = [0] * n
    used = [False] * (m + 1)

    def fill(p: int):
        while p < n and cells[p]:
            p += 1
        if p == n:
            yield tuple(cells)
            return
        for s in range(1, m + 1):
            q = p + s
            if q >= n:
                break
            if used[s] or cells[q]:
                continue
            cells[p] = cells[q] = s
            used[s] = True
            yield from fill(p + 1)
            cells[p] = cells[q] = 0
            used[s] = False

    if m >= 1:
        yield from fill(0)


def enumerate_sequences(m: int) -> int:
    """Number of Skolem sequences of order ``m``, counted by linear backtracking."""
    if m < 1:
        raise InvalidInput("m must be positive")
    if 2 * m > 63:
        raise InvalidInput(f"sequence counting supports m <= 31, got {m}")
    return int(_kernels.count_linear_sequences(m))
