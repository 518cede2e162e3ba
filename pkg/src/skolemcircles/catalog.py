"""Text formats: circle catalogs, count tables and shard checkpoints.

All formats are ASCII with LF line endings so that identical inputs give
byte-identical files.

Catalog::

    # skolem-circles v1
    # m=4
    3<TAB>1 1 4 2 3 2 4 3

Counts (``key`` is a removable-edge count ``j``, ``total`` or ``sequences``;
the optional ``scale`` column marks rows too large to recompute routinely)::

    m,j,count
    8,0,24
    ...
    8,total,192

Checkpoint: a ``# skolem-shard m=<m> shard=<i>/<n> prefix=<...>`` line
followed by a counts table for that shard alone.
"""

from __future__ import annotations

import io
import os
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, NamedTuple

from .canonical import is_standard
from .core import CircleLabeling, _as_symbols, format_symbols, validate_circle
from .enumeration import ClassifiedCounts, ShardSpec
from .errors import FormatError, InvalidInput, ValidationError
from .removable import removable_count_weight

__all__ = [
    "CATALOG_MAGIC",
    "CountsTable",
    "Mismatch",
    "write_catalog",
    "read_catalog",
    "catalog_text",
    "write_counts",
    "read_counts",
    "counts_text",
    "diff_counts",
    "expected_counts",
    "checkpoint_path",
    "write_checkpoint",
    "read_checkpoint",
]

CATALOG_MAGIC = "# skolem-circles v1"
COUNTS_HEADER = "m,j,count"
_CHECKPOINT_RE = re.compile(r"^# skolem-shard m=(\d+) shard=(\d+)/(\d+) prefix=(\S+)$")


def _emit(text: str, destination) -> str:
    if destination is None:
        return text
    if hasattr(destination, "write"):
        destination.write(text)
        return text
    path = Path(destination)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)
    os.replace(tmp, path)
    return text


def _lines(source) -> list[str]:
    if hasattr(source, "read"):
        text = source.read()
    elif isinstance(source, str) and "\n" in source:
        text = source
    else:
        text = Path(source).read_text(encoding="ascii")
    return text.splitlines()


# -- catalogs ---------------------------------------------------------------


def catalog_text(circles: Iterable, m: int | None = None) -> str:
    """Render a catalog; records are sorted by symbol tuple whatever the input order."""
    rows = sorted(_as_symbols(c) for c in circles)
    if m is None:
        if not rows:
            raise InvalidInput("an empty catalog needs an explicit order m")
        m = len(rows[0]) // 2
    out = [CATALOG_MAGIC, f"# m={m}"]
    prev = None
    for syms in rows:
        c = CircleLabeling(syms)
        if c.order != m:
            raise InvalidInput(f"circle {c} has order {c.order}, expected {m}")
        if syms == prev:
            raise InvalidInput(f"duplicate circle {c}")
        if not validate_circle(c).valid or not is_standard(c):
            raise InvalidInput(f"{c} is not a circle in standard positional labeling")
        out.append(f"{removable_count_weight(c)}\t{format_symbols(syms)}")
        prev = syms
    return "\n".join(out) + "\n"


def write_catalog(circles: Iterable, destination=None, m: int | None = None) -> str:
    """Write a catalog to a path or file object (or just return the text when ``destination`` is None)."""
    return _emit(catalog_text(circles, m), destination)


def read_catalog(source) -> list[CircleLabeling]:
    """Parse a catalog, rejecting anything malformed, invalid, unsorted or with a wrong ``j``."""
    lines = _lines(source)
    if len(lines) < 2 or lines[0] != CATALOG_MAGIC:
        raise FormatError("missing catalog header")
    match = re.fullmatch(r"# m=(\d+)", lines[1])
    if not match:
        raise FormatError(f"bad order line {lines[1]!r}")
    m = int(match.group(1))
    out: list[CircleLabeling] = []
    prev = None
    for lineno, line in enumerate(lines[2:], start=3):
        parts = line.split("\t")
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected '<j>\\t<symbols>'")
        try:
            j = int(parts[0])
            syms = tuple(int(x) for x in parts[1].split(" "))
        except ValueError as exc:
            raise FormatError(f"line {lineno}: non-integer field") from exc
        if len(syms) != 2 * m:
            raise FormatError(f"line {lineno}: {len(syms)} symbols, expected {2 * m}")
        c = CircleLabeling(syms)
        if not validate_circle(c).valid:
            raise ValidationError(f"line {lineno}: {c} is not a valid circle")
        if not is_standard(c):
            raise ValidationError(f"line {lineno}: {c} is not in standard positional labeling")
        if removable_count_weight(c) != j:
            raise ValidationError(f"line {lineno}: j={j} but the circle has {removable_count_weight(c)}")
        if prev is not None and syms <= prev:
            raise FormatError(f"line {lineno}: records not strictly sorted")
        prev = syms
        out.append(c)
    return out


# -- count tables -----------------------------------------------------------


@dataclass
class CountsTable:
    """Rows keyed by ``(m, key)`` where key is ``"0"``, ``"1"``, ..., ``"total"`` or ``"sequences"``."""

    entries: dict[tuple[int, str], int] = field(default_factory=dict)
    scale: dict[int, str] = field(default_factory=dict)

    @classmethod
    def from_counts(cls, summaries: Iterable[ClassifiedCounts], sequences: dict[int, int] | None = None):
        table = cls()
        for s in summaries:
            for j, c in enumerate(s.row()):
                table.entries[(s.m, str(j))] = c
            table.entries[(s.m, "total")] = s.total
        for m, c in (sequences or {}).items():
            table.entries[(m, "sequences")] = c
        return table

    def orders(self, scale: str | None = None) -> list[int]:
        ms = sorted({m for m, _ in self.entries})
        if scale is not None:
            ms = [m for m in ms if self.scale.get(m, "desk") == scale]
        return ms

    def classified(self, m: int) -> ClassifiedCounts:
        return ClassifiedCounts(m, {int(k): c for (mm, k), c in self.entries.items() if mm == m and k.isdigit()})

    def get(self, m: int, key) -> int | None:
        return self.entries.get((m, str(key)))


def _key_order(key: str):
    return (0, int(key), "") if key.isdigit() else (1, 0, key)


def counts_text(table: CountsTable) -> str:
    out = [COUNTS_HEADER]
    for m, key in sorted(table.entries, key=lambda mk: (mk[0], _key_order(mk[1]))):
        out.append(f"{m},{key},{table.entries[(m, key)]}")
    return "\n".join(out) + "\n"


def write_counts(summaries, destination=None, sequences: dict[int, int] | None = None) -> str:
    """Serialize :class:`ClassifiedCounts` (or a :class:`CountsTable`) as ``m,j,count`` rows.

    Each order gets a row for every ``j`` from 0 to its largest ``j`` and a ``total`` row.
    """
    if isinstance(summaries, ClassifiedCounts):
        summaries = [summaries]
    table = summaries if isinstance(summaries, CountsTable) else CountsTable.from_counts(summaries, sequences)
    return _emit(counts_text(table), destination)


def read_counts(source) -> CountsTable:
    table = CountsTable()
    lines = [ln for ln in _lines(source) if ln.strip() and not ln.startswith("#")]
    if not lines or lines[0].split(",")[:3] != COUNTS_HEADER.split(","):
        raise FormatError("missing 'm,j,count' header")
    for lineno, line in enumerate(lines[1:], start=2):
        fields = line.split(",")
        if len(fields) not in (3, 4):
            raise FormatError(f"row {lineno}: expected 3 or 4 fields, got {len(fields)}")
        try:
            m, count = int(fields[0]), int(fields[2])
        except ValueError as exc:
            raise FormatError(f"row {lineno}: non-integer order or count") from exc
        key = fields[1].strip()
        if not (key.isdigit() or key in ("total", "sequences")):
            raise FormatError(f"row {lineno}: unknown key {key!r}")
        if (m, key) in table.entries:
            raise FormatError(f"row {lineno}: duplicate row for m={m}, {key}")
        table.entries[(m, key)] = count
        if len(fields) == 4:
            scale = fields[3].strip()
            if table.scale.setdefault(m, scale) != scale:
                raise FormatError(f"row {lineno}: inconsistent scale for m={m}")
    for m in table.orders():
        total = table.get(m, "total")
        js = [c for (mm, k), c in table.entries.items() if mm == m and k.isdigit()]
        if total is not None and js and sum(js) != total:
            raise FormatError(f"m={m}: rows sum to {sum(js)} but total is {total}")
    return table


class Mismatch(NamedTuple):
    m: int
    key: str
    actual: int | None
    expected: int | None


def diff_counts(actual, expected) -> list[Mismatch]:
    """Per-(m, key) differences over the orders present in both tables.

    Missing ``j`` rows count as zero; ``total`` and ``sequences`` are compared
    only when both sides have them.
    """
    if not isinstance(actual, CountsTable):
        actual = CountsTable.from_counts([actual] if isinstance(actual, ClassifiedCounts) else actual)
    if not isinstance(expected, CountsTable):
        expected = read_counts(expected)
    out = []
    for m in sorted(set(actual.orders()) & set(expected.orders())):
        keys = {k for (mm, k) in actual.entries if mm == m} | {k for (mm, k) in expected.entries if mm == m}
        for key in sorted(keys, key=_key_order):
            a, e = actual.get(m, key), expected.get(m, key)
            if key.isdigit():
                a, e = a or 0, e or 0
            elif a is None or e is None:
                continue
            if a != e:
                out.append(Mismatch(m, key, a, e))
    return out


def expected_counts() -> CountsTable:
    """Bundled table of reference circle and sequence counts (orders 16 and 17 flagged ``scale=full``)."""
    text = resources.files("skolemcircles").joinpath("data/expected_counts.csv").read_text(encoding="ascii")
    return read_counts(io.StringIO(text))


# -- checkpoints ------------------------------------------------------------


def checkpoint_path(directory, spec: ShardSpec) -> Path:
    return Path(directory) / f"skolem-m{spec.m}-shard{spec.shard_id:04d}-of{spec.of_total:04d}.txt"


def _checkpoint_header(spec: ShardSpec) -> str:
    return f"# skolem-shard m={spec.m} shard={spec.shard_id}/{spec.of_total} prefix={spec.describe()}"


def write_checkpoint(path, spec: ShardSpec, counts: ClassifiedCounts) -> str:
    os.makedirs(Path(path).parent, exist_ok=True)
    text = _checkpoint_header(spec) + "\n" + counts_text(CountsTable.from_counts([counts]))
    return _emit(text, path)


def read_checkpoint(path, spec: ShardSpec | None = None) -> ClassifiedCounts:
    """Load one shard's counts; with ``spec`` given the header must describe that exact shard."""
    lines = _lines(path)
    if not lines:
        raise FormatError(f"{path}: empty checkpoint")
    match = _CHECKPOINT_RE.match(lines[0])
    if not match:
        raise FormatError(f"{path}: bad checkpoint header {lines[0]!r}")
    if spec is not None and lines[0] != _checkpoint_header(spec):
        raise FormatError(f"{path}: checkpoint is for a different shard ({lines[0]!r})")
    m = int(match.group(1))
    table = read_counts("\n".join(lines[1:]) + "\n")
    if table.orders() not in ([], [m]):
        raise FormatError(f"{path}: rows for orders {table.orders()} in a shard of m={m}")
    return table.classified(m)


