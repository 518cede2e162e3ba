"""Dihedral symmetry of circles and the standard positional labeling.

A circle is in standard positional labeling when its 1s sit at positions
1 and 2 and the first 2 sits at ``a_2`` in ``3..m``.  Each equivalence class
under rotation and reflection has exactly one such representative.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CircleLabeling, _as_symbols, pairs_from_symbols
from .errors import DegenerateOrder, InvalidInput, OrderMismatch

__all__ = [
    "CanonicalCircle",
    "rotate",
    "reflect",
    "images",
    "is_standard",
    "canonicalize",
    "equivalent",
]


def _circle(c) -> CircleLabeling:
    return c if isinstance(c, CircleLabeling) else CircleLabeling(_as_symbols(c))


def rotate(c: CircleLabeling, x: int) -> CircleLabeling:
    """Shift every label ``x`` positions forward (output position ``p`` reads input ``p - x``)."""
    s = _circle(c).symbols
    k = x % len(s)
    return CircleLabeling(s[-k:] + s[:-k] if k else s)


def reflect(c: CircleLabeling) -> CircleLabeling:
    """Reversal fixing position 1: output position ``p`` reads input ``2m + 2 - p``."""
    s = _circle(c).symbols
    return CircleLabeling(s[:1] + s[:0:-1])


def images(c: CircleLabeling):
    """Yield all ``4m`` dihedral images (with repetition for symmetric circles)."""
    c = _circle(c)
    n = len(c)
    for base in (c, reflect(c)):
        for x in range(n):
            yield rotate(base, x)


def is_standard(c: CircleLabeling) -> bool:
    s = _circle(c).symbols
    m = len(s) // 2
    if m < 2 or s[0] != 1 or s[1] != 1:
        return False
    try:
        a2 = pairs_from_symbols(CircleLabeling(s))[2][0]
    except ValueError:
        return False
    return 3 <= a2 <= m


@dataclass(frozen=True)
class CanonicalCircle:
    inner: CircleLabeling

    def __post_init__(self):
        if not is_standard(self.inner):
            raise InvalidInput(f"{self.inner} is not in standard positional labeling")

    @property
    def symbols(self) -> tuple[int, ...]:
        return self.inner.symbols

    @property
    def order(self) -> int:
        return self.inner.order

    def __str__(self):
        return str(self.inner)


def canonicalize(c: CircleLabeling) -> CanonicalCircle:
    c = _circle(c)
    if c.order < 2:
        raise DegenerateOrder("standard positional labeling needs m >= 2")
    pairs_from_symbols(c)  # raises on invalid input
    found = {img.symbols for img in images(c) if is_standard(img)}
    if len(found) != 1:
        raise InvalidInput(f"{c} has {len(found)} standard images")
    return CanonicalCircle(CircleLabeling(found.pop()))


def equivalent(c1: CircleLabeling, c2: CircleLabeling) -> bool:
    """Direct search over rotations of ``c2`` and its mirror image; no canonical forms involved."""
    s1, s2 = _circle(c1).symbols, _circle(c2).symbols
    if len(s1) != len(s2):
        raise OrderMismatch(f"orders {len(s1) // 2} and {len(s2) // 2} differ")
    n = len(s1)
    doubled = s2 + s2
    mirrored = s2[::-1] * 2
    for x in range(n):
        if doubled[x:x + n] == s1 or mirrored[x:x + n] == s1:
            return True
    return False
