"""Bitmask helpers for vertex subsets.

Vertex sets live in Python ints: bit ``i`` set means vertex ``i`` is in
the set.  Everything here is a pure function on plain ints, which keeps
subset arithmetic (union, containment, enumeration) down to single
machine operations for the sizes this package supports.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex labels into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of(mask: int) -> list[int]:
    """Unpack a bitmask into a sorted list of vertex labels."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def contains(outer: int, inner: int) -> bool:
    return inner & ~outer == 0


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` (including 0 and itself), descending."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def k_submasks(mask: int, k: int) -> Iterator[int]:
    """All size-``k`` submasks of ``mask``, in lexicographic label order."""
    for combo in combinations(bits_of(mask), k):
        yield mask_of(combo)


def max_antichain(masks: Iterable[int]) -> frozenset[int]:
    """Inclusion-maximal elements of a family of masks."""
    by_size = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in by_size:
        if not any(m & ~big == 0 for big in kept):
            kept.append(m)
    return frozenset(kept)


def min_antichain(masks: Iterable[int]) -> frozenset[int]:
    """Inclusion-minimal elements of a family of masks."""
    by_size = sorted(set(masks), key=lambda m: m.bit_count())
    kept: list[int] = []
    for m in by_size:
        if not any(small & ~m == 0 for small in kept):
            kept.append(m)
    return frozenset(kept)
