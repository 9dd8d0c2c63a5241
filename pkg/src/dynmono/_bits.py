"""Bitmask helpers for vertex sets.

Vertex sets are manipulated internally as Python ints (bit v set = vertex v
present), which keeps the hot loops (activation closure, greedy shrinking,
subset enumeration) at C speed.  The public API always exposes frozensets.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def set_of(mask: int) -> frozenset[int]:
    return frozenset(bits_of(mask))
