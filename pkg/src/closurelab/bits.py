"""Subsets of a finite carrier encoded as Python ints (bit ``i`` = point ``i``)."""

from __future__ import annotations

from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the points of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def full(n: int) -> int:
    return (1 << n) - 1


def popcount(mask: int) -> int:
    return mask.bit_count()


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, ascending, including 0 and ``mask`` itself."""
    pts = list(bits(mask))
    for k in range(1 << len(pts)):
        yield mask_of(p for i, p in enumerate(pts) if k >> i & 1)


def supersets(mask: int, n: int) -> Iterator[int]:
    """All subsets of the ``n``-point carrier that contain ``mask``."""
    for extra in submasks(full(n) & ~mask):
        yield mask | extra


def fmt(mask: int) -> str:
    """Render a subset as ``{0,2}``."""
    return "{" + ",".join(str(p) for p in bits(mask)) + "}"
