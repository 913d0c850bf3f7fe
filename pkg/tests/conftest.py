"""Shared fixtures and brute-force oracles written against plain Python sets."""

from __future__ import annotations

from itertools import chain, combinations

import pytest

from closurelab.enumeration import enumerate_pretopologies, enumerate_topologies
from closurelab.space import Pretopology, discrete, indiscrete, sierpinski

SP = sierpinski()
D2 = discrete(2)
I2 = indiscrete(2)
PT = discrete(1)
# V(0)={0}, V(1)={0,1}, V(2)={1,2}; closures u({0})={0,1}, u({1})={1,2}, u({2})={2}
P3 = Pretopology.from_nbhds([0b001, 0b011, 0b110])


def as_set(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def as_mask(points) -> int:
    return sum(1 << p for p in set(points))


def powerset(points):
    pts = list(points)
    return [frozenset(c) for c in chain.from_iterable(combinations(pts, k) for k in range(len(pts) + 1))]


def set_closure(space: Pretopology, a) -> frozenset[int]:
    """Closure computed pointwise from singleton closures, on sets."""
    out = set()
    for x in a:
        out |= as_set(space.closures[x])
    return frozenset(out)


def nbhd_filter(space: Pretopology, x: int) -> list[frozenset[int]]:
    """Every U with x ∉ u(X \\ U), listed from the definition."""
    carrier = frozenset(range(space.n))
    return [u for u in powerset(carrier) if x not in set_closure(space, carrier - u)]


def all_spaces(n_max: int):
    return [s for n in range(1, n_max + 1) for s in enumerate_pretopologies(n)]


def all_topologies(n_max: int):
    return [t for n in range(1, n_max + 1) for t in enumerate_topologies(n)]


@pytest.fixture(scope="session")
def spaces3():
    return all_spaces(3)


@pytest.fixture(scope="session")
def topologies3():
    return all_topologies(3)
