"""Exhaustive generators for small closure spaces.

Pretopologies on ``n`` labelled points are exactly the reflexive relations, and
topologies are the transitive ones (finite preorders).  Both streams come out
ordered by :func:`relation_code`.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterator

from .bits import bits, full
from .errors import BoundExceeded
from .space import Pretopology, Topology

MAX_ENUM_POINTS = 5


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(x, y) for x in range(n) for y in range(n) if x != y]


def relation_code(space: Pretopology) -> int:
    """Bit ``k`` is set when the ``k``-th off-diagonal pair ``(x, y)`` has ``y in V(x)``."""
    code = 0
    for k, (x, y) in enumerate(_pairs(space.n)):
        if space.nbhds[x] >> y & 1:
            code |= 1 << k
    return code


def from_relation_code(n: int, code: int) -> Pretopology:
    nb = [1 << x for x in range(n)]
    for k, (x, y) in enumerate(_pairs(n)):
        if code >> k & 1:
            nb[x] |= 1 << y
    return Pretopology.from_nbhds(nb)


def _check_bound(n: int, max_points: int) -> None:
    if n < 1:
        raise BoundExceeded("need at least one point")
    if n > max_points:
        raise BoundExceeded(f"n={n} exceeds enumeration bound {max_points}")


def enumerate_pretopologies(n: int, max_points: int = MAX_ENUM_POINTS) -> Iterator[Pretopology]:
    _check_bound(n, max_points)
    for code in range(1 << (n * (n - 1))):
        space = from_relation_code(n, code)
        yield Topology(space.closures) if space.is_idempotent() else space


def enumerate_topologies(n: int, max_points: int = MAX_ENUM_POINTS) -> Iterator[Topology]:
    """All labelled topologies, by backtracking over transitive neighbourhood assignments."""
    _check_bound(n, max_points)
    found: list[Topology] = []
    nb = [0] * n

    def extend(x: int) -> None:
        if x == n:
            found.append(Topology(Pretopology.from_nbhds(nb).closures))
            return
        rest = full(n) & ~(1 << x)
        others = list(bits(rest))
        for k in range(1 << len(others)):
            v = 1 << x
            for i, p in enumerate(others):
                if k >> i & 1:
                    v |= 1 << p
            ok = True
            for y in range(x):
                # y in V(x) forces V(y) ⊆ V(x); x in V(y) forces V(x) ⊆ V(y)
                if v >> y & 1 and nb[y] & ~v:
                    ok = False
                    break
                if nb[y] >> x & 1 and v & ~nb[y]:
                    ok = False
                    break
            if not ok:
                continue
            nb[x] = v
            extend(x + 1)
        nb[x] = 0

    extend(0)
    found.sort(key=relation_code)
    yield from found


def topologies_by_brute_force(n: int) -> list[frozenset[int]]:
    """Every family of subsets containing ∅ and X closed under ∪ and ∩ (independent oracle)."""
    top = full(n)
    middle = [s for s in range(1, top)]
    out = []
    for k in range(1 << len(middle)):
        fam = {0, top} | {s for i, s in enumerate(middle) if k >> i & 1}
        if all(a | b in fam and a & b in fam for a, b in combinations(fam, 2)):
            out.append(frozenset(fam))
    return out


def permute(space: Pretopology, perm: tuple[int, ...]) -> Pretopology:
    """Relabel point ``x`` as ``perm[x]``."""
    n = space.n
    nb = [0] * n
    for x, v in enumerate(space.nbhds):
        nb[perm[x]] = sum(1 << perm[y] for y in bits(v))
    return Pretopology.from_nbhds(nb)


def canonical_code(space: Pretopology) -> int:
    return min(relation_code(permute(space, p)) for p in permutations(range(space.n)))


def is_canonical(space: Pretopology) -> bool:
    return relation_code(space) == canonical_code(space)


def up_to_iso(spaces) -> Iterator[Pretopology]:
    """Keep only the canonical representative of each isomorphism class."""
    for s in spaces:
        if is_canonical(s):
            yield s
