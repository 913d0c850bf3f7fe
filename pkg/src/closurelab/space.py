"""Finite Čech closure spaces.

A finitely additive closure operator on a finite carrier is fixed by the
closures of its singletons, so a space is stored as the tuple
``closures[x] = u({x})`` (bitmasks).  Dually every point has a smallest
neighbourhood ``V(x) = {y : x in u({y})}``; a set is a neighbourhood of ``x``
exactly when it contains ``V(x)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from math import prod
from typing import Iterable, Sequence

from .bits import bits, full, mask_of
from .errors import (
    AxiomViolation,
    CarrierMismatch,
    EmptyList,
    NotAnInteriorCover,
    NotATopology,
    PointOutOfRange,
    SizeMismatch,
    SizeOverflow,
)

# Python ints are unbounded, so the bound only keeps enumerations sane.
MAX_POINTS = 256

EQUAL = "equal"
COARSER = "coarser"
FINER = "finer"
INCOMPARABLE = "incomparable"


@dataclass(frozen=True, eq=False)
class Pretopology:
    """A Čech closure space on points ``0..n-1``.

    Instances are immutable and validated on construction: every closure must
    fit the carrier and contain its own point.
    """

    closures: tuple[int, ...]

    def __post_init__(self):
        closures = tuple(int(c) for c in self.closures)
        object.__setattr__(self, "closures", closures)
        n = len(closures)
        if n == 0:
            raise SizeMismatch("empty carrier")
        if n > MAX_POINTS:
            raise SizeOverflow(f"{n} points exceeds bound {MAX_POINTS}")
        top = full(n)
        for x, c in enumerate(closures):
            if c < 0 or c & ~top:
                raise SizeMismatch(f"closure of {x} leaves the {n}-point carrier")
        bad = [("C2", x) for x, c in enumerate(closures) if not c >> x & 1]
        if bad:
            raise AxiomViolation(bad)

    @classmethod
    def from_nbhds(cls, nbhds: Sequence[int]):
        """Build the space whose minimal neighbourhoods are ``nbhds``."""
        n = len(nbhds)
        closures = [0] * n
        for x, v in enumerate(nbhds):
            for y in bits(v):
                if y >= n:
                    raise SizeMismatch(f"neighbourhood of {x} leaves the carrier")
                closures[y] |= 1 << x
        return cls(tuple(closures))

    @property
    def n(self) -> int:
        return len(self.closures)

    @property
    def top(self) -> int:
        return full(self.n)

    @cached_property
    def nbhds(self) -> tuple[int, ...]:
        v = [0] * self.n
        for y, c in enumerate(self.closures):
            for x in bits(c):
                v[x] |= 1 << y
        return tuple(v)

    def __eq__(self, other):
        if not isinstance(other, Pretopology):
            return NotImplemented
        return self.closures == other.closures

    def __hash__(self):
        return hash(self.closures)

    def __repr__(self):
        body = ", ".join(f"{x}:{sorted(bits(c))}" for x, c in enumerate(self.closures))
        return f"{type(self).__name__}({body})"

    def check_subset(self, a: int) -> int:
        if a < 0 or a & ~self.top:
            raise SizeMismatch(f"subset {a:#b} leaves the {self.n}-point carrier")
        return a

    def check_point(self, x: int) -> int:
        if not 0 <= x < self.n:
            raise PointOutOfRange(f"point {x} not in 0..{self.n - 1}")
        return x

    def closure(self, a: int) -> int:
        c = 0
        cl = self.closures
        while a:
            low = a & -a
            c |= cl[low.bit_length() - 1]
            a ^= low
        return c

    def interior(self, a: int) -> int:
        top = self.top
        return top & ~self.closure(top & ~a)

    def nbhd_of_set(self, a: int) -> int:
        """Smallest neighbourhood of a subset: the union of point neighbourhoods."""
        v = 0
        for x in bits(a):
            v |= self.nbhds[x]
        return v

    def is_open(self, a: int) -> bool:
        return self.interior(a) == a

    def is_closed(self, a: int) -> bool:
        return self.closure(a) == a

    def is_idempotent(self) -> bool:
        return all(self.closure(c) == c for c in self.closures)

    def as_topology(self) -> "Topology":
        if isinstance(self, Topology):
            return self
        if not self.is_idempotent():
            raise NotATopology("closure operator is not idempotent")
        return Topology(self.closures)


class Topology(Pretopology):
    """A pretopology whose closure is idempotent (a finite topological space)."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_idempotent():
            raise NotATopology("closure operator is not idempotent")

    @classmethod
    def from_open_sets(cls, n: int, opens: Iterable[int]) -> "Topology":
        family = set(opens)
        top = full(n)
        if 0 not in family or top not in family:
            raise NotATopology("open sets must contain the empty set and the carrier")
        for a in family:
            if a & ~top:
                raise SizeMismatch(f"open set {a:#b} leaves the carrier")
        for a, b in combinations(family, 2):
            if a | b not in family or a & b not in family:
                raise NotATopology("open sets not closed under union and intersection")
        nbhds = []
        for x in range(n):
            v = top
            for a in family:
                if a >> x & 1:
                    v &= a
            nbhds.append(v)
        return cls.from_nbhds(nbhds)

    @cached_property
    def open_sets(self) -> tuple[int, ...]:
        # every open set is the union of the minimal neighbourhoods of its points
        opens = {0}
        for v in self.nbhds:
            opens |= {o | v for o in opens}
        return tuple(sorted(opens))

    @property
    def closed_sets(self) -> tuple[int, ...]:
        top = self.top
        return tuple(sorted(top & ~o for o in self.open_sets))


def discrete(n: int) -> Topology:
    return Topology(tuple(1 << x for x in range(n)))


def indiscrete(n: int) -> Topology:
    return Topology((full(n),) * n)


def sierpinski() -> Topology:
    """Open sets ``∅, {1}, {0,1}``: the point 0 is closed, 1 is dense."""
    return Topology((0b01, 0b11))


def verify_closure_axioms(singleton_closures: Sequence[Iterable[int] | int], n: int | None = None) -> Pretopology:
    """Validate singleton closures and return the resulting space.

    Closures may be given as bitmasks or as iterables of points.  (C1) and (C3)
    hold automatically once the operator is extended additively; only (C2) can
    fail, and every failing point is reported in the raised
    :class:`AxiomViolation`.
    """
    masks = []
    for c in singleton_closures:
        masks.append(c if isinstance(c, int) else mask_of(c))
    size = len(masks) if n is None else n
    if len(masks) != size:
        raise SizeMismatch(f"expected {size} closures, got {len(masks)}")
    top = full(size)
    for x, c in enumerate(masks):
        if c & ~top:
            raise SizeMismatch(f"closure of {x} leaves the {size}-point carrier")
    return Pretopology(tuple(masks))


def closure_of(space: Pretopology, a: int) -> int:
    return space.closure(space.check_subset(a))


def interior_of(space: Pretopology, a: int) -> int:
    return space.interior(space.check_subset(a))


def minimal_neighborhood(space: Pretopology, x: int) -> int:
    return space.nbhds[space.check_point(x)]


def closure_from_base(n: int, base: Sequence[Iterable[int]], a: int) -> int:
    """Closure reconstructed from neighbourhood bases.

    ``base[x]`` is a family of subsets forming a local base at ``x``;
    ``x in u(A)`` iff every member meets ``A``.
    """
    return mask_of(x for x in range(n) if all(b & a for b in base[x]))


def _same_carrier(spaces: Sequence[Pretopology]) -> int:
    if not spaces:
        raise EmptyList("need at least one space")
    n = spaces[0].n
    if any(s.n != n for s in spaces):
        raise CarrierMismatch("spaces live on different carriers")
    return n


def compare(u1: Pretopology, u2: Pretopology) -> str:
    """Order two closures on one carrier; ``coarser`` means ``u1 <= u2``."""
    _same_carrier([u1, u2])
    le = all(c1 & c2 == c2 for c1, c2 in zip(u1.closures, u2.closures))
    ge = all(c1 & c2 == c1 for c1, c2 in zip(u1.closures, u2.closures))
    if le and ge:
        return EQUAL
    if le:
        return COARSER
    if ge:
        return FINER
    return INCOMPARABLE


def is_coarser_or_equal(u1: Pretopology, u2: Pretopology) -> bool:
    return compare(u1, u2) in (EQUAL, COARSER)


def meet(spaces: Sequence[Pretopology]) -> Pretopology:
    """Infimum: a set is a neighbourhood iff it is one in every input."""
    n = _same_carrier(spaces)
    nb = [0] * n
    for s in spaces:
        nb = [a | b for a, b in zip(nb, s.nbhds)]
    return _rewrap(Pretopology.from_nbhds(nb))


def join(spaces: Sequence[Pretopology]) -> Pretopology:
    """Supremum: neighbourhoods generated by all inputs' neighbourhoods."""
    n = _same_carrier(spaces)
    nb = [full(n)] * n
    for s in spaces:
        nb = [a & b for a, b in zip(nb, s.nbhds)]
    return _rewrap(Pretopology.from_nbhds(nb))


def _rewrap(space: Pretopology) -> Pretopology:
    return Topology(space.closures) if space.is_idempotent() else space


def product_index(sizes: Sequence[int], coords: Sequence[int]) -> int:
    """Row-major index of a tuple; the first factor is most significant."""
    i = 0
    for s, c in zip(sizes, coords):
        i = i * s + c
    return i


def product_coords(sizes: Sequence[int], index: int) -> tuple[int, ...]:
    out = []
    for s in reversed(sizes):
        index, c = divmod(index, s)
        out.append(c)
    return tuple(reversed(out))


def product_set(sizes: Sequence[int], masks: Sequence[int]) -> int:
    """Bitmask of the cartesian product of factor subsets."""
    idx = [0]
    for s, m in zip(sizes, masks):
        pts = list(bits(m))
        idx = [i * s + p for i in idx for p in pts]
    return mask_of(idx)


def product(spaces: Sequence[Pretopology]) -> Pretopology:
    """Product closure space; a :class:`Topology` if every factor is one."""
    if not spaces:
        raise EmptyList("need at least one factor")
    sizes = [s.n for s in spaces]
    total = prod(sizes)
    if total > MAX_POINTS:
        raise SizeOverflow(f"product has {total} points, bound is {MAX_POINTS}")
    nbhds = [
        product_set(sizes, [s.nbhds[c] for s, c in zip(spaces, product_coords(sizes, i))])
        for i in range(total)
    ]
    space = Pretopology.from_nbhds(nbhds)
    if all(isinstance(s, Topology) for s in spaces):
        return Topology(space.closures)
    return space


def is_regular(space: Pretopology) -> bool:
    """Regular iff the closure of each minimal neighbourhood stays inside it."""
    return all(space.closure(v) == v for v in space.nbhds)


def is_regular_by_separation(space: Pretopology) -> bool:
    """Definitional regularity: points off ``u(A)`` separate from ``A`` by disjoint neighbourhoods."""
    n, top = space.n, space.top
    every = range(top + 1)
    interiors = [space.interior(s) for s in every]
    for x in range(n):
        for a in every:
            if space.closure(a) >> x & 1:
                continue
            ok = any(
                not (s & w)
                for s in every
                if interiors[s] >> x & 1
                for w in every
                if interiors[w] & a == a
            )
            if not ok:
                return False
    return True


def is_regular_by_neighborhoods(space: Pretopology) -> bool:
    """Every neighbourhood ``U`` of ``x`` contains ``u(U1)`` for some neighbourhood ``U1``."""
    top = space.top
    nbs = [[s for s in range(top + 1) if space.interior(s) >> x & 1] for x in range(space.n)]
    return all(
        any(space.closure(u1) & u == space.closure(u1) for u1 in nbs[x])
        for x in range(space.n)
        for u in nbs[x]
    )


def is_interior_cover(space: Pretopology, family: Iterable[int], target: int) -> bool:
    covered = 0
    for g in family:
        covered |= space.interior(g)
    return covered & target == target


def is_compact_subset(space: Pretopology, a: int, cover: Sequence[int]) -> tuple[bool, tuple[int, ...]]:
    """Decide compactness of ``a`` against one interior cover.

    Returns ``(True, witness)`` where ``witness`` is a subcover of minimum
    cardinality.  Small covers are searched exactly; large ones fall back to a
    greedy pass over the member interiors.
    """
    space.check_subset(a)
    cover = tuple(cover)
    if not is_interior_cover(space, cover, a):
        raise NotAnInteriorCover("interiors of the members do not cover the target")
    interiors = [space.interior(g) & a for g in cover]
    if len(cover) <= 16:
        for k in range(len(cover) + 1):
            for pick in combinations(range(len(cover)), k):
                got = 0
                for i in pick:
                    got |= interiors[i]
                if got == a:
                    return True, tuple(cover[i] for i in pick)
    remaining, chosen = a, []
    while remaining:
        best = max(range(len(cover)), key=lambda i: (interiors[i] & remaining).bit_count())
        chosen.append(cover[best])
        remaining &= ~interiors[best]
    return True, tuple(chosen)


def topological_modification(space: Pretopology) -> Topology:
    """Finest topology coarser than ``space``: its open sets are the ``u``-open sets."""
    nb = list(space.nbhds)
    changed = True
    while changed:
        changed = False
        for x in range(space.n):
            grown = nb[x]
            for y in bits(nb[x]):
                grown |= nb[y]
            if grown != nb[x]:
                nb[x] = grown
                changed = True
    return Topology(Pretopology.from_nbhds(nb).closures)


def u_open_sets(space: Pretopology) -> tuple[int, ...]:
    """All sets with ``int_u A = A``, by brute force over the powerset."""
    return tuple(a for a in range(space.top + 1) if space.interior(a) == a)


def _topology(t: Pretopology) -> Topology:
    if isinstance(t, Topology):
        return t
    return t.as_topology()


def theta_pretopology(t: Pretopology) -> Pretopology:
    """θ-closure space: the minimal neighbourhood of ``x`` is ``cl(U_x)``."""
    t = _topology(t)
    return _rewrap(Pretopology.from_nbhds([t.closure(v) for v in t.nbhds]))


@lru_cache(maxsize=1024)
def _closed_nbhds(t: Topology) -> tuple[tuple[int, ...], ...]:
    """Per point, every closed set having the point in its interior."""
    closed = [s for s in range(t.top + 1) if t.closure(s) == s]
    return tuple(tuple(s for s in closed if t.interior(s) >> x & 1) for x in range(t.n))


def theta_closure_direct(t: Pretopology, a: int) -> int:
    """θ-closure of ``a``: points all of whose closed neighbourhoods meet ``a``."""
    table = _closed_nbhds(_topology(t))
    out = 0
    for x, family in enumerate(table):
        if all(s & a for s in family):
            out |= 1 << x
    return out


def regular_open_sets(t: Pretopology) -> tuple[int, ...]:
    t = _topology(t)
    return tuple(sorted({t.interior(t.closure(o)) for o in t.open_sets}))


def semi_regularization(t: Pretopology) -> Topology:
    """Topology generated by the regular open sets ``int(cl(U))``.

    The smallest regular open set around ``x`` is ``int(cl(U_x))``, which
    gives the minimal neighbourhoods directly.
    """
    t = _topology(t)
    return Topology(Pretopology.from_nbhds([t.interior(t.closure(v)) for v in t.nbhds]).closures)


def theta_open_topology(t: Pretopology) -> Topology:
    """Topology of θ-open sets."""
    return topological_modification(theta_pretopology(t))


def subspace(space: Pretopology, a: int) -> tuple[Pretopology, tuple[int, ...]]:
    """Relative closure on ``a``; returns the relabelled space and its points.

    Point ``i`` of the result is ``points[i]`` of the original carrier.
    """
    space.check_subset(a)
    pts = tuple(bits(a))
    if not pts:
        raise SizeMismatch("subspace of the empty set")
    pos = {p: i for i, p in enumerate(pts)}
    closures = tuple(mask_of(pos[q] for q in bits(space.closures[p] & a)) for p in pts)
    return _rewrap(Pretopology(closures)), pts


def all_subsets(space: Pretopology) -> range:
    return range(space.top + 1)


__all__ = [
    "MAX_POINTS",
    "EQUAL",
    "COARSER",
    "FINER",
    "INCOMPARABLE",
    "Pretopology",
    "Topology",
    "discrete",
    "indiscrete",
    "sierpinski",
    "verify_closure_axioms",
    "closure_of",
    "interior_of",
    "minimal_neighborhood",
    "closure_from_base",
    "compare",
    "is_coarser_or_equal",
    "meet",
    "join",
    "product",
    "product_index",
    "product_coords",
    "product_set",
    "is_regular",
    "is_regular_by_separation",
    "is_regular_by_neighborhoods",
    "is_interior_cover",
    "is_compact_subset",
    "topological_modification",
    "u_open_sets",
    "theta_pretopology",
    "theta_closure_direct",
    "regular_open_sets",
    "semi_regularization",
    "theta_open_topology",
    "subspace",
]
