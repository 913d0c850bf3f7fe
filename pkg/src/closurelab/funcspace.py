"""Continuous function spaces ``Y^X`` and closure structures on them.

For finite spaces continuous convergence is governed by one family of sets,

    C(f) = {g : g(V_X(x)) ⊆ V_Y(f(x)) for every x},

the minimal neighbourhoods of the continuous-convergence pretopology σ*.
A structure σ is admissible iff ``V_σ(f) ⊆ C(f)`` and proper iff
``C(f) ⊆ V_σ(f)`` for all ``f``; the definitional forms are kept as oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product as cartesian
from typing import Iterable, Sequence

from .bits import bits, full, mask_of
from .enumeration import enumerate_pretopologies
from .errors import (
    CarrierMismatch,
    EmptyList,
    IndexMismatch,
    NotAnInteriorCover,
    SectionNotContinuous,
    SizeMismatch,
    SizeOverflow,
)
from .maps import FiniteMap, is_continuous
from .report import ClauseReport, implication
from .space import (
    EQUAL,
    MAX_POINTS,
    Pretopology,
    Topology,
    compare,
    discrete,
    is_coarser_or_equal,
    is_interior_cover,
    join,
    meet,
    product,
    sierpinski,
    topological_modification,
)

MAX_CANDIDATES = 10**6


def _continuous_images(x: Pretopology, y: Pretopology, images: Sequence[int]) -> bool:
    ynb = y.nbhds
    for p, v in enumerate(x.nbhds):
        target = ynb[images[p]]
        for q in bits(v):
            if not target >> images[q] & 1:
                return False
    return True


@dataclass(frozen=True)
class FunctionSpace:
    """All continuous maps ``X → Y`` in lexicographic order of image tuples."""

    X: Pretopology
    Y: Pretopology
    functions: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.functions)

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {f: i for i, f in enumerate(self.functions)}

    @cached_property
    def cc_nbhds(self) -> tuple[int, ...]:
        """``C(f)`` for every function index."""
        xs = [list(bits(v)) for v in self.X.nbhds]
        ynb = self.Y.nbhds
        out = []
        for f in self.functions:
            targets = [ynb[f[p]] for p in range(self.X.n)]
            m = 0
            for j, g in enumerate(self.functions):
                if all(targets[p] >> g[q] & 1 for p in range(self.X.n) for q in xs[p]):
                    m |= 1 << j
            out.append(m)
        return tuple(out)

    def as_map(self, i: int) -> FiniteMap:
        return FiniteMap(self.X, self.Y, self.functions[i])

    def sigma(self, structure: Pretopology) -> "SigmaStructure":
        return SigmaStructure(self, structure)


@dataclass(frozen=True)
class SigmaStructure:
    """A closure structure on the carrier of a function space."""

    base: FunctionSpace
    structure: Pretopology

    def __post_init__(self):
        if self.structure.n != len(self.base):
            raise SizeMismatch(
                f"structure has {self.structure.n} points, function space has {len(self.base)}"
            )

    @property
    def is_topological(self) -> bool:
        return self.structure.is_idempotent()


def enumerate_functions(X: Pretopology, Y: Pretopology, limit: int = MAX_CANDIDATES) -> FunctionSpace:
    if Y.n ** X.n > limit:
        raise SizeOverflow(f"{Y.n}^{X.n} candidate maps exceeds limit {limit}")
    funcs = tuple(
        images for images in cartesian(range(Y.n), repeat=X.n) if _continuous_images(X, Y, images)
    )
    if len(funcs) > MAX_POINTS:
        raise SizeOverflow(f"{len(funcs)} continuous maps exceeds carrier bound {MAX_POINTS}")
    return FunctionSpace(X, Y, funcs)


def evaluation_map(fs: FunctionSpace, sigma: SigmaStructure | None = None) -> FiniteMap:
    """``ε(f_i, x) = f_i(x)`` on ``σ × X``; row-major, function index first."""
    structure = (sigma or cc_pretopology(fs)).structure
    dom = product([structure, fs.X])
    images = tuple(f[x] for f in fs.functions for x in range(fs.X.n))
    return FiniteMap(dom, fs.Y, images)


def curry(g: FiniteMap, Z: Pretopology, fs: FunctionSpace, sigma: SigmaStructure | None = None) -> FiniteMap:
    """``g*(z) = index of x ↦ g(z, x)``, as a map ``Z → (Y^X, σ)``."""
    nx = fs.X.n
    if g.domain.n != Z.n * nx or g.codomain.n != fs.Y.n:
        raise IndexMismatch("g must map the product Z × X into Y")
    structure = (sigma or cc_pretopology(fs)).structure
    out = []
    for z in range(Z.n):
        section = g.images[z * nx : (z + 1) * nx]
        i = fs.index.get(section)
        if i is None:
            raise SectionNotContinuous(z)
        out.append(i)
    return FiniteMap(Z, structure, tuple(out))


def uncurry(h: FiniteMap, fs: FunctionSpace) -> FiniteMap:
    """``g(z, x) = h(z)(x)`` on the product ``Z × X``."""
    if h.codomain.n != len(fs):
        raise IndexMismatch("codomain of h is not the function-space carrier")
    dom = product([h.domain, fs.X])
    images = tuple(fs.functions[i][x] for i in h.images for x in range(fs.X.n))
    return FiniteMap(dom, fs.Y, images)


def cc_pretopology(fs: FunctionSpace) -> SigmaStructure:
    """σ*: the structure whose convergence is continuous convergence."""
    return SigmaStructure(fs, _rewrap(Pretopology.from_nbhds(fs.cc_nbhds)))


def _rewrap(space: Pretopology) -> Pretopology:
    return Topology(space.closures) if space.is_idempotent() else space


def is_admissible(sigma: SigmaStructure) -> bool:
    cc = sigma.base.cc_nbhds
    return all(v & ~c == 0 for v, c in zip(sigma.structure.nbhds, cc))


def is_proper(sigma: SigmaStructure) -> bool:
    cc = sigma.base.cc_nbhds
    return all(c & ~v == 0 for v, c in zip(sigma.structure.nbhds, cc))


def admissible_by_evaluation(sigma: SigmaStructure) -> bool:
    """Admissibility read as continuity of the evaluation map."""
    return is_continuous(evaluation_map(sigma.base, sigma))


def _z_spaces(max_z: int) -> list[Pretopology]:
    return [z for n in range(1, max_z + 1) for z in enumerate_pretopologies(n)]


@lru_cache(maxsize=256)
def _sections(fs: FunctionSpace, zs: tuple[Pretopology, ...]) -> tuple:
    """``(V_Z lists, g*, g continuous)`` for every ``g*: Z → Y^X``; ``g(z, x) = g*(z)(x)``.

    Continuity of ``g`` on ``Z × X`` does not depend on σ, so it is computed
    once per function space straight from the minimal neighbourhoods.
    """
    vy, funcs = fs.Y.nbhds, fs.functions
    xs = [list(bits(v)) for v in fs.X.nbhds]
    out = []
    for Z in zs:
        vz = [list(bits(v)) for v in Z.nbhds]
        for h in cartesian(range(len(fs)), repeat=Z.n):
            g_ok = all(
                vy[funcs[h[z]][x]] >> funcs[h[w]][p] & 1
                for z in range(Z.n)
                for x in range(fs.X.n)
                for w in vz[z]
                for p in xs[x]
            )
            out.append((vz, h, g_ok))
    return tuple(out)


def _exponential_pairs(sigma: SigmaStructure, zs: Iterable[Pretopology]):
    """Yield ``(g* continuous, g continuous)`` for every ``g*: Z → Y^X`` over the test spaces."""
    vs = sigma.structure.nbhds
    for vz, h, g_ok in _sections(sigma.base, tuple(zs)):
        h_ok = all(vs[h[z]] >> h[w] & 1 for z in range(len(vz)) for w in vz[z])
        yield h_ok, g_ok


def admissible_by_definition(sigma: SigmaStructure, max_z: int = 3, zs=None) -> bool:
    """Every continuous ``g*: Z → (Y^X, σ)`` has a continuous ``g`` (bounded ``Z``)."""
    zs = _z_spaces(max_z) if zs is None else zs
    return all(g for h, g in _exponential_pairs(sigma, zs) if h)


def proper_by_definition(sigma: SigmaStructure, max_z: int = 3, zs=None) -> bool:
    """Every continuous ``g: Z × X → Y`` has a continuous ``g*`` (bounded ``Z``).

    Continuous ``g`` have continuous sections, so ranging ``g*`` over all maps
    into ``Y^X`` covers every continuous ``g``.
    """
    zs = _z_spaces(max_z) if zs is None else zs
    return all(h for h, g in _exponential_pairs(sigma, zs) if g)


def reduction_test_spaces(max_z: int = 3) -> list[Pretopology]:
    """Finite members of the reduced test class: the Sierpiński space and
    discrete spaces (finite T1 spaces are discrete)."""
    return [sierpinski()] + [discrete(n) for n in range(1, max_z + 1)]


def proper_by_sierpinski(sigma: SigmaStructure, max_z: int = 3) -> bool:
    return proper_by_definition(sigma, zs=reduction_test_spaces(max_z))


def admissible_by_sierpinski(sigma: SigmaStructure, max_z: int = 3) -> bool:
    return admissible_by_definition(sigma, zs=reduction_test_spaces(max_z))


def one_nonisolated_test_spaces(max_z: int = 3) -> list[Topology]:
    """Topologies on at most ``max_z`` points with at most one non-isolated point."""
    from .enumeration import enumerate_topologies

    out = []
    for n in range(1, max_z + 1):
        for t in enumerate_topologies(n):
            if sum(1 for v in t.nbhds if v.bit_count() > 1) <= 1:
                out.append(t)
    return out


def finest_proper_topology(fs: FunctionSpace) -> SigmaStructure:
    """Open sets are the ``G`` with ``C(f) ⊆ G`` for every ``f`` in ``G``."""
    return SigmaStructure(fs, topological_modification(cc_pretopology(fs).structure))


def absorbing_sets(fs: FunctionSpace) -> list[int]:
    """Brute-force list of sets absorbing ``C(f)`` for each member ``f``."""
    cc = fs.cc_nbhds
    return [
        g for g in range(full(len(fs)) + 1) if all(cc[f] & ~g == 0 for f in bits(g))
    ]


def set_open(fs: FunctionSpace, a: int, v: int) -> int:
    """``(A, V) = {f : f(A) ⊆ V}`` as a bitmask over function indices."""
    pts = list(bits(a))
    return mask_of(i for i, f in enumerate(fs.functions) if all(v >> f[p] & 1 for p in pts))


def generated_topology(k: int, subbase: Iterable[int]) -> Topology:
    """Topology on ``k`` points generated by a subbase of bitmasks."""
    nb = [full(k)] * k
    for s in subbase:
        for i in bits(s):
            nb[i] &= s
    return Topology(Pretopology.from_nbhds(nb).closures)


def _nonempty_interior_sets(Y: Pretopology, open_only: bool) -> list[int]:
    if open_only:
        return [v for v in range(1, Y.top + 1) if Y.interior(v) == v]
    return [v for v in range(1, Y.top + 1) if Y.interior(v)]


def a_subbase(fs: FunctionSpace, family: Iterable[int], open_only: bool = True) -> list[int]:
    family = list(family)
    for a in family:
        fs.X.check_subset(a)
        if a == 0:
            raise SizeMismatch("members of the family must be nonempty")
    vs = _nonempty_interior_sets(fs.Y, open_only)
    return [set_open(fs, a, v) for a in family for v in vs]


def a_topology(fs: FunctionSpace, family: Iterable[int], open_only: bool = True) -> SigmaStructure:
    """Set-open topology over ``family``; ``V`` ranges over nonempty open sets of ``Y``.

    ``open_only=False`` lets ``V`` range over every set with nonempty interior,
    matching the generator set of the cover topology.
    """
    return SigmaStructure(fs, generated_topology(len(fs), a_subbase(fs, family, open_only)))


def cover_closures(X: Pretopology, cover: Iterable[int]) -> list[int]:
    """Distinct sets ``u(K)`` with ``u(K)`` inside some member of the cover."""
    cover = list(cover)
    out = set()
    for k in range(X.top + 1):
        c = X.closure(k)
        if any(c & ~m == 0 for m in cover):
            out.add(c)
    return sorted(out)


def c_subbase(fs: FunctionSpace, cover: Iterable[int], open_only: bool = False) -> list[int]:
    cover = list(cover)
    for m in cover:
        fs.X.check_subset(m)
    if not is_interior_cover(fs.X, cover, fs.X.top):
        raise NotAnInteriorCover("interiors of the cover do not cover X")
    vs = _nonempty_interior_sets(fs.Y, open_only)
    return [set_open(fs, c, v) for c in cover_closures(fs.X, cover) for v in vs]


def c_topology(fs: FunctionSpace, cover: Iterable[int], open_only: bool = False) -> SigmaStructure:
    """Topology from ``(u(K), V)`` with ``V`` of nonempty interior, ``u(K)`` inside a cover member."""
    return SigmaStructure(fs, generated_topology(len(fs), c_subbase(fs, cover, open_only)))


def generator_variants(fs: FunctionSpace, family: Iterable[int], cover: Iterable[int]) -> dict[str, str]:
    """Compare each set-open topology built with open ``V`` against the one
    built with every ``V`` of nonempty interior."""
    family, cover = list(family), list(cover)
    return {
        "a-topology": compare(a_topology(fs, family, True).structure, a_topology(fs, family, False).structure),
        "c-topology": compare(c_topology(fs, cover, True).structure, c_topology(fs, cover, False).structure),
    }


def _same_base(sigmas: Sequence[SigmaStructure]) -> FunctionSpace:
    if not sigmas:
        raise EmptyList("need at least one structure")
    fs = sigmas[0].base
    if any(s.base != fs for s in sigmas):
        raise CarrierMismatch("structures live on different function spaces")
    return fs


def verify_ordering(s1: SigmaStructure, s2: SigmaStructure) -> ClauseReport:
    """Check the four order clauses relating proper and admissible structures."""
    fs = _same_base([s1, s2])
    le = is_coarser_or_equal(s1.structure, s2.structure)
    p1, p2 = is_proper(s1), is_proper(s2)
    a1, a2 = is_admissible(s1), is_admissible(s2)
    star = cc_pretopology(fs)
    both1, both2 = p1 and a1, p2 and a2
    clauses = {
        "proper-descends": implication(p2 and le, p1),
        "admissible-ascends": implication(a1 and le, a2),
        "proper-below-admissible": implication(p1 and a2, le),
        "unique-proper-admissible": implication(
            both1 or both2,
            (not both1 or s1.structure == star.structure) and (not both2 or s2.structure == star.structure),
        ),
    }
    notes = {"cc-structure-proper-and-admissible": is_proper(star) and is_admissible(star)}
    return ClauseReport(clauses, notes)


def verify_lattice_closure(sigmas: Sequence[SigmaStructure]) -> ClauseReport:
    fs = _same_base(sigmas)
    structures = [s.structure for s in sigmas]
    lo, hi = SigmaStructure(fs, meet(structures)), SigmaStructure(fs, join(structures))
    all_proper = all(is_proper(s) for s in sigmas)
    all_adm = all(is_admissible(s) for s in sigmas)
    clauses = {
        "meet-proper": implication(all_proper, is_proper(lo)),
        "join-proper": implication(all_proper, is_proper(hi)),
        "join-admissible": implication(all_adm, is_admissible(hi)),
    }
    return ClauseReport(clauses, {"meet": lo.structure, "join": hi.structure})


def same_structure(s1: SigmaStructure, s2: SigmaStructure) -> bool:
    return compare(s1.structure, s2.structure) == EQUAL
