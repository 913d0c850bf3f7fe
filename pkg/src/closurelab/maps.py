"""Maps between finite closure spaces and the continuity-like classes obtained
by changing the closure operator on either side."""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Sequence

from .bits import bits, mask_of, supersets
from .errors import NotATopology, PointOutOfRange, SizeMismatch, SpaceMismatch
from .space import (
    Pretopology,
    Topology,
    product,
    product_coords,
    product_index,
    semi_regularization,
    subspace,
    theta_closure_direct,
    theta_pretopology,
)


@dataclass(frozen=True)
class FiniteMap:
    domain: Pretopology
    codomain: Pretopology
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(y) for y in self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.domain.n:
            raise SizeMismatch(f"map has {len(images)} images for {self.domain.n} points")
        for x, y in enumerate(images):
            if not 0 <= y < self.codomain.n:
                raise PointOutOfRange(f"f({x}) = {y} outside the codomain")

    def __call__(self, x: int) -> int:
        return self.images[x]

    def image(self, a: int) -> int:
        return mask_of(self.images[x] for x in bits(a))

    def preimage(self, b: int) -> int:
        return mask_of(x for x, y in enumerate(self.images) if b >> y & 1)

    def with_spaces(self, domain: Pretopology, codomain: Pretopology) -> "FiniteMap":
        """Same underlying function, different closure operators on either side."""
        return FiniteMap(domain, codomain, self.images)


def identity(space: Pretopology) -> FiniteMap:
    return FiniteMap(space, space, tuple(range(space.n)))


def constant(domain: Pretopology, codomain: Pretopology, y: int) -> FiniteMap:
    return FiniteMap(domain, codomain, (y,) * domain.n)


def is_continuous_at(f: FiniteMap, x: int) -> bool:
    """``f(V(x))`` must lie in the minimal neighbourhood of ``f(x)``."""
    f.domain.check_point(x)
    target = f.codomain.nbhds[f.images[x]]
    img = f.images
    return all(target >> img[y] & 1 for y in bits(f.domain.nbhds[x]))


def is_continuous(f: FiniteMap) -> bool:
    dn, cn, img = f.domain.nbhds, f.codomain.nbhds, f.images
    for x, v in enumerate(dn):
        target = cn[img[x]]
        while v:
            low = v & -v
            if not target >> img[low.bit_length() - 1] & 1:
                return False
            v ^= low
    return True


def is_continuous_at_by_definition(f: FiniteMap, x: int) -> bool:
    """``x in u(A)`` implies ``f(x) in v(f(A))`` for every subset ``A``."""
    u, v = f.domain, f.codomain
    fx = f.images[x]
    return all(
        v.closure(f.image(a)) >> fx & 1
        for a in range(u.top + 1)
        if u.closure(a) >> x & 1
    )


def is_continuous_by_images(f: FiniteMap) -> bool:
    """``f(u(A)) ⊆ v(f(A))`` for every ``A``."""
    u, v = f.domain, f.codomain
    for a in range(u.top + 1):
        lhs = f.image(u.closure(a))
        if lhs & ~v.closure(f.image(a)):
            return False
    return True


def is_continuous_by_preimages(f: FiniteMap) -> bool:
    """``u(f⁻¹(B)) ⊆ f⁻¹(v(B))`` for every ``B``."""
    u, v = f.domain, f.codomain
    for b in range(v.top + 1):
        if u.closure(f.preimage(b)) & ~f.preimage(v.closure(b)):
            return False
    return True


def compose(f: FiniteMap, g: FiniteMap) -> FiniteMap:
    """``g ∘ f``: apply ``f`` first."""
    if f.codomain != g.domain:
        raise SpaceMismatch("codomain of the first map is not the domain of the second")
    return FiniteMap(f.domain, g.codomain, tuple(g.images[y] for y in f.images))


def projection(spaces: Sequence[Pretopology], i: int) -> FiniteMap:
    sizes = [s.n for s in spaces]
    dom = product(spaces)
    return FiniteMap(dom, spaces[i], tuple(product_coords(sizes, k)[i] for k in range(dom.n)))


def pairing(maps: Sequence[FiniteMap]) -> FiniteMap:
    """``z ↦ (f_1(z), ..., f_k(z))`` into the product of the codomains."""
    dom = maps[0].domain
    if any(m.domain != dom for m in maps):
        raise SpaceMismatch("maps do not share a domain")
    cods = [m.codomain for m in maps]
    sizes = [c.n for c in cods]
    images = tuple(product_index(sizes, [m.images[z] for m in maps]) for z in range(dom.n))
    return FiniteMap(dom, product(cods), images)


def product_map(maps: Sequence[FiniteMap]) -> FiniteMap:
    doms = [m.domain for m in maps]
    cods = [m.codomain for m in maps]
    dsizes, csizes = [d.n for d in doms], [c.n for c in cods]
    dom = product(doms)
    images = tuple(
        product_index(csizes, [m.images[c] for m, c in zip(maps, product_coords(dsizes, k))])
        for k in range(dom.n)
    )
    return FiniteMap(dom, product(cods), images)


def restrict(f: FiniteMap, a: int) -> FiniteMap:
    """Restriction of ``f`` to the subspace on ``a`` (relative closure)."""
    sub, pts = subspace(f.domain, a)
    return FiniteMap(sub, f.codomain, tuple(f.images[p] for p in pts))


@dataclass(frozen=True)
class ContinuityProfile:
    continuous: bool
    theta_continuous: bool
    strongly_theta_continuous: bool
    weakly_continuous: bool
    weakly_theta_continuous: bool
    super_continuous: bool

    IMPLICATIONS = (
        ("continuous", "theta_continuous"),
        ("strongly_theta_continuous", "continuous"),
        ("strongly_theta_continuous", "theta_continuous"),
        ("super_continuous", "continuous"),
        ("continuous", "weakly_continuous"),
        ("theta_continuous", "weakly_theta_continuous"),
    )

    def violations(self) -> list[tuple[str, str]]:
        return [(p, q) for p, q in self.IMPLICATIONS if getattr(self, p) and not getattr(self, q)]

    def as_dict(self) -> dict[str, bool]:
        return {fl.name: getattr(self, fl.name) for fl in fields(self)}


def _require_topologies(f: FiniteMap) -> tuple[Topology, Topology]:
    try:
        return f.domain.as_topology(), f.codomain.as_topology()
    except NotATopology:
        raise NotATopology("both spaces must be topological") from None


def classify(f: FiniteMap) -> ContinuityProfile:
    x, y = _require_topologies(f)
    tx, ty = theta_pretopology(x), theta_pretopology(y)
    sx = semi_regularization(x)

    def cont(dom, cod):
        return is_continuous(f.with_spaces(dom, cod))

    return ContinuityProfile(
        continuous=cont(x, y),
        theta_continuous=cont(tx, ty),
        strongly_theta_continuous=cont(tx, y),
        weakly_continuous=cont(x, ty),
        weakly_theta_continuous=cont(sx, ty),
        super_continuous=cont(sx, y),
    )


def is_theta_continuous(f: FiniteMap) -> bool:
    """Continuity between the θ-closure spaces of both topologies."""
    x, y = _require_topologies(f)
    return is_continuous(f.with_spaces(theta_pretopology(x), theta_pretopology(y)))


def theta_continuous_by_closed_nbhds(f: FiniteMap) -> bool:
    """For each neighbourhood ``V`` of ``f(x)`` some neighbourhood ``U`` of ``x`` has ``f(cl U) ⊆ cl V``."""
    x_sp, y_sp = _require_topologies(f)
    for x in range(x_sp.n):
        fx = f.images[x]
        for v in supersets(y_sp.nbhds[fx], y_sp.n):
            clv = y_sp.closure(v)
            if not any(
                f.image(x_sp.closure(u)) & ~clv == 0
                for u in supersets(x_sp.nbhds[x], x_sp.n)
            ):
                return False
    return True


def theta_continuous_by_closures(f: FiniteMap) -> bool:
    """``f(clθ A) ⊆ clθ f(A)`` with both θ-closures taken from their definition."""
    x_sp, y_sp = _require_topologies(f)
    return all(
        f.image(theta_closure_direct(x_sp, a)) & ~theta_closure_direct(y_sp, f.image(a)) == 0
        for a in range(x_sp.top + 1)
    )


def theta_continuous_by_preimages(f: FiniteMap) -> bool:
    """``clθ f⁻¹(B) ⊆ f⁻¹(clθ B)`` for every ``B``."""
    x_sp, y_sp = _require_topologies(f)
    return all(
        theta_closure_direct(x_sp, f.preimage(b)) & ~f.preimage(theta_closure_direct(y_sp, b)) == 0
        for b in range(y_sp.top + 1)
    )


def all_maps(domain: Pretopology, codomain: Pretopology):
    """Every total function, lexicographic by image tuple."""
    from itertools import product as cartesian

    for images in cartesian(range(codomain.n), repeat=domain.n):
        yield FiniteMap(domain, codomain, images)
