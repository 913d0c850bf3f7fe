"""Exhaustive verification campaigns and counterexample mining.

Each registry id maps to a sweep over a documented class of small instances.
A sweep produces one :class:`VerdictRecord` per instance class; a ``fails``
record carries the first counterexample met in canonical order.  Sweeps are
independent, so campaigns fan out over processes and merge back in registry
order, which keeps reports byte-identical for any worker count.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable

from .bits import bits, full
from .enumeration import enumerate_pretopologies, enumerate_topologies, relation_code, up_to_iso
from .errors import BoundExceeded, UnknownPredicate, UnknownTheoremId
from .funcspace import (
    FunctionSpace,
    SigmaStructure,
    a_topology,
    absorbing_sets,
    admissible_by_definition,
    admissible_by_evaluation,
    admissible_by_sierpinski,
    c_topology,
    cc_pretopology,
    cover_closures,
    enumerate_functions,
    finest_proper_topology,
    is_admissible,
    is_proper,
    one_nonisolated_test_spaces,
    proper_by_definition,
    proper_by_sierpinski,
    verify_lattice_closure,
    verify_ordering,
)
from .maps import (
    FiniteMap,
    all_maps,
    classify,
    identity,
    is_continuous,
    is_theta_continuous,
    theta_continuous_by_closed_nbhds,
    theta_continuous_by_closures,
    theta_continuous_by_preimages,
)
from .nets import (
    EpSequence,
    cc_by_basic_complements,
    cc_by_closed_sets,
    cc_by_definition,
    cc_by_neighborhoods,
    cc_by_upper_limits,
    check_convergence_class_axioms,
    converges,
    converges_continuously,
    enumerate_sequences,
)
from .report import FAILS, HOLDS, VACUOUS, VerdictRecord
from .space import (
    Pretopology,
    Topology,
    indiscrete,
    is_compact_subset,
    is_regular,
    product,
    sierpinski,
    theta_closure_direct,
    theta_open_topology,
    theta_pretopology,
    topological_modification,
)

REGISTRY = (
    "T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9", "T10",
    "C1", "C2", "C3", "C4", "R1", "NT1", "NT2", "NT3", "S31", "S32", "S33",
)

PREDICATES = (
    "non-idempotent-theta",
    "proper-not-admissible",
    "admissible-not-proper",
    "continuous-not-super",
    "theta-continuous-not-continuous",
)


@dataclass(frozen=True)
class CampaignConfig:
    max_points: int = 2
    max_function_carrier: int = 3
    max_sequence_length: int = 4
    theorem_ids: tuple[str, ...] = REGISTRY
    parallelism: int = 1
    up_to_iso: bool = False
    oracle: bool = False

    def __post_init__(self):
        object.__setattr__(self, "theorem_ids", tuple(self.theorem_ids))
        for name in ("max_points", "max_function_carrier", "max_sequence_length", "parallelism"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.max_points > 4:
            raise BoundExceeded("campaign sweeps support at most 4 points")
        for t in self.theorem_ids:
            if t not in REGISTRY:
                raise UnknownTheoremId(t)

    def report_fields(self) -> dict:
        """Everything that determines the verdicts; worker count is excluded."""
        return {
            "max_points": self.max_points,
            "max_function_carrier": self.max_function_carrier,
            "max_sequence_length": self.max_sequence_length,
            "theorem_ids": list(self.theorem_ids),
            "up_to_iso": self.up_to_iso,
            "oracle": self.oracle,
        }


_BOOL = {"true": True, "yes": True, "1": True, "false": False, "no": False, "0": False}
_KEYS = {
    "max_points": "max_points",
    "max_function_carrier": "max_function_carrier",
    "max_sequence_length": "max_sequence_length",
    "theorems": "theorem_ids",
    "theorem_ids": "theorem_ids",
    "jobs": "parallelism",
    "parallelism": "parallelism",
    "up_to_iso": "up_to_iso",
    "oracle": "oracle",
}


def parse_config(text: str) -> CampaignConfig:
    """Read ``key=value`` lines; ``#`` starts a comment."""
    values: dict = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or key not in _KEYS:
            raise ValueError(f"bad config line {raw!r}")
        name = _KEYS[key]
        if name == "theorem_ids":
            values[name] = REGISTRY if value.lower() == "all" else tuple(
                t.strip() for t in value.split(",") if t.strip()
            )
        elif name in ("up_to_iso", "oracle"):
            if value.lower() not in _BOOL:
                raise ValueError(f"bad boolean {value!r} for {key}")
            values[name] = _BOOL[value.lower()]
        else:
            values[name] = int(value)
    return CampaignConfig(**values)


# ---------------------------------------------------------------- instances


def describe(space: Pretopology) -> list[list[int]]:
    """Singleton closures as point lists (JSON-friendly)."""
    return [list(bits(c)) for c in space.closures]


@lru_cache(maxsize=None)
def _spaces(n: int, iso: bool) -> tuple[Pretopology, ...]:
    s = enumerate_pretopologies(n)
    return tuple(up_to_iso(s) if iso else s)


@lru_cache(maxsize=None)
def _topologies(n: int, iso: bool) -> tuple[Topology, ...]:
    s = enumerate_topologies(n)
    return tuple(up_to_iso(s) if iso else s)


@lru_cache(maxsize=None)
def _structures(k: int) -> tuple[Pretopology, ...]:
    return tuple(enumerate_pretopologies(k))


@lru_cache(maxsize=None)
def _structure_order(k: int) -> tuple[tuple[bool, ...], ...]:
    """``le[i][j]``: structure ``i`` is coarser than or equal to structure ``j``."""
    ss = _structures(k)
    return tuple(
        tuple(all(a & b == b for a, b in zip(s.closures, t.closures)) for t in ss) for s in ss
    )


@lru_cache(maxsize=None)
def _sequences(k: int, max_len: int) -> tuple[EpSequence, ...]:
    return tuple(enumerate_sequences(k, max_len))


def spaces_upto(cfg: CampaignConfig, n_max: int | None = None) -> list[Pretopology]:
    n_max = cfg.max_points if n_max is None else n_max
    return [s for n in range(1, n_max + 1) for s in _spaces(n, cfg.up_to_iso)]


def topologies_upto(cfg: CampaignConfig, n_max: int | None = None) -> list[Topology]:
    n_max = cfg.max_points if n_max is None else n_max
    return [t for n in range(1, n_max + 1) for t in _topologies(n, cfg.up_to_iso)]


@lru_cache(maxsize=None)
def _fs(X: Pretopology, Y: Pretopology) -> FunctionSpace:
    return enumerate_functions(X, Y)


def function_spaces(cfg: CampaignConfig, max_k: int | None = None) -> list[FunctionSpace]:
    max_k = cfg.max_function_carrier if max_k is None else max_k
    out = []
    for X in spaces_upto(cfg):
        for Y in spaces_upto(cfg):
            fs = _fs(X, Y)
            if len(fs) <= max_k:
                out.append(fs)
    return out


def fs_witness(fs: FunctionSpace, **extra) -> dict:
    w = {"X": describe(fs.X), "Y": describe(fs.Y), "functions": [list(f) for f in fs.functions]}
    for key, val in extra.items():
        w[key] = describe(val) if isinstance(val, Pretopology) else val
    return w


class Tally:
    """Counts cases of one instance class and keeps the first failure."""

    def __init__(self, check: str, instance: str):
        self.check, self.instance = check, instance
        self.cases = 0
        self.witness = None

    def add(self, ok: bool, witness: Callable[[], object]) -> None:
        self.cases += 1
        if not ok and self.witness is None:
            self.witness = witness()

    def record(self) -> VerdictRecord:
        inst = f"{self.instance} [{self.cases} cases]"
        if self.witness is not None:
            return VerdictRecord(self.check, inst, FAILS, self.witness)
        return VerdictRecord(self.check, inst, HOLDS if self.cases else VACUOUS)


def _fs_class(cfg: CampaignConfig, k: int | None = None) -> str:
    k = cfg.max_function_carrier if k is None else k
    iso = ", up to iso" if cfg.up_to_iso else ""
    return f"X,Y pretopologies on <={cfg.max_points} points{iso}, |Y^X|<={k}"


def _z_bound(cfg: CampaignConfig) -> int:
    return 3 if cfg.oracle else 2


def _z_spaces(bound: int) -> list[Pretopology]:
    return [z for n in range(1, bound + 1) for z in _spaces(n, False)]


# ------------------------------------------------------------------- sweeps


def check_t1(cfg: CampaignConfig) -> list[VerdictRecord]:
    zb = _z_bound(cfg)
    zs = _z_spaces(zb)
    t = Tally("T1", f"{_fs_class(cfg)}, every structure; admissible = evaluation continuous = definition (|Z|<={zb})")
    for fs in function_spaces(cfg):
        for s in _structures(len(fs)):
            sigma = SigmaStructure(fs, s)
            verdicts = (is_admissible(sigma), admissible_by_evaluation(sigma), admissible_by_definition(sigma, zs=zs))
            t.add(len(set(verdicts)) == 1, lambda: fs_witness(fs, sigma=s, verdicts=list(verdicts)))
    return [t.record()]


def _cc_sweep(cfg: CampaignConfig, check: str, label: str, route, topological_y: bool = False) -> list[VerdictRecord]:
    L = cfg.max_sequence_length
    t = Tally(check, f"{_fs_class(cfg)}, sequences prefix+cycle<={L}; {label}")
    for fs in function_spaces(cfg):
        if topological_y and not fs.Y.is_idempotent():
            continue
        for seq in _sequences(len(fs), L):
            for f in range(len(fs)):
                a, b = converges_continuously(seq, fs, f), route(seq, fs, f)
                t.add(a == b, lambda: fs_witness(fs, sequence=str(seq), f=f, tail=a, other=b))
    return [t.record()]


def check_t2(cfg):
    recs = _cc_sweep(cfg, "T2", "tail in C(f) = neighbourhood criterion", cc_by_neighborhoods)
    if cfg.oracle:
        recs += _cc_sweep(cfg, "T2", "tail in C(f) = joint convergence definition", cc_by_definition)
    return recs


def check_t3(cfg):
    return _cc_sweep(cfg, "T3", "tail in C(f) = upper-limit criterion over all B", cc_by_upper_limits)


def check_r1(cfg):
    return _cc_sweep(cfg, "R1", "tail in C(f) = upper-limit criterion over basic complements", cc_by_basic_complements)


def check_c1(cfg):
    return _cc_sweep(cfg, "C1", "topological Y; tail in C(f) = closed-set criterion", cc_by_closed_sets, True)


def check_t4(cfg: CampaignConfig) -> list[VerdictRecord]:
    clauses = Tally("T4", f"{_fs_class(cfg)}, every ordered pair of structures; ordering clauses")
    unique = Tally("T4", f"{_fs_class(cfg)}; exactly one structure is proper and admissible, and it is the cc structure")
    for fs in function_spaces(cfg):
        k = len(fs)
        ss = _structures(k)
        le = _structure_order(k)
        sig = [SigmaStructure(fs, s) for s in ss]
        prop = [is_proper(s) for s in sig]
        adm = [is_admissible(s) for s in sig]
        for i in range(len(ss)):
            for j in range(len(ss)):
                ok = (
                    (not (prop[j] and le[i][j]) or prop[i])
                    and (not (adm[i] and le[i][j]) or adm[j])
                    and (not (prop[i] and adm[j]) or le[i][j])
                )
                clauses.add(ok, lambda: fs_witness(fs, sigma=ss[i], sigma_prime=ss[j]))
        both = [ss[i] for i in range(len(ss)) if prop[i] and adm[i]]
        star = cc_pretopology(fs).structure
        unique.add(both == [star], lambda: fs_witness(fs, proper_and_admissible=[describe(b) for b in both]))
    # spot-check the report function against the inline clauses
    spot = Tally("T4", f"{_fs_class(cfg, 2)}, verify_ordering on every pair")
    for fs in function_spaces(cfg, 2):
        for s1 in _structures(len(fs)):
            for s2 in _structures(len(fs)):
                rep = verify_ordering(SigmaStructure(fs, s1), SigmaStructure(fs, s2))
                spot.add(rep.holds and rep.notes["cc-structure-proper-and-admissible"],
                         lambda: fs_witness(fs, sigma=s1, sigma_prime=s2, clauses=rep.clauses))
    return [clauses.record(), unique.record(), spot.record()]


def check_c2(cfg: CampaignConfig) -> list[VerdictRecord]:
    pairs = Tally("C2", f"{_fs_class(cfg)}, every pair of structures; meet/join closure")
    whole = Tally("C2", f"{_fs_class(cfg)}; all proper structures and all admissible structures at once")
    for fs in function_spaces(cfg):
        sig = [SigmaStructure(fs, s) for s in _structures(len(fs))]
        for a, b in combinations(sig, 2):
            rep = verify_lattice_closure([a, b])
            pairs.add(rep.holds, lambda: fs_witness(fs, sigma=a.structure, sigma_prime=b.structure, clauses=rep.clauses))
        for group in ([s for s in sig if is_proper(s)], [s for s in sig if is_admissible(s)]):
            rep = verify_lattice_closure(group)
            whole.add(rep.holds, lambda: fs_witness(fs, clauses=rep.clauses))
    return [pairs.record(), whole.record()]


def check_t5(cfg: CampaignConfig) -> list[VerdictRecord]:
    L = cfg.max_sequence_length
    t = Tally("T5", f"{_fs_class(cfg)}, every structure, sequences prefix+cycle<={L}; proper/admissible by convergence")
    for fs in function_spaces(cfg):
        k = len(fs)
        seqs = _sequences(k, L)
        cc = [[converges_continuously(s, fs, f) for f in range(k)] for s in seqs]
        for st in _structures(k):
            sigma = SigmaStructure(fs, st)
            conv = [[converges(s, st, f) for f in range(k)] for s in seqs]
            by_nets_p = all(not cc[i][f] or conv[i][f] for i in range(len(seqs)) for f in range(k))
            by_nets_a = all(not conv[i][f] or cc[i][f] for i in range(len(seqs)) for f in range(k))
            ok = by_nets_p == is_proper(sigma) and by_nets_a == is_admissible(sigma)
            t.add(ok, lambda: fs_witness(fs, sigma=st))
    return [t.record()]


def check_t6(cfg: CampaignConfig) -> list[VerdictRecord]:
    zb = _z_bound(cfg)
    zs = _z_spaces(zb)
    t = Tally("T6", f"{_fs_class(cfg)}, topological structures; derived = Sierpinski/discrete test spaces = definition (|Z|<={zb})")
    for fs in function_spaces(cfg):
        for st in _structures(len(fs)):
            if not st.is_idempotent():
                continue
            sigma = SigmaStructure(fs, st)
            p = (is_proper(sigma), proper_by_sierpinski(sigma), proper_by_definition(sigma, zs=zs))
            a = (is_admissible(sigma), admissible_by_sierpinski(sigma), admissible_by_definition(sigma, zs=zs))
            t.add(len(set(p)) == 1 and len(set(a)) == 1, lambda: fs_witness(fs, sigma=st, proper=list(p), admissible=list(a)))
    return [t.record()]


def check_c3(cfg: CampaignConfig) -> list[VerdictRecord]:
    zb = _z_bound(cfg)
    zs = one_nonisolated_test_spaces(zb)
    t = Tally("C3", f"{_fs_class(cfg)}, topological structures; test spaces with <=1 non-isolated point (|Z|<={zb})")
    for fs in function_spaces(cfg):
        for st in _structures(len(fs)):
            if not st.is_idempotent():
                continue
            sigma = SigmaStructure(fs, st)
            ok = (
                is_proper(sigma) == proper_by_definition(sigma, zs=zs)
                and is_admissible(sigma) == admissible_by_definition(sigma, zs=zs)
            )
            t.add(ok, lambda: fs_witness(fs, sigma=st))
    return [t.record()]


def check_t7(cfg: CampaignConfig) -> list[VerdictRecord]:
    L = cfg.max_sequence_length
    t = Tally("T7", f"{_fs_class(cfg)}, sequences prefix+cycle<={L}; CONSTANTS, SUBNETS, DIVERGENCE")
    for fs in function_spaces(cfg):
        rep = check_convergence_class_axioms(fs, L)
        t.add(rep.holds, lambda: fs_witness(fs, clauses=rep.clauses, notes={k: str(v) for k, v in rep.notes.items()}))
    return [t.record()]


def check_c4(cfg: CampaignConfig) -> list[VerdictRecord]:
    """Finite surrogate: continuous convergence is the convergence of the finest
    proper topology exactly when the cc structure is already topological."""
    L = cfg.max_sequence_length
    t = Tally("C4", f"{_fs_class(cfg)}, sequences prefix+cycle<={L}; cc class = finest-proper class iff cc structure topological")
    for fs in function_spaces(cfg):
        k = len(fs)
        fine = finest_proper_topology(fs).structure
        same = all(
            converges_continuously(s, fs, f) == converges(s, fine, f)
            for s in _sequences(k, L)
            for f in range(k)
        )
        topological = cc_pretopology(fs).is_topological
        t.add(same == topological, lambda: fs_witness(fs, same_class=same, topological=topological))
    return [t.record()]


def check_t8(cfg: CampaignConfig) -> list[VerdictRecord]:
    k_max = min(cfg.max_function_carrier, 4)
    t = Tally("T8", f"{_fs_class(cfg, k_max)}; finest proper = modification of cc structure = absorbing sets, dominates every proper topology")
    for fs in function_spaces(cfg, k_max):
        k = len(fs)
        fine = finest_proper_topology(fs)
        ok = fine.structure == topological_modification(cc_pretopology(fs).structure)
        ok = ok and set(fine.structure.as_topology().open_sets) == set(absorbing_sets(fs))
        ok = ok and is_proper(fine)
        for top in _topologies(k, False):
            if is_proper(SigmaStructure(fs, top)):
                # coarser means every singleton closure is at least as large
                ok = ok and all(b & ~a == 0 for a, b in zip(top.closures, fine.structure.closures))
        t.add(ok, lambda: fs_witness(fs, finest=fine.structure))
    return [t.record()]


def _families(n: int) -> Iterable[list[int]]:
    """Every family of nonempty subsets, the empty family included."""
    members = list(range(1, full(n) + 1))
    for code in range(1 << len(members)):
        yield [m for i, m in enumerate(members) if code >> i & 1]


def check_t9(cfg: CampaignConfig) -> list[VerdictRecord]:
    t = Tally("T9", f"regular X, any Y, pretopologies on <={cfg.max_points} points, every interior cover; cover topology admissible")
    for X in spaces_upto(cfg):
        if not is_regular(X):
            continue
        covers = [c for c in _families(X.n) if _covers(X, c)]
        for Y in spaces_upto(cfg):
            fs = _fs(X, Y)
            seen: dict[tuple[int, ...], bool] = {}
            for cover in covers:
                key = tuple(cover_closures(X, cover))
                if key not in seen:
                    seen[key] = is_admissible(c_topology(fs, cover))
                t.add(seen[key], lambda: fs_witness(fs, cover=[list(bits(m)) for m in cover]))
    return [t.record()]


def _covers(X: Pretopology, family: list[int]) -> bool:
    got = 0
    for g in family:
        got |= X.interior(g)
    return got == X.top


def check_t10(cfg: CampaignConfig) -> list[VerdictRecord]:
    compact = Tally("T10", f"pretopologies on <={cfg.max_points} points; every subset compact (witnessed subcover)")
    t = Tally("T10", f"X,Y pretopologies on <={cfg.max_points} points, every family of nonempty subsets; set-open topology proper")
    for X in spaces_upto(cfg):
        every = [g for g in range(1, X.top + 1) if X.interior(g)]
        for a in range(X.top + 1):
            ok, wit = is_compact_subset(X, a, every)
            covered = 0
            for g in wit:
                covered |= X.interior(g)
            compact.add(ok and covered & a == a, lambda: {"X": describe(X), "subset": list(bits(a))})
        families = list(_families(X.n))
        for Y in spaces_upto(cfg):
            fs = _fs(X, Y)
            for fam in families:
                t.add(is_proper(a_topology(fs, fam)), lambda: fs_witness(fs, family=[list(bits(m)) for m in fam]))
    return [compact.record(), t.record()]


def _topology_maps(cfg: CampaignConfig) -> Iterable[FiniteMap]:
    for X in topologies_upto(cfg):
        for Y in topologies_upto(cfg):
            yield from all_maps(X, Y)


def _map_witness(f: FiniteMap, **extra) -> dict:
    w = {"X": describe(f.domain), "Y": describe(f.codomain), "map": list(f.images)}
    w.update(extra)
    return w


def _maps_class(cfg: CampaignConfig) -> str:
    iso = ", up to iso" if cfg.up_to_iso else ""
    return f"all maps between topologies on <={cfg.max_points} points{iso}"


def check_nt1(cfg: CampaignConfig) -> list[VerdictRecord]:
    t = Tally("NT1", f"{_maps_class(cfg)}; closed-neighbourhood definition = continuity of θ-closure spaces")
    for f in _topology_maps(cfg):
        a, b = is_theta_continuous(f), theta_continuous_by_closed_nbhds(f)
        t.add(a == b, lambda: _map_witness(f, closure_space=a, definition=b))
    return [t.record()]


def check_nt2(cfg: CampaignConfig) -> list[VerdictRecord]:
    t = Tally("NT2", f"{_maps_class(cfg)}; image and preimage characterizations = definition")
    for f in _topology_maps(cfg):
        d = theta_continuous_by_closed_nbhds(f)
        c1, c2 = theta_continuous_by_closures(f), theta_continuous_by_preimages(f)
        t.add(d == c1 == c2, lambda: _map_witness(f, definition=d, images=c1, preimages=c2))
    return [t.record()]


def check_nt3(cfg: CampaignConfig) -> list[VerdictRecord]:
    prod_t = Tally("NT3", f"pairs of topologies on <={cfg.max_points} points; θ of product = product of θ")
    for T1 in topologies_upto(cfg):
        for T2 in topologies_upto(cfg):
            lhs = theta_pretopology(product([T1, T2]))
            rhs = product([theta_pretopology(T1), theta_pretopology(T2)])
            prod_t.add(lhs == rhs, lambda: {"T1": describe(T1), "T2": describe(T2)})
    nz = min(cfg.max_points, 2)
    g_t = Tally("NT3", f"Z,X,Y topologies on <={nz} points, every g: Z×X→Y; θ-continuous = continuous on θ-products")
    tops = topologies_upto(cfg, nz)
    for Z in tops:
        for X in tops:
            dom = product([Z, X])
            tdom = product([theta_pretopology(Z), theta_pretopology(X)])
            for Y in tops:
                ty = theta_pretopology(Y)
                for g in all_maps(dom, Y):
                    a = theta_continuous_by_closed_nbhds(g)
                    b = is_continuous(g.with_spaces(tdom, ty))
                    g_t.add(a == b, lambda: {"Z": describe(Z), "X": describe(X), "Y": describe(Y), "map": list(g.images)})
    return [prod_t.record(), g_t.record()]


def check_s31(cfg: CampaignConfig) -> list[VerdictRecord]:
    maps_t = Tally("S31", f"X pretopology, Y topology on <={cfg.max_points} points, every map; continuity unchanged by modifying X")
    for X in spaces_upto(cfg):
        hx = topological_modification(X)
        for Y in topologies_upto(cfg):
            for f in all_maps(X, Y):
                a, b = is_continuous(f), is_continuous(f.with_spaces(hx, Y))
                maps_t.add(a == b, lambda: _map_witness(f, original=a, modified=b))
    prod_t = Tally("S31", f"pairs of pretopologies on <={cfg.max_points} points; modification of product = product of modifications")
    for A in spaces_upto(cfg):
        for B in spaces_upto(cfg):
            lhs = topological_modification(product([A, B]))
            rhs = product([topological_modification(A), topological_modification(B)])
            prod_t.add(lhs == rhs, lambda: {"A": describe(A), "B": describe(B)})
    return [maps_t.record(), prod_t.record()]


def theta_open_sets_direct(T: Topology) -> set[int]:
    top = T.top
    return {a for a in range(top + 1) if theta_closure_direct(T, top & ~a) == top & ~a}


def check_s32(cfg: CampaignConfig) -> list[VerdictRecord]:
    opens = Tally("S32", f"topologies on <={cfg.max_points} points; modification of θ-closure = θ-open sets; regular ⇒ unchanged")
    for T in topologies_upto(cfg):
        th = theta_open_topology(T)
        ok = set(th.open_sets) == theta_open_sets_direct(T)
        if is_regular(T):
            ok = ok and th == T
        opens.add(ok, lambda: {"T": describe(T)})
    maps_t = Tally("S32", f"{_maps_class(cfg)} with regular Y; θ-continuous = (X,clθ)→Y = (X,θ-open)→Y continuous")
    for f in _topology_maps(cfg):
        if not is_regular(f.codomain):
            continue
        a = is_theta_continuous(f)
        b = is_continuous(f.with_spaces(theta_pretopology(f.domain), f.codomain))
        c = is_continuous(f.with_spaces(theta_open_topology(f.domain), f.codomain))
        maps_t.add(a == b == c, lambda: _map_witness(f, verdicts=[a, b, c]))
    return [opens.record(), maps_t.record()]


def check_s33(cfg: CampaignConfig) -> list[VerdictRecord]:
    t = Tally("S33", f"{_maps_class(cfg)}; continuity-like classes respect their implications")
    for f in _topology_maps(cfg):
        prof = classify(f)
        t.add(not prof.violations(), lambda: _map_witness(f, violations=prof.violations()))
    sp = Tally("S33", "identity on the Sierpinski space; continuous, weakly continuous, not super-continuous")
    prof = classify(identity(sierpinski()))
    sp.add(prof.continuous and prof.weakly_continuous and not prof.super_continuous, lambda: prof.as_dict())
    return [t.record(), sp.record()]


CHECKS: dict[str, Callable[[CampaignConfig], list[VerdictRecord]]] = {
    "T1": check_t1, "T2": check_t2, "T3": check_t3, "T4": check_t4, "T5": check_t5,
    "T6": check_t6, "T7": check_t7, "T8": check_t8, "T9": check_t9, "T10": check_t10,
    "C1": check_c1, "C2": check_c2, "C3": check_c3, "C4": check_c4, "R1": check_r1,
    "NT1": check_nt1, "NT2": check_nt2, "NT3": check_nt3,
    "S31": check_s31, "S32": check_s32, "S33": check_s33,
}


def _run_one(args: tuple[str, CampaignConfig]) -> list[VerdictRecord]:
    tid, cfg = args
    return CHECKS[tid](cfg)


def run_campaign(config: CampaignConfig) -> list[VerdictRecord]:
    ids = [t for t in REGISTRY if t in config.theorem_ids]
    for t in config.theorem_ids:
        if t not in CHECKS:
            raise UnknownTheoremId(t)
    jobs = [(t, config) for t in ids]
    if config.parallelism == 1 or len(jobs) <= 1:
        chunks = [_run_one(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=config.parallelism) as pool:
            chunks = list(pool.map(_run_one, jobs))
    return [r for chunk in chunks for r in chunk]


def report_json(config: CampaignConfig, records: list[VerdictRecord]) -> str:
    summary = {v: sum(1 for r in records if r.verdict == v) for v in (HOLDS, FAILS, VACUOUS)}
    summary["failing_checks"] = sorted({r.check for r in records if r.verdict == FAILS})
    payload = {
        "config": config.report_fields(),
        "summary": summary,
        "records": [r.as_dict() for r in records],
    }
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# ------------------------------------------------------------------- mining


def _non_idempotent_theta(max_points: int):
    for n in range(1, max_points + 1):
        for T in enumerate_topologies(n):
            th = theta_pretopology(T)
            for a in range(1, T.top + 1):
                once = th.closure(a)
                if th.closure(once) != once:
                    return {
                        "T": describe(T),
                        "opens": [list(bits(o)) for o in T.open_sets],
                        "theta": describe(th),
                        "subset": list(bits(a)),
                        "closure": list(bits(once)),
                        "closure_twice": list(bits(th.closure(once))),
                    }
    return None


def _size_pairs(max_points: int):
    """``(|X|, |Y|)`` by total size, then by ``|X|``."""
    for total in range(2, 2 * max_points + 1):
        for nx in range(1, total):
            ny = total - nx
            if nx <= max_points and ny <= max_points:
                yield nx, ny


def _coarsest_first(k: int) -> list[Pretopology]:
    """Structures ordered from the indiscrete one towards the discrete one."""
    return sorted(_structures(k), key=lambda s: full(k * (k - 1)) & ~relation_code(s))


def _sigma_search(max_points: int, pred):
    for nx, ny in _size_pairs(max_points):
        for X in _spaces(nx, False):
            for Y in _spaces(ny, False):
                fs = _fs(X, Y)
                if len(fs) > 4:
                    continue
                for st in _coarsest_first(len(fs)):
                    sigma = SigmaStructure(fs, st)
                    if pred(sigma):
                        return fs_witness(fs, sigma=st, indiscrete=st == indiscrete(len(fs)))
    return None


def _map_search(max_points: int, pred):
    for nx, ny in _size_pairs(max_points):
        for X in _topologies(nx, False):
            for Y in _topologies(ny, False):
                for f in all_maps(X, Y):
                    prof = classify(f)
                    if pred(prof):
                        return _map_witness(f, profile=prof.as_dict())
    return None


def find_counterexample(predicate: str, max_points: int | None = None) -> VerdictRecord:
    """Smallest instance satisfying ``predicate``: by carrier size, then lexicographic."""
    if predicate not in PREDICATES:
        raise UnknownPredicate(predicate)
    if predicate == "non-idempotent-theta":
        bound = 5 if max_points is None else max_points
        found = _non_idempotent_theta(bound)
    elif predicate == "proper-not-admissible":
        bound = 2 if max_points is None else max_points
        found = _sigma_search(bound, lambda s: is_proper(s) and not is_admissible(s))
    elif predicate == "admissible-not-proper":
        bound = 2 if max_points is None else max_points
        found = _sigma_search(bound, lambda s: is_admissible(s) and not is_proper(s))
    elif predicate == "continuous-not-super":
        bound = 3 if max_points is None else max_points
        found = _map_search(bound, lambda p: p.continuous and not p.super_continuous)
    else:
        bound = 3 if max_points is None else max_points
        found = _map_search(bound, lambda p: p.theta_continuous and not p.continuous)
    if found is None:
        return VerdictRecord(f"mine:{predicate}", f"searched up to {bound} points", VACUOUS, {"bound": bound})
    return VerdictRecord(f"mine:{predicate}", f"smallest instance within {bound} points", HOLDS, found)


def with_theorems(cfg: CampaignConfig, ids: Iterable[str]) -> CampaignConfig:
    return replace(cfg, theorem_ids=tuple(ids))
