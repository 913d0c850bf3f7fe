"""Eventually periodic sequences as the net model on finite carriers.

On a finite space every convergence statement depends only on which values a
sequence takes infinitely often, i.e. on the cycle of an eventually periodic
sequence.  The ``*_by_*`` functions evaluate the same notions from their
quantified definitions, scanning indices up to one full period past the prefix.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product as cartesian
from math import gcd
from typing import Iterator

from .bits import bits, mask_of, supersets
from .errors import CarrierMismatch, IndexOutOfRange, NotATopology
from .funcspace import FunctionSpace
from .report import FAILS, HOLDS, ClauseReport
from .space import Pretopology


@dataclass(frozen=True, eq=False)
class EpSequence:
    """``prefix`` followed by ``cycle`` repeated forever."""

    prefix: tuple
    cycle: tuple

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "cycle", tuple(self.cycle))
        if not self.cycle:
            raise ValueError("cycle must be nonempty")

    @classmethod
    def constant(cls, item) -> "EpSequence":
        return cls((), (item,))

    def __getitem__(self, i: int):
        p = len(self.prefix)
        if i < p:
            return self.prefix[i]
        return self.cycle[(i - p) % len(self.cycle)]

    def __len__(self):
        """Length of the encoding, prefix plus cycle."""
        return len(self.prefix) + len(self.cycle)

    @cached_property
    def canonical(self) -> "EpSequence":
        cyc = self.cycle
        c = len(cyc)
        for d in range(1, c + 1):
            if c % d == 0 and cyc == cyc[:d] * (c // d):
                cyc = cyc[:d]
                break
        pre = self.prefix
        while pre and pre[-1] == cyc[-1]:
            cyc = cyc[-1:] + cyc[:-1]
            pre = pre[:-1]
        return EpSequence(pre, cyc)

    def __eq__(self, other):
        if not isinstance(other, EpSequence):
            return NotImplemented
        a, b = self.canonical, other.canonical
        return a.prefix == b.prefix and a.cycle == b.cycle

    def __hash__(self):
        c = self.canonical
        return hash((c.prefix, c.cycle))

    def __str__(self):
        return " ".join(map(str, self.prefix)) + " | " + " ".join(map(str, self.cycle))

    def map(self, fn) -> "EpSequence":
        return EpSequence(tuple(fn(v) for v in self.prefix), tuple(fn(v) for v in self.cycle))

    def subsequence(self, start: int, step: int) -> "EpSequence":
        """Values at indices ``start, start + step, start + 2*step, ...``."""
        if start < 0 or step < 1:
            raise ValueError("need start >= 0 and step >= 1")
        p, c = len(self.prefix), len(self.cycle)
        n0 = 0
        while start + step * n0 < p:
            n0 += 1
        period = c // gcd(step, c)
        pre = tuple(self[start + step * n] for n in range(n0))
        cyc = tuple(self[start + step * n] for n in range(n0, n0 + period))
        return EpSequence(pre, cyc).canonical

    def window(self, start: int) -> range:
        """Indices from ``start`` covering one full period past the prefix."""
        return range(start, max(start, len(self.prefix)) + len(self.cycle))


def enumerate_sequences(k: int, max_len: int) -> Iterator[EpSequence]:
    """Distinct sequences over ``range(k)`` with prefix plus cycle at most ``max_len``."""
    seen = set()
    for total in range(1, max_len + 1):
        for c in range(1, total + 1):
            for items in cartesian(range(k), repeat=total):
                s = EpSequence(items[: total - c], items[total - c :]).canonical
                key = (s.prefix, s.cycle)
                if key not in seen:
                    seen.add(key)
                    yield s


def _check_points(seq: EpSequence, n: int) -> None:
    for v in seq.prefix + seq.cycle:
        if not 0 <= v < n:
            raise CarrierMismatch(f"sequence value {v} outside the {n}-point carrier")


def converges(seq: EpSequence, space: Pretopology, x: int) -> bool:
    _check_points(seq, space.n)
    v = space.nbhds[space.check_point(x)]
    return all(v >> p & 1 for p in seq.cycle)


def accumulates(seq: EpSequence, space: Pretopology, x: int) -> bool:
    _check_points(seq, space.n)
    v = space.nbhds[space.check_point(x)]
    return any(v >> p & 1 for p in seq.cycle)


def converges_by_definition(seq: EpSequence, space: Pretopology, x: int) -> bool:
    """Every neighbourhood ``U`` of ``x`` eventually contains the sequence."""
    _check_points(seq, space.n)
    return all(
        any(all(u >> seq[m] & 1 for m in seq.window(m0)) for m0 in range(len(seq.prefix) + 1))
        for u in supersets(space.nbhds[x], space.n)
    )


def accumulates_by_definition(seq: EpSequence, space: Pretopology, x: int) -> bool:
    """Every neighbourhood of ``x`` is hit after every index."""
    _check_points(seq, space.n)
    return all(
        any(u >> seq[m] & 1 for m in seq.window(m0))
        for u in supersets(space.nbhds[x], space.n)
        for m0 in range(len(seq))
    )


def _check_subsets(seq: EpSequence, space: Pretopology) -> None:
    for a in seq.prefix + seq.cycle:
        if a < 0 or a & ~space.top:
            raise CarrierMismatch(f"subset {a:#b} leaves the {space.n}-point carrier")


def upper_limit(seq: EpSequence, space: Pretopology) -> int:
    """Points whose minimal neighbourhood meets some set of the cycle."""
    _check_subsets(seq, space)
    hit = 0
    for a in set(seq.cycle):
        hit |= a
    return mask_of(x for x, v in enumerate(space.nbhds) if v & hit)


def upper_limit_by_definition(seq: EpSequence, space: Pretopology) -> int:
    """For every index and neighbourhood ``U`` some later set meets ``U``."""
    _check_subsets(seq, space)
    out = 0
    for x in range(space.n):
        if all(
            any(seq[m] & u for m in seq.window(m0))
            for m0 in range(len(seq))
            for u in supersets(space.nbhds[x], space.n)
        ):
            out |= 1 << x
    return out


def _check_indices(seq: EpSequence, fs: FunctionSpace, f: int) -> None:
    k = len(fs)
    for i in seq.prefix + seq.cycle + (f,):
        if not 0 <= i < k:
            raise IndexOutOfRange(f"function index {i} not in 0..{k - 1}")


def converges_continuously(seq: EpSequence, fs: FunctionSpace, f: int) -> bool:
    """Eventually every term lies in ``C(f)``."""
    _check_indices(seq, fs, f)
    c = fs.cc_nbhds[f]
    return all(c >> g & 1 for g in seq.cycle)


def _preimage(fs: FunctionSpace, g: int, b: int) -> int:
    return mask_of(x for x, y in enumerate(fs.functions[g]) if b >> y & 1)


def _limsup_condition(seq: EpSequence, fs: FunctionSpace, f: int, bs, target) -> bool:
    for b in bs:
        pre = seq.map(lambda g, b=b: _preimage(fs, g, b))
        if upper_limit(pre, fs.X) & ~_preimage(fs, f, target(b)):
            return False
    return True


def cc_by_upper_limits(seq: EpSequence, fs: FunctionSpace, f: int) -> bool:
    """``limsup f_n⁻¹(B) ⊆ f⁻¹(v(B))`` for every ``B ⊆ Y``."""
    _check_indices(seq, fs, f)
    return _limsup_condition(seq, fs, f, range(fs.Y.top + 1), fs.Y.closure)


def cc_by_basic_complements(seq: EpSequence, fs: FunctionSpace, f: int) -> bool:
    """Same condition, ``B`` restricted to complements of minimal neighbourhoods."""
    _check_indices(seq, fs, f)
    top = fs.Y.top
    bs = sorted({top & ~v for v in fs.Y.nbhds})
    return _limsup_condition(seq, fs, f, bs, fs.Y.closure)


def cc_by_closed_sets(seq: EpSequence, fs: FunctionSpace, f: int) -> bool:
    """For topological ``Y``: ``limsup f_n⁻¹(B) ⊆ f⁻¹(B)`` for closed ``B``."""
    _check_indices(seq, fs, f)
    if not fs.Y.is_idempotent():
        raise NotATopology("closed-set criterion needs a topological codomain")
    bs = [b for b in range(fs.Y.top + 1) if fs.Y.closure(b) == b]
    return _limsup_condition(seq, fs, f, bs, lambda b: b)


def cc_by_neighborhoods(seq: EpSequence, fs: FunctionSpace, f: int) -> bool:
    """For each ``x`` and neighbourhood ``V`` of ``f(x)`` there are a
    neighbourhood ``U`` of ``x`` and a tail with ``f_n(U) ⊆ V``."""
    _check_indices(seq, fs, f)
    X, Y = fs.X, fs.Y
    fn = fs.functions
    for x in range(X.n):
        for v in supersets(Y.nbhds[fn[f][x]], Y.n):
            if not any(
                all(all(v >> fn[seq[m]][p] & 1 for p in bits(u)) for m in seq.window(m0))
                for u in supersets(X.nbhds[x], X.n)
                for m0 in range(len(seq.prefix) + 1)
            ):
                return False
    return True


def cc_by_definition(seq: EpSequence, fs: FunctionSpace, f: int, max_len: int | None = None) -> bool:
    """Joint convergence: ``f_n(x_m) → f(x)`` over pairs ``(n, m)`` whenever ``x_m → x``.

    Point sequences range over every sequence of length up to ``max_len``
    (default ``|X| + 1``, enough to realise every tail set).
    """
    _check_indices(seq, fs, f)
    X, Y = fs.X, fs.Y
    fn = fs.functions
    max_len = X.n + 1 if max_len is None else max_len
    point_seqs = list(enumerate_sequences(X.n, max_len))
    for x in range(X.n):
        fx = fn[f][x]
        for xs in point_seqs:
            if not converges(xs, X, x):
                continue
            for v in supersets(Y.nbhds[fx], Y.n):
                if not any(
                    all(v >> fn[seq[lam]][xs[mu]] & 1 for lam in seq.window(l0) for mu in xs.window(m0))
                    for l0 in range(len(seq.prefix) + 1)
                    for m0 in range(len(xs.prefix) + 1)
                ):
                    return False
    return True


def subsequences(seq: EpSequence) -> Iterator[EpSequence]:
    """Arithmetic subsequences; they stay eventually periodic."""
    seen = set()
    for start in range(len(seq)):
        for step in range(1, len(seq.cycle) + 1):
            s = seq.subsequence(start, step)
            if s not in seen:
                seen.add(s)
                yield s


def divergence_witness(seq: EpSequence, fs: FunctionSpace, f: int) -> EpSequence | None:
    """A subsequence no subsequence of which converges continuously to ``f``."""
    c = fs.cc_nbhds[f]
    for pos, g in enumerate(seq.cycle):
        if not c >> g & 1:
            return seq.subsequence(len(seq.prefix) + pos, len(seq.cycle))
    return None


def check_convergence_class_axioms(fs: FunctionSpace, max_len: int = 4) -> ClauseReport:
    k = len(fs)
    seqs = list(enumerate_sequences(k, max_len))
    constants = all(converges_continuously(EpSequence.constant(f), fs, f) for f in range(k))
    subnets, divergence = True, True
    notes = {}
    for s in seqs:
        for f in range(k):
            if converges_continuously(s, fs, f):
                if not all(converges_continuously(t, fs, f) for t in subsequences(s)):
                    subnets = False
                    notes.setdefault("subnets-witness", (str(s), f))
            else:
                w = divergence_witness(s, fs, f)
                if w is None or any(converges_continuously(t, fs, f) for t in subsequences(w)):
                    divergence = False
                    notes.setdefault("divergence-failure", (str(s), f))
                else:
                    notes.setdefault("divergence-example", (str(s), f, str(w)))
    clauses = {
        "CONSTANTS": HOLDS if constants else FAILS,
        "SUBNETS": HOLDS if subnets else FAILS,
        "DIVERGENCE": HOLDS if divergence else FAILS,
    }
    return ClauseReport(clauses, notes)


def sigma_converges(seq: EpSequence, structure: Pretopology, f: int) -> bool:
    """Convergence of a function sequence in a structure on ``Y^X``."""
    return converges(seq, structure, f)
