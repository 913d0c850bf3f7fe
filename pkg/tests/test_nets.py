import pytest
from hypothesis import given, settings, strategies as st

from closurelab.enumeration import enumerate_pretopologies
from closurelab.errors import CarrierMismatch, IndexOutOfRange, NotATopology
from closurelab.funcspace import SigmaStructure, cc_pretopology, enumerate_functions, is_admissible, is_proper
from closurelab.nets import (
    EpSequence,
    accumulates,
    accumulates_by_definition,
    cc_by_basic_complements,
    cc_by_closed_sets,
    cc_by_definition,
    cc_by_neighborhoods,
    cc_by_upper_limits,
    check_convergence_class_axioms,
    converges,
    converges_by_definition,
    converges_continuously,
    divergence_witness,
    enumerate_sequences,
    sigma_converges,
    subsequences,
    upper_limit,
    upper_limit_by_definition,
)

from conftest import D2, P3, PT, SP, all_spaces

FIX = enumerate_functions(PT, SP)


def seqs(k, max_len=4):
    return list(enumerate_sequences(k, max_len))


# ------------------------------------------------------------- sequences


def test_canonical_form():
    assert EpSequence((0, 1), (1,)) == EpSequence((0,), (1,))
    assert EpSequence((), (0, 1, 0, 1)) == EpSequence((), (0, 1))
    assert EpSequence((1,), (0, 1)) == EpSequence((), (1, 0))
    assert EpSequence((0,), (1,)).canonical.prefix == (0,)
    assert str(EpSequence((0,), (1, 2))) == "0 | 1 2"
    with pytest.raises(ValueError):
        EpSequence((0,), ())


def test_indexing_and_length():
    s = EpSequence((5,), (1, 2))
    assert [s[i] for i in range(6)] == [5, 1, 2, 1, 2, 1]
    assert len(s) == 3


@settings(max_examples=200)
@given(st.lists(st.integers(0, 2), max_size=3), st.lists(st.integers(0, 2), min_size=1, max_size=3))
def test_canonical_preserves_values(prefix, cycle):
    s = EpSequence(tuple(prefix), tuple(cycle))
    c = s.canonical
    assert all(s[i] == c[i] for i in range(20))
    assert len(c) <= len(s)


def test_enumeration_is_duplicate_free():
    all_ = seqs(2)
    assert len(all_) == len(set(all_))
    assert EpSequence.constant(0) in all_ and EpSequence((0,), (1,)) in all_


@settings(max_examples=200)
@given(
    st.lists(st.integers(0, 2), max_size=3),
    st.lists(st.integers(0, 2), min_size=1, max_size=3),
    st.integers(0, 6),
    st.integers(1, 4),
)
def test_subsequence_values(prefix, cycle, start, step):
    s = EpSequence(tuple(prefix), tuple(cycle))
    sub = s.subsequence(start, step)
    assert all(sub[n] == s[start + step * n] for n in range(24))


# ----------------------------------------------------- point convergence


def test_convergence_examples():
    assert converges(EpSequence.constant(1), SP, 1)
    assert converges(EpSequence((), (1,)), SP, 0)
    d = EpSequence((), (0, 1))
    assert not any(converges(d, D2, x) for x in range(2))
    assert all(accumulates(d, D2, x) for x in range(2))
    with pytest.raises(CarrierMismatch):
        converges(EpSequence.constant(2), SP, 0)


def test_prefix_never_matters_for_accumulation():
    for space in all_spaces(3):
        for s in seqs(space.n, 3):
            bare = EpSequence((), s.cycle)
            for x in range(space.n):
                assert accumulates(s, space, x) == accumulates(bare, space, x)


def test_point_convergence_matches_definition():
    for space in all_spaces(3):
        for s in seqs(space.n, 3):
            for x in range(space.n):
                c = converges(s, space, x)
                assert c == converges_by_definition(s, space, x)
                assert accumulates(s, space, x) == accumulates_by_definition(s, space, x)
                if c:
                    assert accumulates(s, space, x)


# -------------------------------------------------------- upper limits


def limsup_by_index_scan(seq, space, horizon=40):
    """Points whose minimal neighbourhood meets the sets at arbitrarily late indices."""
    out = 0
    for x in range(space.n):
        v = space.nbhds[x]
        late = [m for m in range(horizon) if seq[m] & v]
        if late and late[-1] >= horizon - len(seq.cycle):
            out |= 1 << x
    return out


def test_upper_limit_examples():
    assert upper_limit(EpSequence.constant(0b10), SP) == 0b11
    assert upper_limit(EpSequence((), (0b01, 0b10)), D2) == 0b11
    with pytest.raises(CarrierMismatch):
        upper_limit(EpSequence.constant(0b100), SP)


def test_upper_limit_of_constant_is_closure(spaces3):
    for space in spaces3:
        for a in range(space.top + 1):
            assert upper_limit(EpSequence.constant(a), space) == space.closure(a)


def test_upper_limit_matches_definitions():
    for space in all_spaces(2):
        for s in seqs(space.top + 1, 3):
            u = upper_limit(s, space)
            assert u == upper_limit_by_definition(s, space) == limsup_by_index_scan(s, space)


def test_upper_limit_is_isotone():
    for space in all_spaces(2):
        for s in seqs(space.top + 1, 3):
            for mask in range(space.top + 1):
                smaller = s.map(lambda a, mask=mask: a & mask)
                assert upper_limit(smaller, space) & ~upper_limit(s, space) == 0


# ------------------------------------------------- continuous convergence


def test_cc_examples():
    for f in range(2):
        assert converges_continuously(EpSequence.constant(f), FIX, f)
    alt = EpSequence((), (0, 1))
    assert converges_continuously(alt, FIX, 0)
    assert not converges_continuously(alt, FIX, 1)
    with pytest.raises(IndexOutOfRange):
        converges_continuously(alt, FIX, 2)


def function_spaces(n_max=2, k_max=3):
    out = []
    for X in all_spaces(n_max):
        for Y in all_spaces(n_max):
            fs = enumerate_functions(X, Y)
            if len(fs) <= k_max:
                out.append(fs)
    return out


def test_cc_routes_agree():
    for fs in function_spaces():
        for s in seqs(len(fs)):
            for f in range(len(fs)):
                a = converges_continuously(s, fs, f)
                assert a == cc_by_neighborhoods(s, fs, f) == cc_by_upper_limits(s, fs, f)
                assert a == cc_by_basic_complements(s, fs, f)
                if fs.Y.is_idempotent():
                    assert a == cc_by_closed_sets(s, fs, f)


def test_cc_matches_joint_convergence_definition():
    for fs in function_spaces(k_max=3):
        for s in seqs(len(fs), 3):
            for f in range(len(fs)):
                assert converges_continuously(s, fs, f) == cc_by_definition(s, fs, f)


def test_closed_set_route_needs_topological_codomain():
    fs = enumerate_functions(PT, P3)
    with pytest.raises(NotATopology):
        cc_by_closed_sets(EpSequence.constant(0), fs, 0)


def test_convergence_class_axioms():
    for fs in function_spaces(k_max=4):
        rep = check_convergence_class_axioms(fs, 4)
        assert rep.holds, rep.clauses


def test_divergence_witness_is_a_constant_subsequence():
    alt = EpSequence((), (0, 1))
    w = divergence_witness(alt, FIX, 1)
    assert w == EpSequence.constant(0)
    assert not any(converges_continuously(t, FIX, 1) for t in subsequences(w))
    assert divergence_witness(alt, FIX, 0) is None


def test_subsequences_of_cc_convergent_sequences():
    for fs in function_spaces():
        for s in seqs(len(fs)):
            for f in range(len(fs)):
                if converges_continuously(s, fs, f):
                    assert all(converges_continuously(t, fs, f) for t in subsequences(s))


def test_structure_convergence_links():
    for fs in function_spaces():
        for st_ in enumerate_pretopologies(len(fs)):
            sigma = SigmaStructure(fs, st_)
            p, a = is_proper(sigma), is_admissible(sigma)
            for s in seqs(len(fs), 3):
                for f in range(len(fs)):
                    conv, cc = sigma_converges(s, st_, f), converges_continuously(s, fs, f)
                    if conv and a:
                        assert cc
                    if cc and p:
                        assert conv


def test_cc_is_convergence_in_cc_structure():
    for fs in function_spaces():
        star = cc_pretopology(fs).structure
        for s in seqs(len(fs)):
            for f in range(len(fs)):
                assert converges_continuously(s, fs, f) == converges(s, star, f)
