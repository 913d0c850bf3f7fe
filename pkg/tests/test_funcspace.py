from itertools import product as cartesian

import pytest
from hypothesis import given, settings, strategies as st

from closurelab.enumeration import enumerate_pretopologies, enumerate_topologies
from closurelab.errors import (
    CarrierMismatch,
    EmptyList,
    IndexMismatch,
    NotAnInteriorCover,
    SectionNotContinuous,
    SizeMismatch,
    SizeOverflow,
)
from closurelab.funcspace import (
    SigmaStructure,
    a_topology,
    absorbing_sets,
    admissible_by_definition,
    admissible_by_evaluation,
    admissible_by_sierpinski,
    c_topology,
    cc_pretopology,
    curry,
    enumerate_functions,
    evaluation_map,
    finest_proper_topology,
    generator_variants,
    is_admissible,
    is_proper,
    proper_by_definition,
    proper_by_sierpinski,
    uncurry,
    verify_lattice_closure,
    verify_ordering,
)
from closurelab.maps import FiniteMap, all_maps, is_continuous, is_continuous_by_preimages
from closurelab.space import compare, discrete, indiscrete, product, topological_modification

from conftest import D2, P3, PT, SP, all_spaces

FIX = enumerate_functions(PT, SP)  # f0 = const 0, f1 = const 1


def sig(fs, structure):
    return SigmaStructure(fs, structure)


def small_function_spaces(n_max=2, k_max=4):
    out = []
    for X in all_spaces(n_max):
        for Y in all_spaces(n_max):
            fs = enumerate_functions(X, Y)
            if len(fs) <= k_max:
                out.append(fs)
    return out


# ------------------------------------------------------------ enumeration


def test_function_counts():
    assert len(enumerate_functions(D2, D2)) == 4
    sp = enumerate_functions(SP, SP)
    assert sp.functions == ((0, 0), (0, 1), (1, 1))
    assert FIX.functions == ((0,), (1,))


def test_functions_match_brute_force():
    for X in all_spaces(3):
        for Y in all_spaces(2):
            brute = tuple(f.images for f in all_maps(X, Y) if is_continuous_by_preimages(f))
            assert enumerate_functions(X, Y).functions == brute


def test_constants_always_present():
    for X in all_spaces(2):
        for Y in all_spaces(2):
            funcs = enumerate_functions(X, Y).functions
            assert all((y,) * X.n in funcs for y in range(Y.n))


def test_enumeration_limit():
    with pytest.raises(SizeOverflow):
        enumerate_functions(discrete(3), discrete(3), limit=20)


def test_sigma_size_checked():
    with pytest.raises(SizeMismatch):
        SigmaStructure(FIX, discrete(3))


# ------------------------------------------------------ evaluation, curry


def test_evaluation_examples():
    ev = evaluation_map(FIX)
    assert ev.images[1 * PT.n + 0] == 1
    fs = enumerate_functions(SP, SP)
    ident = fs.index[(0, 1)]
    assert evaluation_map(fs).images[ident * SP.n + 0] == 0
    assert len(evaluation_map(fs).images) == len(fs) * SP.n


def test_evaluation_table():
    for fs in small_function_spaces():
        ev = evaluation_map(fs)
        for i, f in enumerate(fs.functions):
            for x in range(fs.X.n):
                assert ev(i * fs.X.n + x) == f[x]


def test_curry_examples():
    g = FiniteMap(product([PT, PT]), SP, (1,))
    assert curry(g, PT, FIX).images == (FIX.index[(1,)],)
    for fs in small_function_spaces():
        star = cc_pretopology(fs)
        ev = evaluation_map(fs, star)
        assert curry(ev, star.structure, fs).images == tuple(range(len(fs)))


def test_curry_errors():
    swap_sections = FiniteMap(product([PT, SP]), SP, (1, 0))
    with pytest.raises(SectionNotContinuous) as err:
        curry(swap_sections, PT, enumerate_functions(SP, SP))
    assert err.value.z == 0
    with pytest.raises(IndexMismatch):
        curry(FiniteMap(SP, SP, (0, 1)), PT, FIX)
    with pytest.raises(IndexMismatch):
        uncurry(FiniteMap(SP, SP, (0, 1)), enumerate_functions(SP, SP))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_curry_uncurry_roundtrip(data):
    fs = data.draw(st.sampled_from(small_function_spaces()))
    Z = data.draw(st.sampled_from(all_spaces(2)))
    h_images = data.draw(st.tuples(*[st.integers(0, len(fs) - 1)] * Z.n))
    h = FiniteMap(Z, cc_pretopology(fs).structure, h_images)
    assert curry(uncurry(h, fs), Z, fs) == h


# -------------------------------------------------------------- σ* and C(f)


def test_cc_examples():
    assert FIX.cc_nbhds == (0b11, 0b10)
    assert all(c == 1 << i for i, c in enumerate(enumerate_functions(D2, D2).cc_nbhds))
    single = enumerate_functions(SP, PT)
    assert len(single) == 1 and single.cc_nbhds == (1,)


def test_cc_structure_is_the_unique_definitional_proper_admissible_structure():
    zs = all_spaces(2)
    for fs in small_function_spaces(k_max=3):
        both = [
            s for s in enumerate_pretopologies(len(fs))
            if proper_by_definition(sig(fs, s), zs=zs) and admissible_by_definition(sig(fs, s), zs=zs)
        ]
        assert both == [cc_pretopology(fs).structure]


def test_admissible_examples():
    assert is_admissible(sig(FIX, discrete(2)))
    assert not is_admissible(sig(FIX, indiscrete(2)))
    assert is_admissible(cc_pretopology(FIX))


def test_proper_examples():
    assert is_proper(sig(FIX, indiscrete(2)))
    assert not is_proper(sig(FIX, discrete(2)))
    assert is_proper(cc_pretopology(FIX))


def test_admissibility_three_routes():
    zs = all_spaces(2)
    for fs in small_function_spaces(k_max=3):
        for s in enumerate_pretopologies(len(fs)):
            sigma = sig(fs, s)
            a = is_admissible(sigma)
            assert a == admissible_by_evaluation(sigma) == admissible_by_definition(sigma, zs=zs)


def test_properness_matches_definition():
    zs = all_spaces(2)
    for fs in small_function_spaces(k_max=3):
        for s in enumerate_pretopologies(len(fs)):
            sigma = sig(fs, s)
            assert is_proper(sigma) == proper_by_definition(sigma, zs=zs)


def test_sierpinski_reduction_with_three_point_test_spaces():
    for fs in small_function_spaces(k_max=3):
        for t in enumerate_topologies(len(fs)):
            sigma = sig(fs, t)
            full = proper_by_definition(sigma, max_z=3)
            assert full == proper_by_sierpinski(sigma) == is_proper(sigma)
            assert admissible_by_definition(sigma, max_z=3) == admissible_by_sierpinski(sigma)


def test_exponential_correspondence():
    for fs in small_function_spaces(k_max=3):
        fine = finest_proper_topology(fs)
        admissible = [sig(fs, s) for s in enumerate_pretopologies(len(fs)) if is_admissible(sig(fs, s))]
        for Z in all_spaces(2):
            dom = product([Z, fs.X])
            for h_images in cartesian(range(len(fs)), repeat=Z.n):
                g = uncurry(FiniteMap(Z, fine.structure, h_images), fs)
                if is_continuous(g):
                    assert is_continuous(curry(g, Z, fs, fine))
                for sigma in admissible:
                    if is_continuous(curry(g, Z, fs, sigma)):
                        assert is_continuous(g)
                assert g.domain == dom


# ------------------------------------------------------------- topologies


def test_finest_proper_examples():
    top = finest_proper_topology(FIX).structure.as_topology()
    assert top.open_sets == (0, 0b10, 0b11)
    assert finest_proper_topology(enumerate_functions(D2, D2)).structure == discrete(4)
    assert finest_proper_topology(enumerate_functions(SP, PT)).structure == discrete(1)


def test_finest_proper_dominates_all_proper_topologies():
    for fs in small_function_spaces(n_max=2, k_max=4):
        fine = finest_proper_topology(fs)
        assert fine.structure == topological_modification(cc_pretopology(fs).structure)
        assert set(fine.structure.as_topology().open_sets) == set(absorbing_sets(fs))
        proper = [t for t in enumerate_topologies(len(fs)) if is_proper(sig(fs, t))]
        assert fine.structure in proper
        assert all(compare(t, fine.structure) in ("coarser", "equal") for t in proper)


def test_a_topology_examples():
    assert a_topology(FIX, [PT.top]).structure.as_topology().open_sets == (0, 0b10, 0b11)
    assert a_topology(FIX, []).structure == indiscrete(2)
    dd = enumerate_functions(D2, D2)
    pointwise = a_topology(dd, [0b01, 0b10])
    assert pointwise.structure == discrete(4) and is_proper(pointwise)
    with pytest.raises(SizeMismatch):
        a_topology(FIX, [0])


def test_c_topology_examples():
    assert is_admissible(c_topology(FIX, [PT.top]))
    assert is_admissible(c_topology(enumerate_functions(D2, D2), [0b01, 0b10]))
    # not regular: the cover topology exists but is not admissible here
    p3 = enumerate_functions(P3, SP)
    assert p3.functions == ((0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1))
    rec = c_topology(p3, [P3.top])
    assert rec.structure.nbhds == (0b1111, 0b1111, 0b1100, 0b1000)
    assert not is_admissible(rec) and is_proper(rec)
    with pytest.raises(NotAnInteriorCover):
        c_topology(enumerate_functions(SP, SP), [0b01])


def test_generator_variants_report():
    rep = generator_variants(enumerate_functions(P3, SP), [0b001, 0b010], [P3.top])
    assert rep == {"a-topology": "equal", "c-topology": "equal"}


# --------------------------------------------------------------- reports


def test_ordering_report_examples():
    rep = verify_ordering(sig(FIX, indiscrete(2)), sig(FIX, discrete(2)))
    assert rep.holds
    star = cc_pretopology(FIX)
    rep = verify_ordering(star, star)
    assert rep.clauses["unique-proper-admissible"] == "holds"
    assert rep.notes["cc-structure-proper-and-admissible"]
    rep = verify_ordering(sig(FIX, discrete(2)), sig(FIX, indiscrete(2)))
    assert rep.clauses["proper-below-admissible"] == "vacuous"
    with pytest.raises(CarrierMismatch):
        verify_ordering(star, cc_pretopology(enumerate_functions(D2, D2)))


def test_lattice_report_examples():
    star = cc_pretopology(FIX)
    rep = verify_lattice_closure([sig(FIX, indiscrete(2)), star])
    assert rep.notes["meet"] == indiscrete(2) and rep.notes["join"] == star.structure
    assert rep.clauses["meet-proper"] == rep.clauses["join-proper"] == "holds"
    rep = verify_lattice_closure([sig(FIX, discrete(2)), star])
    assert rep.notes["join"] == discrete(2) and rep.clauses["join-admissible"] == "holds"
    assert verify_lattice_closure([star]).holds
    with pytest.raises(EmptyList):
        verify_lattice_closure([])
