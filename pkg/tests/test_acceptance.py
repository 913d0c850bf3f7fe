"""Acceptance criteria 1-9, one PASS/FAIL line each (wall time against budget).

Run with ``pytest tests/test_acceptance.py -v`` (or execute this file directly).
"""

from __future__ import annotations

import sys
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from closurelab.campaign import CampaignConfig, find_counterexample, report_json, run_campaign
from closurelab.cli import main as cli_main
from closurelab.enumeration import enumerate_pretopologies
from closurelab.funcspace import (
    SigmaStructure,
    admissible_by_definition,
    admissible_by_evaluation,
    enumerate_functions,
    is_admissible,
    is_proper,
)
from closurelab.nets import EpSequence, upper_limit
from closurelab.report import HOLDS
from closurelab.space import discrete, indiscrete, sierpinski, theta_pretopology

from conftest import all_spaces, as_mask, as_set, nbhd_filter, powerset, set_closure


@contextmanager
def criterion(number: int, budget: float, what: str, capsys):
    """Time the body, print one line, and fail on error or blown budget."""
    start = time.perf_counter()
    problem = None
    try:
        yield
    except AssertionError as exc:
        problem = exc
    elapsed = time.perf_counter() - start
    ok = problem is None and elapsed < budget
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  ({elapsed:.2f}s, budget {budget:g}s)  {what}"
    with capsys.disabled():
        print("\n" + line)
    if problem is not None:
        raise problem
    assert elapsed < budget, f"criterion {number} took {elapsed:.1f}s, budget {budget}s"


def all_hold(records):
    bad = [r for r in records if r.verdict != HOLDS]
    assert not bad, bad[0]
    return records


def test_criterion_1_axiom_suite(capsys):
    spaces = list(enumerate_pretopologies(3))
    with criterion(1, 1.0, "axioms, interior duality, principal filters on all 64 three-point spaces", capsys):
        assert len(spaces) == 64
        carrier = frozenset(range(3))
        subsets = powerset(carrier)
        assert len(subsets) == 8
        for space in spaces:
            assert space.closure(0) == 0
            for a in subsets:
                ua = as_set(space.closure(as_mask(a)))
                assert a <= ua and ua == set_closure(space, a)
                comp = carrier - a
                assert as_set(space.interior(as_mask(a))) == carrier - set_closure(space, comp)
                for b in subsets:
                    assert space.closure(as_mask(a | b)) == space.closure(as_mask(a)) | space.closure(as_mask(b))
            for x in range(3):
                filt = nbhd_filter(space, x)
                v = as_set(space.nbhds[x])
                assert v in filt and all(v <= u for u in filt)


def test_criterion_2_admissibility_routes(capsys):
    with criterion(2, 10.0, "admissible = evaluation continuity = V_σ ⊆ C(f); fixture and all |X|,|Y| <= 2", capsys):
        fs = enumerate_functions(discrete(1), sierpinski())
        structures = list(enumerate_pretopologies(2))
        assert len(fs) == 2 and len(structures) == 4
        for s in structures:
            sigma = SigmaStructure(fs, s)
            inclusion = all(v & ~c == 0 for v, c in zip(s.nbhds, fs.cc_nbhds))
            verdicts = {is_admissible(sigma), admissible_by_evaluation(sigma), inclusion,
                        admissible_by_definition(sigma, max_z=3)}
            assert len(verdicts) == 1
        cfg = CampaignConfig(max_points=2, max_function_carrier=16, theorem_ids=("T1",))
        all_hold(run_campaign(cfg))


def test_criterion_3_ordering_clauses(capsys):
    with criterion(3, 60.0, "ordering clauses on every σ,σ′ pair, carriers <= 3; uniqueness witnessed by σ*", capsys):
        cfg = CampaignConfig(max_points=3, max_function_carrier=3, theorem_ids=("T4",))
        recs = all_hold(run_campaign(cfg))
        assert any("exactly one structure" in r.instance for r in recs)


def test_criterion_4_finest_proper(capsys):
    with criterion(4, 60.0, "finest proper = modification of σ*, maximum of proper topologies, carriers <= 4", capsys):
        cfg = CampaignConfig(max_points=3, max_function_carrier=4, theorem_ids=("T8",))
        all_hold(run_campaign(cfg))


def test_criterion_5_set_open_topologies(capsys):
    with criterion(5, 300.0, "cover topologies admissible over regular X; set-open topologies proper; <= 3 points", capsys):
        cfg = CampaignConfig(max_points=3, theorem_ids=("T9", "T10"))
        all_hold(run_campaign(cfg))


def test_criterion_6_theta_suite(capsys):
    with criterion(6, 300.0, "θ(SP) indiscrete; θ commutes with products; three-way θ-continuity on <= 3 points", capsys):
        assert theta_pretopology(sierpinski()) == indiscrete(2)
        all_hold(run_campaign(CampaignConfig(max_points=2, theorem_ids=("NT3",))))
        all_hold(run_campaign(CampaignConfig(max_points=3, theorem_ids=("NT1", "NT2"))))


def test_criterion_7_classification_and_mining(capsys):
    with criterion(7, 60.0, "implication lattice on <= 3 points; mined swap, identity, indiscrete σ", capsys):
        all_hold(run_campaign(CampaignConfig(max_points=3, theorem_ids=("S33",))))
        sp = [[0], [0, 1]]
        swap = find_counterexample("theta-continuous-not-continuous")
        assert swap.verdict == HOLDS and swap.witness["X"] == swap.witness["Y"] == sp
        assert swap.witness["map"] == [1, 0]
        ident = find_counterexample("continuous-not-super")
        assert ident.verdict == HOLDS and ident.witness["X"] == ident.witness["Y"] == sp
        assert ident.witness["map"] == [0, 1]
        pna = find_counterexample("proper-not-admissible")
        assert pna.verdict == HOLDS and pna.witness["X"] == [[0]] and pna.witness["indiscrete"]
        k = len(pna.witness["functions"])
        assert pna.witness["sigma"] == [list(range(k))] * k
        # the same phenomenon on the Sierpinski fixture
        fs = enumerate_functions(discrete(1), sierpinski())
        sigma = SigmaStructure(fs, indiscrete(2))
        assert is_proper(sigma) and not is_admissible(sigma)


def test_criterion_8_nets(capsys):
    with criterion(8, 120.0, "four continuous-convergence criteria agree, seq length <= 4, carriers <= 3; limsup of constants", capsys):
        cfg = CampaignConfig(max_points=3, max_function_carrier=3, max_sequence_length=4,
                             theorem_ids=("T2", "T3", "R1", "C1"))
        all_hold(run_campaign(cfg))
        for space in all_spaces(3):
            for a in range(space.top + 1):
                assert upper_limit(EpSequence.constant(a), space) == space.closure(a)


def test_criterion_9_determinism(tmp_path, capsys):
    with criterion(9, 600.0, "campaign JSON byte-identical for --jobs 1 and --jobs 8", capsys):
        outs = []
        for jobs in ("1", "8", "1", "8"):
            target = tmp_path / f"report-{len(outs)}.json"
            code = cli_main(["campaign", "--jobs", jobs, "--json", str(target)])
            assert code == 0
            outs.append(target.read_bytes())
        assert len(set(outs)) == 1
        cfg = CampaignConfig()
        assert outs[0].decode() == report_json(cfg, run_campaign(cfg))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
