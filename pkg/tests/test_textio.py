import pytest

from closurelab.errors import ParseError
from closurelab.maps import FiniteMap
from closurelab.nets import EpSequence
from closurelab.space import Topology
from closurelab.textio import (
    format_family,
    format_map,
    format_space,
    format_subset,
    parse_family,
    parse_map,
    parse_sequence,
    parse_set_sequence,
    parse_space,
    parse_subset,
)

from conftest import P3, SP, all_spaces

SP_TEXT = """\
# Sierpinski space
points: 2
closure 0: 0
closure 1: 0 1
open: 1
"""


def test_parse_space_with_opens():
    space = parse_space(SP_TEXT)
    assert space == SP and isinstance(space, Topology)


def test_open_sets_alone_define_a_topology():
    assert parse_space("points: 2\nopen: 1\n") == SP


def test_roundtrip_every_small_space():
    for space in all_spaces(3):
        assert parse_space(format_space(space)) == space
    assert parse_space(format_space(P3)) == P3


@pytest.mark.parametrize(
    "text",
    [
        "",
        "closure 0: 0\n",
        "points: x\n",
        "points: 0\n",
        "points: 2\nclosure 0: 0\n",
        "points: 2\nclosure 0: 0\nclosure 0: 0\nclosure 1: 1\n",
        "points: 2\nclosure 0: 0 5\nclosure 1: 1\n",
        "points: 2\nclosure 0: 1\nclosure 1: 1\n",
        "points: 2\nclosure 0: 0\nclosure 1: 0 1\nopen: 0\n",
        "points: 2\nopen: 0\nopen: 1\nopen: 0 1\nbogus: 1\n",
        "points: 3\nopen: 0 1\nopen: 1 2\n",
    ],
)
def test_bad_space_files(text):
    with pytest.raises(ParseError):
        parse_space(text)


def test_maps():
    f = parse_map("map: f(0)=1 f(1)=0", SP, SP)
    assert f == FiniteMap(SP, SP, (1, 0))
    assert parse_map(format_map(f), SP, SP) == f
    assert parse_map("f(1)=1 f(0)=0", SP, SP).images == (0, 1)
    for bad in ("f(0)=1", "f(0)=1 f(0)=0 f(1)=1", "f(0)=2 f(1)=0", "g(0)=0 f(1)=1"):
        with pytest.raises(ParseError):
            parse_map(bad, SP, SP)


def test_sequences():
    assert parse_sequence("seq: 0 1 | 2") == EpSequence((0, 1), (2,))
    assert parse_sequence("| 0 1") == EpSequence((), (0, 1))
    for bad in ("0 1", "0 | ", "0 | 1 | 2", "0 | 9"):
        with pytest.raises(ParseError):
            parse_sequence(bad, bound=3)


def test_set_sequences():
    s = parse_set_sequence("seq: {0,1} | {1} {}", 2)
    assert s == EpSequence((0b11,), (0b10, 0))
    for bad in ("{0} {1}", "{0} | 1", "{0} |", "{5} | {0}"):
        with pytest.raises(ParseError):
            parse_set_sequence(bad, 2)


def test_subsets_and_families():
    assert parse_subset("0 2", 3) == parse_subset("{0,2}", 3) == parse_subset("0,2", 3) == 0b101
    assert parse_subset("{}", 3) == 0
    assert parse_family("0 1; 2", 3) == [0b011, 0b100]
    assert parse_family("", 3) == []
    assert format_subset(0b101) == "{0,2}"
    assert format_family([0, 0b10]) == "[{}, {1}]"
    with pytest.raises(ParseError):
        parse_subset("3", 3)
