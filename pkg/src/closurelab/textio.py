"""Plain-text formats for spaces, maps, sequences and subsets.

Space file::

    # Sierpinski space
    points: 2
    closure 0: 0
    closure 1: 0 1
    open:
    open: 1
    open: 0 1

``open:`` lines are optional; when present they must list exactly the open
sets of the closure operator (the empty set and the carrier may be omitted).
A file with ``open:`` lines and no ``closure`` lines defines the topology from
its open sets.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterable

from .bits import bits, full, mask_of
from .errors import ClosureLabError, ParseError
from .maps import FiniteMap
from .nets import EpSequence
from .space import Pretopology, Topology

_MAP_ITEM = re.compile(r"^f\((\d+)\)=(\d+)$")


def _indices(text: str, n: int, what: str) -> list[int]:
    out = []
    for tok in text.replace(",", " ").split():
        if not tok.isdigit():
            raise ParseError(f"{what}: bad index {tok!r}")
        i = int(tok)
        if i >= n:
            raise ParseError(f"{what}: index {i} out of range for {n} points")
        out.append(i)
    return out


def _content_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line)
    return lines


def parse_space(text: str) -> Pretopology:
    lines = _content_lines(text)
    if not lines or not lines[0].startswith("points:"):
        raise ParseError("space must start with 'points: n'")
    try:
        n = int(lines[0].split(":", 1)[1])
    except ValueError:
        raise ParseError(f"bad points line {lines[0]!r}") from None
    if n < 1:
        raise ParseError("a space needs at least one point")
    closures: dict[int, int] = {}
    opens: list[int] = []
    saw_open = False
    for line in lines[1:]:
        head, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"unrecognised line {line!r}")
        head = head.strip()
        if head == "open":
            saw_open = True
            opens.append(mask_of(_indices(rest, n, "open")))
        elif head.startswith("closure"):
            parts = head.split()
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError(f"bad closure line {line!r}")
            x = int(parts[1])
            if x >= n:
                raise ParseError(f"closure point {x} out of range for {n} points")
            if x in closures:
                raise ParseError(f"duplicate closure line for point {x}")
            closures[x] = mask_of(_indices(rest, n, f"closure {x}"))
        elif head == "map":
            continue
        else:
            raise ParseError(f"unrecognised line {line!r}")
    try:
        if not closures and saw_open:
            return Topology.from_open_sets(n, set(opens) | {0, full(n)})
        missing = [x for x in range(n) if x not in closures]
        if missing:
            raise ParseError(f"missing closure lines for points {missing}")
        space = Pretopology(tuple(closures[x] for x in range(n)))
        if saw_open:
            topo = space.as_topology()
            if set(topo.open_sets) != set(opens) | {0, full(n)}:
                raise ParseError("open sets do not match the closure operator")
            return topo
    except ParseError:
        raise
    except ClosureLabError as exc:
        raise ParseError(str(exc)) from exc
    return Topology(space.closures) if space.is_idempotent() else space


def format_space(space: Pretopology, with_opens: bool | None = None) -> str:
    lines = [f"points: {space.n}"]
    for x, c in enumerate(space.closures):
        lines.append(f"closure {x}: " + " ".join(map(str, bits(c))))
    if with_opens is None:
        with_opens = isinstance(space, Topology) and space.n <= 16
    if with_opens:
        for o in space.as_topology().open_sets:
            lines.append(("open: " + " ".join(map(str, bits(o)))).rstrip())
    return "\n".join(lines) + "\n"


def read_space(path: str | Path) -> Pretopology:
    return parse_space(Path(path).read_text())


def parse_map(text: str, domain: Pretopology, codomain: Pretopology) -> FiniteMap:
    """Parse ``map: f(0)=j0 f(1)=j1 ...`` (the ``map:`` tag is optional)."""
    body = None
    for line in _content_lines(text):
        if line.startswith("map:"):
            body = line[4:]
            break
    if body is None:
        body = text.strip()
    images: dict[int, int] = {}
    for tok in body.split():
        m = _MAP_ITEM.match(tok)
        if not m:
            raise ParseError(f"bad map item {tok!r}")
        x, y = int(m.group(1)), int(m.group(2))
        if x >= domain.n or y >= codomain.n:
            raise ParseError(f"map item {tok!r} out of range")
        if x in images:
            raise ParseError(f"f({x}) given twice")
        images[x] = y
    missing = [x for x in range(domain.n) if x not in images]
    if missing:
        raise ParseError(f"map undefined at points {missing}")
    return FiniteMap(domain, codomain, tuple(images[x] for x in range(domain.n)))


def format_map(f: FiniteMap) -> str:
    return "map: " + " ".join(f"f({x})={y}" for x, y in enumerate(f.images))


def parse_sequence(text: str, bound: int | None = None) -> EpSequence:
    """Parse ``seq: a b c | d e`` (prefix ``a b c``, cycle ``d e``)."""
    body = text.strip()
    if body.startswith("seq:"):
        body = body[4:]
    if body.count("|") != 1:
        raise ParseError("sequence needs exactly one '|' between prefix and cycle")
    pre, cyc = body.split("|")
    limit = bound if bound is not None else 1 << 62
    prefix = _indices(pre, limit, "sequence")
    cycle = _indices(cyc, limit, "sequence")
    if not cycle:
        raise ParseError("sequence cycle is empty")
    return EpSequence(tuple(prefix), tuple(cycle))


def parse_subset(text: str, n: int) -> int:
    """``"0 2"``, ``"0,2"``, ``"{0,2}"``; ``"{}"`` or ``""`` is the empty set."""
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    return mask_of(_indices(body, n, "subset"))


def parse_family(text: str, n: int) -> list[int]:
    """Semicolon-separated subsets, e.g. ``"0 1; 2"``."""
    if not text.strip():
        return []
    return [parse_subset(part, n) for part in text.split(";")]


def format_subset(mask: int) -> str:
    return "{" + ",".join(map(str, bits(mask))) + "}"


def format_family(masks: Iterable[int]) -> str:
    return "[" + ", ".join(format_subset(m) for m in masks) + "]"


_SET_GROUP = re.compile(r"\{[^{}]*\}")


def parse_set_sequence(text: str, n: int) -> EpSequence:
    """Sequence of subsets, e.g. ``seq: {0,1} | {2} {}`` (items are bitmasks)."""
    body = text.strip()
    if body.startswith("seq:"):
        body = body[4:]
    if body.count("|") != 1:
        raise ParseError("sequence needs exactly one '|' between prefix and cycle")
    sides = []
    for part in body.split("|"):
        groups = _SET_GROUP.findall(part)
        if _SET_GROUP.sub("", part).strip():
            raise ParseError(f"set sequence items must be braced subsets: {part.strip()!r}")
        sides.append(tuple(parse_subset(g, n) for g in groups))
    if not sides[1]:
        raise ParseError("sequence cycle is empty")
    return EpSequence(sides[0], sides[1])
