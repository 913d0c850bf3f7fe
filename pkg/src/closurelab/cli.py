"""Command-line front end.

Space arguments are files in the text format of :mod:`closurelab.textio` or
one of the built-in names ``pt``, ``SP``, ``P3``, ``D<n>``, ``I<n>``.
Exit status: 0 when everything holds (or is vacuous), 1 when a checked
property fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import replace
from pathlib import Path

from .bits import bits
from .campaign import PREDICATES, CampaignConfig, find_counterexample, parse_config, report_json, run_campaign
from .errors import AxiomViolation, ClosureLabError, ParseError
from .funcspace import (
    SigmaStructure,
    a_subbase,
    a_topology,
    c_subbase,
    c_topology,
    cc_pretopology,
    enumerate_functions,
    finest_proper_topology,
    is_admissible,
    is_proper,
)
from .maps import FiniteMap, classify, is_continuous
from .nets import converges_continuously, upper_limit
from .report import FAILS, HOLDS
from .space import (
    Pretopology,
    Topology,
    discrete,
    indiscrete,
    product,
    semi_regularization,
    sierpinski,
    theta_pretopology,
    topological_modification,
    verify_closure_axioms,
)
from .textio import (
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


class UsageError(Exception):
    pass


def builtin_space(name: str) -> Pretopology | None:
    if name == "pt":
        return discrete(1)
    if name == "SP":
        return sierpinski()
    if name == "P3":
        return Pretopology.from_nbhds([0b001, 0b011, 0b110])
    m = re.fullmatch(r"([DI])(\d+)", name)
    if m and int(m.group(2)) >= 1:
        n = int(m.group(2))
        return discrete(n) if m.group(1) == "D" else indiscrete(n)
    return None


def load_space(arg: str) -> Pretopology:
    space = builtin_space(arg)
    if space is not None:
        return space
    path = Path(arg)
    if not path.is_file():
        raise UsageError(f"{arg!r} is neither a space file nor a built-in space")
    return parse_space(path.read_text())


def load_map(arg: str, X: Pretopology, Y: Pretopology) -> FiniteMap:
    path = Path(arg)
    text = path.read_text() if path.is_file() else arg
    return parse_map(text, X, Y)


def load_sigma(arg: str, X: Pretopology, Y: Pretopology) -> SigmaStructure:
    fs = enumerate_functions(X, Y)
    named = {
        "cc": lambda: cc_pretopology(fs).structure,
        "finest-proper": lambda: finest_proper_topology(fs).structure,
        "discrete": lambda: discrete(len(fs)),
        "indiscrete": lambda: indiscrete(len(fs)),
    }
    structure = named[arg]() if arg in named else load_space(arg)
    if structure.n != len(fs):
        raise UsageError(f"sigma has {structure.n} points but Y^X has {len(fs)} functions")
    return SigmaStructure(fs, structure)


def _space_payload(space: Pretopology) -> dict:
    out = {
        "points": space.n,
        "closures": [list(bits(c)) for c in space.closures],
        "neighborhoods": [list(bits(v)) for v in space.nbhds],
        "topological": space.is_idempotent(),
    }
    if space.is_idempotent():
        out["open_sets"] = [list(bits(o)) for o in space.as_topology().open_sets]
    return out


def _verdict(ok: bool) -> str:
    return HOLDS if ok else FAILS


# ------------------------------------------------------------------ verbs
# Each verb returns (text, payload, ok).


def cmd_check_axioms(args):
    text = Path(args.space).read_text() if Path(args.space).is_file() else None
    if text is None:
        space = load_space(args.space)
        closures = space.closures
    else:
        closures = _raw_closures(text)
    try:
        space = verify_closure_axioms(closures)
    except AxiomViolation as exc:
        pts = sorted({x for _, x in exc.violations})
        return (f"fails: extensivity violated at points {pts}",
                {"verdict": FAILS, "violations": [list(v) for v in exc.violations]}, False)
    return (f"holds: valid pretopology on {space.n} points"
            + (" (topological)" if space.is_idempotent() else ""),
            {"verdict": HOLDS, "space": _space_payload(space)}, True)


def _raw_closures(text: str) -> list[int]:
    """Closure lines without validation, so axiom failures can be reported."""
    n = None
    closures: dict[int, int] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, _, rest = line.partition(":")
        if head.strip() == "points":
            n = int(rest)
        elif head.startswith("closure"):
            x = int(head.split()[1])
            closures[x] = sum(1 << int(t) for t in rest.replace(",", " ").split())
    if n is None:
        raise ParseError("space must start with 'points: n'")
    if not closures:
        # open-set files are validated by the parser itself
        return list(parse_space(text).closures)
    if sorted(closures) != list(range(n)):
        raise ParseError("need one closure line per point")
    return [closures[x] for x in range(n)]


def cmd_closure(args):
    space = load_space(args.space)
    a = parse_subset(args.set, space.n)
    c = space.closure(a)
    return (f"u({format_subset(a)}) = {format_subset(c)}",
            {"set": list(bits(a)), "closure": list(bits(c))}, True)


def _space_cmd(transform):
    def run(args):
        out = transform(load_space(args.space))
        return format_space(out, with_opens=out.is_idempotent()), _space_payload(out), True
    return run


def _as_topology(space: Pretopology) -> Topology:
    return space.as_topology()


cmd_theta = _space_cmd(lambda s: theta_pretopology(_as_topology(s)))
cmd_semireg = _space_cmd(lambda s: semi_regularization(_as_topology(s)))
cmd_modification = _space_cmd(topological_modification)


def cmd_product(args):
    out = product([load_space(args.first), load_space(args.second)])
    return format_space(out, with_opens=out.is_idempotent()), _space_payload(out), True


def cmd_continuous(args):
    X, Y = load_space(args.space_x), load_space(args.space_y)
    f = load_map(args.map, X, Y)
    ok = is_continuous(f)
    return f"{format_map(f)}: {'continuous' if ok else 'not continuous'}", {"verdict": _verdict(ok)}, ok


def cmd_classify(args):
    X, Y = load_space(args.space_x), load_space(args.space_y)
    prof = classify(load_map(args.map, X, Y))
    flags = prof.as_dict()
    lines = [f"{name}: {'yes' if val else 'no'}" for name, val in flags.items()]
    bad = prof.violations()
    for p, q in bad:
        lines.append(f"implication violated: {p} => {q}")
    return "\n".join(lines), {"profile": flags, "violations": bad}, not bad


def cmd_enumerate_functions(args):
    fs = enumerate_functions(load_space(args.space_x), load_space(args.space_y))
    lines = [f"{len(fs)} continuous functions"]
    lines += [f"f{i}: " + " ".join(map(str, f)) for i, f in enumerate(fs.functions)]
    return "\n".join(lines), {"functions": [list(f) for f in fs.functions]}, True


def _sigma_cmd(test, name):
    def run(args):
        X, Y = load_space(args.space_x), load_space(args.space_y)
        ok = test(load_sigma(args.sigma, X, Y))
        return f"{name}: {'yes' if ok else 'no'}", {"verdict": _verdict(ok), "property": name}, ok
    return run


cmd_proper = _sigma_cmd(is_proper, "proper")
cmd_admissible = _sigma_cmd(is_admissible, "admissible")


def _sigma_report(sigma: SigmaStructure, subbase: list[int] | None = None):
    s = sigma.structure
    top = s.as_topology() if s.is_idempotent() else None
    p, a = is_proper(sigma), is_admissible(sigma)
    lines = [f"functions: {len(sigma.base)}"]
    lines += [f"f{i}: " + " ".join(map(str, f)) for i, f in enumerate(sigma.base.functions)]
    if subbase is not None:
        lines.append("subbase: " + format_family(sorted(set(subbase))))
    if top is not None:
        lines.append("open sets: " + format_family(top.open_sets))
    lines += [f"proper: {'yes' if p else 'no'}", f"admissible: {'yes' if a else 'no'}"]
    payload = {
        "functions": [list(f) for f in sigma.base.functions],
        "structure": _space_payload(s),
        "proper": p,
        "admissible": a,
    }
    return "\n".join(lines), payload


def cmd_finest_proper(args):
    fs = enumerate_functions(load_space(args.space_x), load_space(args.space_y))
    text, payload = _sigma_report(finest_proper_topology(fs))
    return text, payload, payload["proper"]


def cmd_a_topology(args):
    X, Y = load_space(args.space_x), load_space(args.space_y)
    fs = enumerate_functions(X, Y)
    fam = parse_family(args.family, X.n)
    text, payload = _sigma_report(a_topology(fs, fam), a_subbase(fs, fam))
    return text, payload, True


def cmd_c_topology(args):
    X, Y = load_space(args.space_x), load_space(args.space_y)
    fs = enumerate_functions(X, Y)
    cover = parse_family(args.cover, X.n)
    text, payload = _sigma_report(c_topology(fs, cover), c_subbase(fs, cover))
    return text, payload, True


def cmd_limsup(args):
    space = load_space(args.space)
    seq = parse_set_sequence(args.seq, space.n)
    ls = upper_limit(seq, space)
    return f"limsup = {format_subset(ls)}", {"limsup": list(bits(ls))}, True


def cmd_cc(args):
    fs = enumerate_functions(load_space(args.space_x), load_space(args.space_y))
    seq = parse_sequence(args.seq, len(fs))
    if not 0 <= args.f < len(fs):
        raise UsageError(f"function index {args.f} out of range for {len(fs)} functions")
    ok = converges_continuously(seq, fs, args.f)
    word = "converges continuously" if ok else "does not converge continuously"
    return f"{seq} {word} to f{args.f}", {"verdict": _verdict(ok)}, ok


def cmd_campaign(args):
    cfg = parse_config(Path(args.config).read_text()) if args.config else CampaignConfig()
    if args.jobs is not None:
        cfg = replace(cfg, parallelism=args.jobs)
    if args.up_to_iso:
        cfg = replace(cfg, up_to_iso=True)
    if args.oracle:
        cfg = replace(cfg, oracle=True)
    records = run_campaign(cfg)
    lines = [f"{r.check:<4} {r.verdict:<8} {r.instance}" for r in records]
    failed = [r for r in records if r.verdict == FAILS]
    lines.append(f"{len(records)} records, {len(failed)} failing")
    return "\n".join(lines), json.loads(report_json(cfg, records)), not failed, report_json(cfg, records)


def cmd_mine(args):
    rec = find_counterexample(args.predicate, args.max_points)
    text = f"{rec.verdict}: {rec.instance}\n" + json.dumps(rec.witness, sort_keys=True)
    return text, rec.as_dict(), True


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="closurelab", description="Finite closure spaces and function-space checks")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="also write a JSON report to PATH")
    common.add_argument("--oracle", action="store_true", help="run definitional cross-checks")
    common.add_argument("--jobs", type=int, help="worker processes for campaigns")
    common.add_argument("--up-to-iso", action="store_true", help="sweep one space per isomorphism class")
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, fn, *positionals, help=None):
        p = sub.add_parser(name, parents=[common], help=help)
        for pos in positionals:
            p.add_argument(pos)
        p.set_defaults(fn=fn)
        return p

    verb("check-axioms", cmd_check_axioms, "space", help="validate a closure file")
    verb("closure", cmd_closure, "space", "set", help="closure of a subset")
    verb("theta", cmd_theta, "space", help="θ-closure pretopology of a topology")
    verb("semireg", cmd_semireg, "space", help="semi-regularization of a topology")
    verb("modification", cmd_modification, "space", help="topological modification")
    verb("product", cmd_product, "first", "second", help="product of two spaces")
    verb("continuous", cmd_continuous, "space_x", "space_y", "map", help="is the map continuous")
    verb("classify", cmd_classify, "space_x", "space_y", "map", help="continuity-like classes of a map")
    verb("enumerate-functions", cmd_enumerate_functions, "space_x", "space_y", help="continuous maps X -> Y")
    for name, fn in (("proper", cmd_proper), ("admissible", cmd_admissible)):
        verb(name, fn, "space_x", "space_y", "sigma",
             help="sigma: a space file on Y^X, or cc, finest-proper, discrete, indiscrete")
    verb("finest-proper", cmd_finest_proper, "space_x", "space_y", help="finest proper topology on Y^X")
    verb("a-topology", cmd_a_topology, "space_x", "space_y", help="set-open topology of a family").add_argument(
        "--family", required=True, help="subsets of X separated by ';', e.g. '0; 0 1'")
    verb("c-topology", cmd_c_topology, "space_x", "space_y", help="cover topology of an interior cover").add_argument(
        "--cover", required=True, help="interior cover of X separated by ';'")
    verb("limsup", cmd_limsup, "space", "seq", help="seq of subsets like '{0} | {1,2} {}'")
    cc = verb("cc", cmd_cc, "space_x", "space_y", "seq", help="continuous convergence of a function sequence")
    cc.add_argument("f", type=int)
    verb("campaign", cmd_campaign, help="run the exhaustive check registry").add_argument("--config", help="key=value config file")
    verb("mine", cmd_mine, "predicate", help="search for a minimal counterexample").add_argument("--max-points", type=int)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb == "mine" and args.predicate not in PREDICATES:
        parser.error(f"unknown predicate {args.predicate!r}; choose from {', '.join(PREDICATES)}")
    if args.jobs is not None and args.jobs < 1:
        parser.error("--jobs must be positive")
    try:
        result = args.fn(args)
    except (UsageError, ClosureLabError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text, payload, ok = result[:3]
    print(text)
    if args.json:
        body = result[3] if len(result) > 3 else json.dumps(payload, indent=2, sort_keys=True) + "\n"
        Path(args.json).write_text(body)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
