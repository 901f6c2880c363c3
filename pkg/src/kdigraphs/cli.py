"""Command-line front end.

Exit codes: 0 computed, 1 negative answer under ``--expect``, 2 usage or
input error (including size caps), 3 a proved theorem failed on this input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Callable, Sequence

from . import families as fam
from .digraph import is_strong, underlying
from .enumeration import DEFAULT_MAX_N, THEOREMS, minimal_strong_with, verify_theorem
from .families import ClassificationGap, classify_almost_planar, generate, is_almost_planar
from .graph import edge
from .io import (
    FormatError,
    digraph_to_json,
    dump_json,
    format_digraph,
    format_graph,
    graph_to_json,
    parse_digraph,
    parse_graph,
    to_dot,
)
from .kuratowski import PROPERTIES, kuratowski_witness
from .obstructions import (
    ObstructionWitness,
    detect_outerplanar_obstruction,
    detect_series_parallel_obstruction,
    is_series_parallel_digraph,
)
from .orientation import clean_back_cut, find_good_orientation, good_orientations
from .planarity import is_outerplanar, is_planar
from .topological import SizeCapError, critical_edges

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_THEOREM = 0, 1, 2, 3


class TheoremViolation(RuntimeError):
    pass


class UsageError(ValueError):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _pair_list(text: str) -> tuple[tuple[int, int], ...]:
    out = []
    for item in text.split(","):
        if not item.strip():
            continue
        a, sep, b = item.partition("-")
        if not sep:
            raise argparse.ArgumentTypeError(f"expected pairs like '0-3', got {item!r}")
        try:
            out.append((int(a), int(b)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected pairs like '0-3', got {item!r}")
    return tuple(out)


# --- commands ------------------------------------------------------------------


def _cmd_classify(args, out: Callable[[str], None]) -> int:
    g = parse_graph(_read(args.file))
    almost = is_almost_planar(g)
    try:
        certs = classify_almost_planar(g, all_hits=True)
    except ClassificationGap:
        if almost:
            raise TheoremViolation("almost-planar graph matches none of the seven families")
        certs = []
    for c in certs:
        try:
            c.check(g)
        except ValueError as exc:
            raise TheoremViolation(f"certificate failed its own check: {exc}")
    if args.family:
        certs = [c for c in certs if c.family == args.family]
    if args.format == "json":
        if args.all:
            out(dump_json({"almost_planar": almost, "certificates": [c.to_json() for c in certs]}))
        else:
            out(dump_json(certs[0].to_json() if certs else None))
    else:
        if not certs:
            out("NONE\n")
        for c in certs if args.all else certs[:1]:
            out(f"{c.family} {' '.join(map(str, c.mapping))}\n")
    if args.expect and not certs:
        return EXIT_NEGATIVE
    return EXIT_OK


def _cmd_obstruct(args, out: Callable[[str], None]) -> int:
    d = parse_digraph(_read(args.file))
    und = underlying(d)
    core_doc = None
    if args.type == "planar":
        found = kuratowski_witness(d)
        w = None if found is None else ObstructionWitness("kuratowski-digraph", found[1])
        if found is not None:
            core_doc = digraph_to_json(found[0])
        holds = not is_planar(und)
    elif args.type == "outerplanar":
        w = detect_outerplanar_obstruction(d, rim_only=args.rim_only)
        holds = not is_outerplanar(und)
    else:
        w = detect_series_parallel_obstruction(d, rim_only=args.rim_only)
        holds = not is_series_parallel_digraph(d)
    if w is not None:
        try:
            w.validate(d)
        except ValueError as exc:
            raise TheoremViolation(f"witness failed validation: {exc}")
    if is_strong(d) and holds and w is None:
        raise TheoremViolation(f"strong digraph with the property but no {args.type} obstruction")
    if w is None:
        out("NONE\n" if args.format == "text" else dump_json(None))
        return EXIT_NEGATIVE if args.expect else EXIT_OK
    if args.dot:
        out(to_dot(d.vertex_count, d.arcs, True, w.witness.host_arcs()))
    elif args.format == "json":
        doc = w.to_json()
        if core_doc is not None:
            doc["core"] = core_doc
        out(dump_json(doc))
    else:
        out(f"{w.kind}\n")
        out("branch " + " ".join(map(str, w.witness.branch_map)) + "\n")
        for a in w.witness.pattern.sorted_arcs():
            out(f"{a[0]} {a[1]}: " + " ".join(map(str, w.witness.paths[a])) + "\n")
    return EXIT_OK


def _cmd_almost_planar(args, out: Callable[[str], None]) -> int:
    g = parse_graph(_read(args.file))
    verdict = is_almost_planar(g)
    f = sorted(critical_edges(g, "nonplanar"))
    if args.format == "json":
        out(dump_json({"almost_planar": verdict, "critical_edges": [list(e) for e in f]}))
    else:
        out(("true" if verdict else "false") + "\n" + "".join(f"{u} {v}\n" for u, v in f))
    return EXIT_NEGATIVE if args.expect and not verdict else EXIT_OK


def _check_back_cuts(g, d) -> None:
    f = critical_edges(g, "nonplanar")
    for arc in d.sorted_arcs():
        if edge(*arc) in f:
            try:
                clean_back_cut(d, arc, f).check(d, f)
            except (LookupError, ValueError) as exc:
                raise TheoremViolation(f"good orientation without a clean back-cut: {exc}")


def _cmd_orient(args, out: Callable[[str], None]) -> int:
    g = parse_graph(_read(args.file))
    if not is_almost_planar(g):
        raise UsageError("orient needs an almost-planar graph")
    if args.all:
        found = good_orientations(g, args.method)
    else:
        one = find_good_orientation(g, args.method)
        found = [] if one is None else [one]
    for o in found:
        _check_back_cuts(g, o.digraph())
    if not found:
        out("NONE\n" if args.format == "text" else dump_json(None))
        return EXIT_NEGATIVE if args.expect else EXIT_OK
    digraphs = [o.digraph() for o in found]
    if args.dot:
        out(to_dot(g.vertex_count, digraphs[0].arcs, True))
    elif args.format == "json":
        if args.all:
            out(dump_json({"count": len(digraphs), "orientations": [digraph_to_json(d) for d in digraphs]}))
        else:
            out(dump_json(digraph_to_json(digraphs[0])))
    else:
        if args.all:
            out(f"count {len(digraphs)}\n")
        out("\n".join(format_digraph(d) for d in digraphs))
    return EXIT_OK


def _spec_from_args(args) -> Any:
    f = args.family
    if f == "mobius-chain":
        return fam.MobiusChainSpec(args.n, args.chords)
    if f == "mobius-ladder":
        return fam.mobius_ladder_spec(args.k)
    if f == "double-wheel":
        return fam.DoubleWheelSpec(args.n, args.u_nbrs, args.v_nbrs)
    if f == "conch":
        return fam.ConchSpec(args.p, args.q, args.r, args.p1p2, args.p1p3)
    if f == "mussel":
        return fam.MusselSpec(args.p, args.q, args.r, args.p1p2, args.p2p3, args.p1p3)
    if f == "scallop":
        return fam.ScallopSpec(args.n or 0, args.wc1, args.wcn, args.k5)
    if f == "clam":
        return fam.ClamSpec(args.n, args.j)
    if f == "whelk":
        return fam.WhelkSpec(args.n, args.i, args.j)
    return None


_NAMED = {"U8": fam.generate_U8, "V8": fam.generate_V8, "W8": fam.generate_W8}


def _cmd_generate(args, out: Callable[[str], None]) -> int:
    if args.family in _NAMED:
        g = _NAMED[args.family]()
    else:
        g = generate(_spec_from_args(args))
    out(format_graph(g) if args.format == "text" else dump_json(graph_to_json(g)))
    return EXIT_OK


def _cmd_verify(args, out: Callable[[str], None]) -> int:
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    report = verify_theorem(args.theorem, args.max_n, jobs=args.jobs)
    if args.format == "json":
        out(dump_json(report.to_json()))
    else:
        verdict = "PASS" if report.passed else "FAIL"
        out(f"{verdict} {report.theorem} max_n={report.max_n} enumerated={report.enumerated} "
            f"holders={report.holders} minimal={report.minimal} mismatches={report.mismatches}\n")
    return EXIT_OK if report.passed else EXIT_THEOREM


def _cmd_minimal(args, out: Callable[[str], None]) -> int:
    if not 1 <= args.max_n <= 6:
        raise UsageError("--max-n must lie in 1..6")
    found = minimal_strong_with(args.property, args.max_n)
    if args.format == "json":
        out(dump_json({"property": args.property, "max_n": args.max_n, "count": len(found),
                       "digraphs": [digraph_to_json(d) for d in found]}))
    else:
        out(f"count {len(found)}\n")
        out("\n".join(format_digraph(d) for d in found))
    return EXIT_OK


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "text"), default=None)

    p = argparse.ArgumentParser(prog="kdigraphs", description="Strong digraph obstructions and almost-planar graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[fmt], help="family certificate for an almost-planar graph")
    c.add_argument("file", help="graph file, or - for stdin")
    c.add_argument("--all", action="store_true", help="every matching family")
    c.add_argument("--family", choices=fam.FAMILIES, help="keep only this family")
    c.add_argument("--expect", action="store_true", help="exit 1 when no certificate is found")
    c.set_defaults(run=_cmd_classify, default_format="json")

    o = sub.add_parser("obstruct", parents=[fmt], help="obstruction witness in a digraph")
    o.add_argument("--type", required=True, choices=("planar", "outerplanar", "series-parallel"))
    o.add_argument("file", help="digraph file, or - for stdin")
    o.add_argument("--rim-only", action="store_true", help="diwheel spokes must be single arcs")
    o.add_argument("--dot", action="store_true", help="emit DOT with the witness highlighted")
    o.add_argument("--expect", action="store_true", help="exit 1 when no obstruction is found")
    o.set_defaults(run=_cmd_obstruct, default_format="json")

    a = sub.add_parser("almost-planar", parents=[fmt], help="almost-planarity and the critical edges")
    a.add_argument("file", help="graph file, or - for stdin")
    a.add_argument("--expect", action="store_true", help="exit 1 when not almost-planar")
    a.set_defaults(run=_cmd_almost_planar, default_format="text")

    r = sub.add_parser("orient", parents=[fmt], help="good orientation of an almost-planar graph")
    r.add_argument("file", help="graph file, or - for stdin")
    r.add_argument("--all", action="store_true", help="all good orientations up to reversal")
    r.add_argument("--method", choices=("cells", "brute"), default="cells")
    r.add_argument("--dot", action="store_true", help="emit DOT for the first orientation")
    r.add_argument("--expect", action="store_true", help="exit 1 when none exists")
    r.set_defaults(run=_cmd_orient, default_format="text")

    gen = sub.add_parser("generate", help="build a family member")
    gsub = gen.add_subparsers(dest="family", required=True)

    def family(name: str, **flags: dict) -> None:
        q = gsub.add_parser(name, parents=[fmt])
        for flag, kw in flags.items():
            q.add_argument("--" + flag.replace("_", "-"), dest=flag, **kw)
        q.set_defaults(run=_cmd_generate, default_format="text")

    req_int = {"type": int, "required": True}
    flag = {"action": "store_true"}
    family("mobius-chain", n=req_int, chords={"type": _pair_list, "required": True})
    family("mobius-ladder", k=req_int)
    family("double-wheel", n=req_int, u_nbrs={"type": _int_list, "required": True},
           v_nbrs={"type": _int_list, "required": True})
    family("conch", p=req_int, q=req_int, r=req_int, p1p2=flag, p1p3=flag)
    family("mussel", p=req_int, q=req_int, r=req_int, p1p2=flag, p2p3=flag, p1p3=flag)
    family("scallop", n={"type": int}, wc1=flag, wcn=flag, k5=flag)
    family("clam", n=req_int, j=req_int)
    family("whelk", n=req_int, i=req_int, j=req_int)
    for name in _NAMED:
        family(name)

    v = sub.add_parser("verify", parents=[fmt], help="exhaustive theorem check")
    v.add_argument("--theorem", required=True, choices=THEOREMS)
    v.add_argument("--max-n", type=int, default=None)
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(run=_cmd_verify, default_format="json")

    m = sub.add_parser("minimal", parents=[fmt], help="minimal strong digraphs with a property")
    m.add_argument("--property", required=True, choices=PROPERTIES)
    m.add_argument("--max-n", type=int, required=True)
    m.set_defaults(run=_cmd_minimal, default_format="json")
    return p


def run(argv: Sequence[str] | None = None, out: Callable[[str], None] | None = None) -> int:
    out = out or sys.stdout.write
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.format is None:
        args.format = args.default_format
    if args.command == "verify" and args.max_n is None:
        args.max_n = DEFAULT_MAX_N[args.theorem]
    try:
        return args.run(args, out)
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_THEOREM
    except (FormatError, SizeCapError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
