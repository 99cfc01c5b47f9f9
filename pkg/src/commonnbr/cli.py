"""Command-line interface: ``commonnbr <subcommand> ...``.

Graphs are given inline or with ``--input FILE`` (one graph per line).  A
graph is graph6, or an edge list ``p; u v; u v; ...`` (detected by a leading
digit).  Output is ``key=value`` lines, or one JSON object per graph with
``--json``.

Exit codes: 0 success, 1 verification mismatches, 2 bad input or flags,
3 graph outside the hypotheses of the requested classification.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections.abc import Iterator, Sequence

from .classifier import (
    HypothesisError,
    classify_a2,
    classify_outerplanar_a2,
    predict_an,
    predict_profile,
)
from .enumeration import EnumerationError, MAX_ENUM_ORDER, enumerate_graphs
from .families import FamilySpec, Kind, construct_family
from .generators import A2Target, GenerationError, gen_a1, gen_a2
from .graph import Graph, GraphError, a_set, profile
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .oracle import CHECKS, ALIASES, verify_theorems
from .recognition import is_outerplanar, is_planar, vertex_connectivity_upto3

JOBS_ENV = "COMMONNBR_JOBS"


class UsageError(ValueError):
    pass


# -- input / output ---------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    parts = [s.strip() for s in text.strip().split(";")]
    try:
        p = int(parts[0])
        edges = []
        for item in parts[1:]:
            if not item:
                continue
            u, v = item.split()
            edges.append((int(u), int(v)))
    except ValueError as exc:
        raise UsageError(f"bad edge list {text!r}: expected 'p; u v; u v; ...'") from exc
    return Graph.from_edges(p, edges)


def format_edge_list(g: Graph) -> str:
    return "; ".join([str(g.p)] + [f"{u} {v}" for u, v in g.edges()])


def parse_graph(text: str) -> Graph:
    text = text.strip()
    if not text:
        raise UsageError("empty graph")
    if text[0].isdigit():
        return parse_edge_list(text)
    return parse_graph6(text)


def _graphs(args) -> Iterator[Graph]:
    if (args.graph is None) == (args.input is None):
        raise UsageError("give exactly one of an inline graph or --input FILE")
    if args.graph is not None:
        yield parse_graph(args.graph)
        return
    with open(args.input, encoding="ascii") if args.input != "-" else sys.stdin as fh:
        for line in fh:
            line = line.strip().removeprefix(">>graph6<<")
            if line:
                yield parse_graph(line)


def fmt_set(values) -> str:
    return "{" + ",".join(str(v) for v in sorted(values)) + "}"


class _Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.first = True

    def emit(self, record: dict) -> None:
        if self.as_json:
            print(json.dumps(_jsonable(record)))
            return
        if not self.first:
            print()
        self.first = False
        for key, value in record.items():
            if isinstance(value, (set, frozenset)):
                value = fmt_set(value)
            elif isinstance(value, bool):
                value = str(value).lower()
            elif value is None:
                value = "none"
            elif isinstance(value, (list, tuple)):
                value = " ".join(fmt_set(v) if isinstance(v, (set, frozenset)) else str(v) for v in value)
            print(f"{key}={value}")


def _jsonable(record: dict) -> dict:
    out = {}
    for k, v in record.items():
        if isinstance(v, (set, frozenset)):
            v = sorted(v)
        elif isinstance(v, (list, tuple)):
            v = [sorted(x) if isinstance(x, (set, frozenset)) else x for x in v]
        out[k] = v
    return out


def _g6(g: Graph) -> str:
    return write_graph6(g).decode()


# -- subcommands ---------------------------------------------------------------


def cmd_spectrum(args, out: _Out) -> int:
    for g in _graphs(args):
        rec: dict = {"graph6": _g6(g)}
        if args.n is not None:
            for n in args.n:
                if n < 1:
                    raise UsageError(f"--n must be positive, got {n}")
                rec[f"A_{n}"] = a_set(g, n)
        else:
            prof = profile(g)
            for n in range(1, g.p + 1):
                rec[f"A_{n}"] = prof[n]
        out.emit(rec)
    return 0


def _classification_record(g: Graph, cls) -> dict:
    rec: dict = {"graph6": _g6(g), "branch": cls.branch}
    if isinstance(cls.predicted, tuple):
        for n, s in enumerate(cls.predicted, 3):
            rec[f"A_{n}"] = s
    else:
        rec[f"A_{cls.predicted.n}"] = cls.predicted
    rec["family"] = str(cls.family)
    if cls.member is not None:
        rec["member"] = str(cls.member)
    if cls.branch in ("unlisted",) or not cls.consistent:
        rec["consistent"] = cls.consistent
    for key in ("p", "q", "max_degree", "L", "connectivity", "outerplanar"):
        rec[key] = cls.evidence[key]
    return rec


def cmd_classify(args, out: _Out) -> int:
    for g in _graphs(args):
        if args.outerplanar:
            cls = classify_outerplanar_a2(g)
        elif args.a2:
            cls = classify_a2(g)
        elif args.n is not None:
            if args.n < 3:
                raise UsageError("--n must be at least 3; use --a2 for pairs")
            cls = predict_an(g, args.n)
        else:
            cls = predict_profile(g)
        out.emit(_classification_record(g, cls))
    return 0


def cmd_generate(args, out: _Out) -> int:
    seed = args.seed
    if args.what == "a2":
        target = A2Target.parse(args.base, args.aprime or "")
        g = gen_a2(target, seed)
        rec = {"graph6": _g6(g), "p": g.p, "q": g.q, "A_2": a_set(g, 2),
               "target": target.spectrum, "planar": is_planar(g), "connected": g.is_connected()}
    else:
        degrees = _int_list(args.degrees)
        g = gen_a1(degrees, seed)
        rec = {"graph6": _g6(g), "p": g.p, "q": g.q, "A_1": a_set(g, 1),
               "target": frozenset(degrees), "planar": is_planar(g), "connected": g.is_connected()}
        if min(degrees) >= 3:
            rec["three_connected"] = vertex_connectivity_upto3(g) >= 3
        else:
            rec["outerplanar"] = is_outerplanar(g)
    out.emit(rec)
    return 0


def _int_list(text: str) -> list[int]:
    try:
        vals = [int(x) for x in text.replace(",", " ").split()]
    except ValueError as exc:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from exc
    if not vals:
        raise UsageError("empty integer list")
    return vals


def _kind(text: str) -> Kind:
    for k in Kind:
        if text.lower() in (k.value.lower(), k.name.lower()):
            return k
    raise UsageError(f"unknown family {text!r}; choose from {', '.join(k.value for k in Kind if k is not Kind.NONE)}")


def cmd_family(args, out: _Out) -> int:
    mask = None
    if args.mask is not None:
        mask = int(args.mask, 2) if set(args.mask) <= {"0", "1"} else int(args.mask, 0)
    g = construct_family(FamilySpec(_kind(args.kind), args.m, mask))
    out.emit({"graph6": _g6(g), "p": g.p, "q": g.q})
    return 0


def cmd_verify(args, out: _Out) -> int:
    which = None
    if args.theorems:
        which = [w.strip() for w in args.theorems.split(",") if w.strip()]
        bad = [w for w in which if w not in CHECKS and w not in ALIASES]
        if bad:
            raise UsageError(f"unknown check(s) {', '.join(bad)}; choose from {', '.join(CHECKS)}")
    if args.graph6:
        with open(args.graph6, "rb") as fh:
            corpus = [parse_graph6(line) for line in fh if line.strip()]
        desc = args.graph6
    else:
        if not 1 <= args.max_order <= MAX_ENUM_ORDER:
            raise UsageError(f"--max-order must be in 1..{MAX_ENUM_ORDER}")
        filters = ("planar",) if args.include_disconnected else ("planar", "connected")
        corpus = (g for p in range(1, args.max_order + 1) for g in enumerate_graphs(p, filters))
        desc = f"{'planar' if args.include_disconnected else 'connected planar'} p<={args.max_order}"
    report = verify_theorems(corpus, which, desc, jobs=args.jobs)
    if out.as_json:
        print(json.dumps(report.as_dict()))
    else:
        print(f"corpus={report.corpus}")
        for name, t in sorted(report.tallies.items()):
            print(f"{name}=checked:{t.checked} mismatches:{t.mismatches} skipped:{t.skipped}")
        print(f"mismatches={report.mismatches}")
        for check, g6 in report.counterexamples[:20]:
            print(f"counterexample={check} {g6}")
        print(f"wall_time={report.wall_time:.2f}")
    return 0 if report.ok else 1


def cmd_convert(args, out: _Out) -> int:
    for g in _graphs(args):
        target = args.to
        if target == "auto":
            text = (args.graph or "").strip()
            target = "graph6" if text[:1].isdigit() else "edges"
        print(_g6(g) if target == "graph6" else format_edge_list(g))
    return 0


# -- parser ----------------------------------------------------------------


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="commonnbr", description="Common-neighbourhood spectra of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(sp):
        sp.add_argument("graph", nargs="?", help="graph6 string or edge list 'p; u v; ...'")
        sp.add_argument("--input", metavar="FILE", help="file with one graph per line ('-' for stdin)")
        sp.add_argument("--json", action="store_true", help="one JSON object per graph")

    sp = sub.add_parser("spectrum", help="A_n by brute force")
    with_input(sp)
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--n", type=int, action="append", help="tuple size (repeatable)")
    grp.add_argument("--all", action="store_true", help="every A_n for 1 <= n <= p (default)")
    sp.set_defaults(run=cmd_spectrum)

    sp = sub.add_parser("classify", help="structural prediction without enumeration")
    with_input(sp)
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--profile", action="store_true", help="A_3 .. A_p (default)")
    grp.add_argument("--n", type=int, help="a single A_n, n >= 3")
    grp.add_argument("--a2", action="store_true", help="row of the planar connected A_2 table")
    grp.add_argument("--outerplanar", action="store_true", help="A_2 of a connected outerplanar graph")
    sp.set_defaults(run=cmd_classify)

    sp = sub.add_parser("generate", help="construct a graph with a prescribed spectrum")
    sp.add_argument("what", choices=("a2", "a1"))
    sp.add_argument("--base", default="12", help="a2: one of 12, 012, 02")
    sp.add_argument("--aprime", help="a2: extra values >= 3, e.g. '3,5'")
    sp.add_argument("--degrees", help="a1: degree set, e.g. '3,5,8'")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(run=cmd_generate)

    sp = sub.add_parser("family", help="graph6 of a named family member")
    sp.add_argument("--kind", required=True, help="T, Tprime, Tclass, B, Bprime, D, Rclass, K2, S, ...")
    sp.add_argument("--m", "--l", type=int, dest="m", help="family parameter")
    sp.add_argument("--mask", help="Tclass/Rclass: path edges kept, as bits (edge 0 = lowest)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(run=cmd_family)

    sp = sub.add_parser("verify", help="check the classification against brute force")
    sp.add_argument("--max-order", type=int, default=7)
    sp.add_argument("--graph6", metavar="FILE", help="verify this corpus instead of enumerating")
    sp.add_argument("--theorems", help=f"comma list from {', '.join(CHECKS)} (default: all)")
    sp.add_argument("--include-disconnected", action="store_true")
    sp.add_argument("--jobs", type=int, default=_default_jobs(), help=f"worker processes (env {JOBS_ENV})")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(run=cmd_verify)

    sp = sub.add_parser("convert", help="edge list <-> graph6")
    with_input(sp)
    sp.add_argument("--to", choices=("auto", "graph6", "edges"), default="auto")
    sp.set_defaults(run=cmd_convert)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "what", None) == "a1" and not args.degrees:
        print("commonnbr: error: generate a1 needs --degrees", file=sys.stderr)
        return 2
    if getattr(args, "what", None) == "a2" and args.base not in ("12", "012", "02", "{1,2}", "{0,1,2}", "{0,2}"):
        print(f"commonnbr: error: unknown --base {args.base!r}", file=sys.stderr)
        return 2
    out = _Out(getattr(args, "json", False))
    try:
        return args.run(args, out)
    except HypothesisError as exc:
        print(f"commonnbr: hypothesis not met: {exc}", file=sys.stderr)
        return 3
    except (UsageError, Graph6Error, GraphError, GenerationError, EnumerationError, OSError) as exc:
        print(f"commonnbr: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
