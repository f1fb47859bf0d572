"""Command-line entry point: ``tesscover <subcommand> ...``.

Graphs are read from a file argument or stdin in graph6, edge-list or JSON
form (auto-detected unless ``--in-format`` is given). Results go to stdout,
diagnostics to stderr. Exit status: 0 success, 1 negative answer or failed
check, 2 usage/input error, timeout, or refusal to run outside the exact
solver's envelope.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from typing import Optional

from .cliques import clique_graph, maximal_cliques
from .coloring import chromatic_index, chromatic_number
from .graph import (
    FAMILIES,
    FamilySpec,
    Graph,
    GraphError,
    export_annotated,
    gen_family,
    graph_from_dict,
    graph_to_dict,
    parse_graph,
    serialize_graph,
)
from .solver import (
    ENVELOPE_EDGES,
    ENVELOPE_K,
    ENVELOPE_VERTICES,
    IncompleteCover,
    SearchTimeout,
    bounds,
    decide_k_tessellable,
    greedy_cover,
    tessellation_number,
    upper_bound_via_clique_coloring,
)
from .tessellation import (
    DEFAULT_CAP,
    InvalidCover,
    Tessellation,
    TessellationCover,
    enumerate_tessellations,
    enumerate_tessellations_restricted,
)
from .verify import DEFAULT_CHECKS, format_reports, format_rows, parse_family_range, run_check, sweep


class UsageError(Exception):
    pass


class DomainFailure(Exception):
    pass


def cover_to_json(cover: TessellationCover) -> list:
    return [[list(p) for p in t.polygons] for t in cover.tessellations]


def cover_from_json(data) -> TessellationCover:
    return TessellationCover(tuple(Tessellation.of(t) for t in data))


def read_input(text: str, fmt: str) -> tuple[Graph, Optional[TessellationCover]]:
    """Graph plus an attached cover when the input is the JSON output of ``cover``."""
    stripped = text.strip()
    if fmt == "auto":
        if stripped.startswith("{"):
            fmt = "json"
        else:
            first = stripped.splitlines()[0].strip() if stripped else ""
            fmt = "edge_list" if first.lstrip("-").isdigit() else "graph6"
    if fmt == "json":
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise GraphError(f"bad JSON input: {exc}") from None
        if "graph" in data:
            g = graph_from_dict(data["graph"])
            witness = data.get("witness")
            return g, (cover_from_json(witness) if witness is not None else None)
        g = graph_from_dict(data)
        if "cover" in data:
            return g, cover_from_json([t["polygons"] for t in data["cover"]])
        return g, None
    if fmt == "graph6":
        stripped = stripped.splitlines()[0] if stripped else ""
    return parse_graph(stripped, fmt), None


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tesscover", description="Minimum tessellation covers of simple graphs.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def graph_input(sp):
        sp.add_argument("input", nargs="?", help="graph file (default: stdin)")
        sp.add_argument("--in-format", default="auto", choices=["auto", "graph6", "edge_list", "json"])

    sp = sub.add_parser("gen", help="generate a named graph family")
    sp.add_argument("--family", required=True, choices=FAMILIES)
    for name in ("n", "l", "s", "k"):
        sp.add_argument(f"--{name}", type=int)
    sp.add_argument("--format", default="graph6", choices=["graph6", "edge_list", "json"])

    sp = sub.add_parser("cliques", help="maximal cliques")
    graph_input(sp)
    sp.add_argument("--format", default="json", choices=["json", "text"])

    sp = sub.add_parser("cliquegraph", help="clique graph K(G)")
    graph_input(sp)
    sp.add_argument("--format", default="json", choices=["json", "graph6"])

    sp = sub.add_parser("chroma", help="exact chromatic number or index")
    graph_input(sp)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--vertex", action="store_true", help="chromatic number (default)")
    mode.add_argument("--edge", action="store_true", help="chromatic index")

    sp = sub.add_parser("tessellations", help="stream tessellations as JSON lines")
    graph_input(sp)
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.add_argument("--all", action="store_true", help="every tessellation, not only those with a maximal clique")

    sp = sub.add_parser("cover", help="tessellation number / cover")
    graph_input(sp)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exact minimum (default)")
    mode.add_argument("--greedy", action="store_true")
    mode.add_argument("--upper", action="store_true", help="clique-graph colouring construction")
    sp.add_argument("--k", type=int, help="decide k-tessellability instead of minimising")
    sp.add_argument("--canonical", action="store_true", help="sequential search, reproducible witness")
    sp.add_argument("--timeout", type=float)
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.add_argument("--seed", type=int, help="accepted for forward compatibility; all solvers are deterministic")
    sp.add_argument("--format", default="json", choices=["json", "text"])

    sp = sub.add_parser("verify", help="run the built-in verification checks")
    sp.add_argument("--check", action="append", help="w6 | e3n:<n> | windmill:<l>[,<s>] (repeatable)")
    sp.add_argument("--sweep", action="append", help="family:lo-hi, e.g. wheel:3-8 (repeatable)")
    sp.add_argument("--timeout", type=float)
    sp.add_argument("--format", default="text", choices=["text", "json"])

    sp = sub.add_parser("sweep", help="T(G) vs chi(K(G)) table over graph families")
    sp.add_argument("ranges", nargs="+", help="family:lo-hi[:s=<size>]")
    sp.add_argument("--timeout", type=float)
    sp.add_argument("--format", default="text", choices=["text", "json"])

    sp = sub.add_parser("export", help="DOT or JSON rendering, coloured by cover when present")
    graph_input(sp)
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    return p


def _load(args, stdin: str):
    if args.input:
        try:
            with open(args.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    else:
        text = stdin
    return read_input(text, args.in_format)


def _check_envelope(g: Graph, k: Optional[int] = None):
    if g.n > ENVELOPE_VERTICES or g.m > ENVELOPE_EDGES or (k is not None and k > ENVELOPE_K):
        raise UsageError(
            f"graph with n={g.n}, m={g.m} is outside the exact-solver envelope "
            f"({ENVELOPE_VERTICES} vertices / {ENVELOPE_EDGES} edges / k <= {ENVELOPE_K}); "
            "use --greedy or --upper"
        )


def cmd_gen(args, out, err):
    params = {k: getattr(args, k) for k in ("n", "l", "s", "k") if getattr(args, k) is not None}
    g = gen_family(FamilySpec(args.family, params))
    if args.format == "json":
        out.write(_dump(graph_to_dict(g)) + "\n")
    else:
        text = serialize_graph(g, args.format)
        out.write(text if text.endswith("\n") else text + "\n")


def cmd_cliques(args, g, out, err):
    cliques = maximal_cliques(g)
    if args.format == "text":
        for c in cliques:
            out.write(" ".join(map(str, c)) + "\n")
    else:
        out.write(_dump({"count": len(cliques), "cliques": [list(c) for c in cliques]}) + "\n")


def cmd_cliquegraph(args, g, out, err):
    kg = clique_graph(g)
    if args.format == "graph6":
        out.write(serialize_graph(kg.base, "graph6") + "\n")
    else:
        out.write(_dump({**graph_to_dict(kg.base), "cliques": [list(c) for c in kg.cliques]}) + "\n")


def cmd_chroma(args, g, out, err):
    if args.edge:
        chi, col = chromatic_index(g)
        witness = [[u, v, c] for (u, v), c in sorted(col.items())]
        out.write(_dump({"chi": chi, "kind": "edge", "witness": witness}) + "\n")
    else:
        chi, col = chromatic_number(g)
        out.write(_dump({"chi": chi, "kind": "vertex", "witness": list(col.assignment)}) + "\n")


def cmd_tessellations(args, g, out, err):
    stream = (enumerate_tessellations if args.all else enumerate_tessellations_restricted)(g, args.cap)
    for t in stream:
        out.write(_dump([list(p) for p in t.polygons]) + "\n")
    if stream.truncated:
        err.write(f"truncated: stopped after {stream.emitted} tessellations (--cap {args.cap})\n")


def cmd_cover(args, g, out, err):
    if args.k is not None:
        if args.greedy or args.upper:
            raise UsageError("--k is a decision query; it cannot be combined with --greedy or --upper")
        if args.k < 0:
            raise UsageError("--k must be non-negative")
        _check_envelope(g, args.k)
        try:
            cover = decide_k_tessellable(g, args.k, timeout=args.timeout)
        except SearchTimeout as exc:
            raise _timeout(g, exc, out)
        payload = {
            "graph": graph_to_dict(g),
            "k": args.k,
            "tessellable": cover is not None,
            "witness": cover_to_json(cover) if cover is not None else None,
        }
        if args.format == "text":
            out.write(f"{'' if cover is not None else 'not '}{args.k}-tessellable\n")
        else:
            out.write(_dump(payload) + "\n")
        if cover is None:
            err.write(f"not {args.k}-tessellable\n")
            raise DomainFailure()
        return

    if args.upper:
        cover = upper_bound_via_clique_coloring(g)
        t_number, method = len(cover), "upper_bound_construction"
    elif args.greedy:
        try:
            res = greedy_cover(g, args.cap)
        except IncompleteCover as exc:
            raise UsageError(str(exc)) from None
        cover, t_number, method = res.witness, res.t_number, res.method
    else:
        _check_envelope(g)
        try:
            res = tessellation_number(g, timeout=args.timeout)
        except SearchTimeout as exc:
            raise _timeout(g, exc, out)
        cover, t_number, method = res.witness, res.t_number, res.method
    b = bounds(g)
    if args.format == "text":
        out.write(f"T = {t_number} ({method}); bounds {b.lower}..{b.upper} ({b.lower_reason})\n")
        for i, t in enumerate(cover.tessellations):
            out.write(f"  T{i}: " + " ".join("{" + ",".join(map(str, p)) + "}" for p in t.polygons) + "\n")
        return
    out.write(_dump({
        "graph": graph_to_dict(g),
        "t_number": t_number,
        "method": method,
        "witness": cover_to_json(cover),
        "bounds": b.to_dict(),
    }) + "\n")


def _timeout(g, exc, out):
    b = bounds(g)
    out.write(_dump({"graph": graph_to_dict(g), "error": "timeout", "bounds": b.to_dict()}) + "\n")
    return UsageError(f"{exc}; bounds {b.lower}..{b.upper}")


def cmd_verify(args, out, err):
    checks = args.check or ([] if args.sweep else DEFAULT_CHECKS)
    try:
        reports = [run_check(c) for c in checks]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = []
    for s in args.sweep or []:
        rows.extend(sweep(parse_family_range(s), args.timeout, include_out_of_scope=False))
    if args.sweep:
        rows.extend(sweep([], include_out_of_scope=True))
    if args.format == "json":
        out.write(_dump({"checks": [r.to_dict() for r in reports], "sweep": rows}) + "\n")
    else:
        if reports:
            out.write(format_reports(reports) + "\n")
        if rows:
            out.write(format_rows(rows) + "\n")
    failed = [r.check_id for r in reports if r.status != "pass"] + [r["graph"] for r in rows if r["status"] == "fail"]
    if failed:
        err.write("failed: " + ", ".join(failed) + "\n")
        raise DomainFailure()


def cmd_sweep(args, out, err):
    specs = []
    for s in args.ranges:
        specs.extend(parse_family_range(s))
    rows = sweep(specs, args.timeout)
    if args.format == "json":
        out.write(_dump(rows) + "\n")
    else:
        out.write(format_rows(rows) + "\n")
    if any(r["status"] == "fail" for r in rows):
        raise DomainFailure()


def cmd_export(args, g, cover, out, err):
    fmt = "json" if args.json else "dot"
    try:
        text = export_annotated(g, cover, fmt)
    except InvalidCover as exc:
        err.write(f"invalid cover: {exc}\n")
        raise DomainFailure() from None
    out.write(text if text.endswith("\n") else text + "\n")


def run(argv: list[str], stdin: str = "") -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), out.getvalue(), err.getvalue()

    try:
        if args.cmd == "gen":
            cmd_gen(args, out, err)
        elif args.cmd == "verify":
            cmd_verify(args, out, err)
        elif args.cmd == "sweep":
            cmd_sweep(args, out, err)
        else:
            g, cover = _load(args, stdin)
            if args.cmd == "export":
                cmd_export(args, g, cover, out, err)
            else:
                {
                    "cliques": cmd_cliques,
                    "cliquegraph": cmd_cliquegraph,
                    "chroma": cmd_chroma,
                    "tessellations": cmd_tessellations,
                    "cover": cmd_cover,
                }[args.cmd](args, g, out, err)
    except DomainFailure:
        return 1, out.getvalue(), err.getvalue()
    except (UsageError, GraphError) as exc:
        err.write(f"error: {exc}\n")
        return 2, out.getvalue(), err.getvalue()
    return 0, out.getvalue(), err.getvalue()


def main(argv: Optional[list[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    needs_stdin = not sys.stdin.isatty() and argv and argv[0] not in ("gen", "verify", "sweep")
    stdin = sys.stdin.read() if needs_stdin else ""
    code, out, err = run(argv, stdin)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
