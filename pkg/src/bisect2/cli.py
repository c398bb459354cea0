"""Command-line front end.

Exit codes: 0 success, 1 domain failure, 2 input error, 3 internal
invariant breach (a constructed colouring failed its own verification).

Graph files are read as graph6 (``.g6``, one graph per line, batch) or as
an edge list (``.el``, one multigraph); ``--format`` overrides the
extension.  Every graph yields one JSON record on stdout, in input order.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import codec, generators
from .bisector import solve_detailed, verify
from .decomposition import decompose
from .errors import Bisect2Error, CodecError, GraphError, LengthMismatch, OddOrder, OverCap, PreconditionFailed, StructureViolation
from .graph import Multigraph
from .oracle import COUNT_CAP, count_k_bisections_with_stats, search_k_bisection
from .recognition import recognize

SCHEMA_VERSION = 1

EXIT_OK, EXIT_DOMAIN, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


def _format_of(path: str, override: str | None) -> str:
    if override:
        return override
    suffix = Path(path).suffix.lower()
    if suffix in (".g6", ".graph6"):
        return "g6"
    if suffix in (".el", ".edges"):
        return "el"
    raise InputError(f"cannot infer format of {path!r}; pass --format g6|el")


def load_graphs(path: str, fmt: str | None = None) -> list[Multigraph]:
    fmt = _format_of(path, fmt)
    try:
        text = Path(path).read_text(encoding="utf-8")
        if fmt == "g6":
            graphs = codec.read_graph6_lines(text)
            if not graphs:
                raise InputError(f"{path}: no graphs")
            return graphs
        return [codec.read_edge_list(text)]
    except (OSError, UnicodeDecodeError, CodecError, GraphError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _emit(record: dict, index: int) -> None:
    out = {"schema_version": SCHEMA_VERSION, "index": index}
    out.update(record)
    print(json.dumps(out))


def _check_one(g: Multigraph, structure: bool) -> tuple[dict, int]:
    report = recognize(g)
    record: dict = {"recognition": report.to_json()}
    if not report.theorem_applies:
        record["failures"] = report.failures()
        return record, EXIT_DOMAIN
    try:
        d = decompose(g)
    except StructureViolation as exc:
        record["error"] = f"StructureViolation: {exc}"
        return record, EXIT_INTERNAL
    record["variant"] = d.variant
    if structure:
        record["structure"] = d.to_json()
    return record, EXIT_OK


def _solve_one(g: Multigraph) -> tuple[dict, int, str | None]:
    try:
        sol = solve_detailed(g)
    except PreconditionFailed as exc:
        return {"error": f"PreconditionFailed: {exc}", "recognition": exc.report.to_json()}, EXIT_DOMAIN, None
    except Bisect2Error as exc:
        return {"error": f"{type(exc).__name__}: {exc}"}, EXIT_INTERNAL, None
    rep = verify(g, sol.colouring, 2)
    record = {
        "recognition": sol.recognition.to_json(),
        "variant": sol.structure.variant,
        "matching": list(sol.matching.edges) if sol.matching else None,
        "verify": rep.to_json(),
    }
    if not rep.ok:
        record["error"] = "InternalVerificationFailed"
        return record, EXIT_INTERNAL, None
    doc = sol.colouring.to_document()
    record["colouring"] = doc
    return record, EXIT_OK, doc


def cmd_check(args: argparse.Namespace) -> int:
    code = EXIT_OK
    for i, g in enumerate(load_graphs(args.input, args.format)):
        record, c = _check_one(g, args.structure)
        _emit(record, i)
        code = max(code, c)
    return code


def cmd_solve(args: argparse.Namespace) -> int:
    graphs = load_graphs(args.input, args.format)
    code = EXIT_OK
    docs = []
    for i, g in enumerate(graphs):
        record, c, doc = _solve_one(g)
        code = max(code, c)
        if doc is not None:
            docs.append(doc)
        if args.json or len(graphs) > 1 or doc is None:
            _emit(record, i)
        elif not args.out:
            print(doc)
    if args.out and docs:
        Path(args.out).write_text("\n".join(docs) + "\n", encoding="utf-8")
    return code


def cmd_verify(args: argparse.Namespace) -> int:
    graphs = load_graphs(args.graph, args.format)
    if len(graphs) != 1:
        raise InputError("verify takes a single graph")
    g = graphs[0]
    try:
        c = codec.read_colouring(Path(args.colouring).read_text(encoding="utf-8"), g.n)
        rep = verify(g, c, args.k)
    except (OSError, CodecError, LengthMismatch) as exc:
        raise InputError(str(exc)) from exc
    _emit({"verify": rep.to_json()}, 0)
    return EXIT_OK if rep.ok else EXIT_DOMAIN


def cmd_oracle(args: argparse.Namespace) -> int:
    code = EXIT_OK
    for i, g in enumerate(load_graphs(args.input, args.format)):
        record: dict = {"k": args.k, "n": g.n}
        try:
            if args.count:
                total, stats = count_k_bisections_with_stats(g, args.k, args.cap or COUNT_CAP)
                record.update(count=total, stats=stats.to_json())
            else:
                found, stats = search_k_bisection(g, args.k, args.cap)
                record["result"] = "found" if found is not None else "none"
                record["colouring"] = found.to_document() if found is not None else None
                record["stats"] = stats.to_json()
        except (OddOrder, OverCap) as exc:
            record["error"] = f"{type(exc).__name__}: {exc}"
            code = max(code, EXIT_DOMAIN)
        _emit(record, i)
    return code


GEN_KINDS = ("k4", "petersen", "prism", "theta", "ring", "random-cubic", "triangle-replacement", "claw-free")


def cmd_gen(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind in generators.NAMED:
        g = generators.gen_named(kind)
    elif kind == "ring":
        g = generators.gen_ring_of_diamonds(args.size or 4)
    elif kind == "random-cubic":
        g = generators.gen_random_bridgeless_cubic(args.size or 10, args.seed)
    elif kind == "triangle-replacement":
        h = generators.gen_random_bridgeless_cubic(args.size or 4, args.seed)
        g = generators.gen_triangle_replacement(h)
    else:
        g = generators.gen_claw_free(args.size or 4, args.seed, strings=args.strings)
    fmt = args.format
    if fmt is None:
        if args.out and Path(args.out).suffix.lower() in (".el", ".g6"):
            fmt = Path(args.out).suffix.lower()[1:]
        else:
            fmt = "g6" if g.is_simple() else "el"
    try:
        text = codec.write_graph6(g) + "\n" if fmt == "g6" else codec.write_edge_list(g)
    except CodecError as exc:
        raise InputError(f"{kind}: {exc}") from exc
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bisect2", description="2-bisections of bridgeless claw-free cubic graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p: argparse.ArgumentParser, name: str = "input") -> None:
        p.add_argument(name, help="graph file (.g6 or .el)")
        p.add_argument("--format", choices=("g6", "el"), default=None)

    p = sub.add_parser("check", help="test the preconditions and report structure")
    graph_input(p)
    p.add_argument("--structure", action="store_true", help="include the structural decomposition")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", help="construct a verified 2-bisection")
    graph_input(p)
    p.add_argument("--out", help="write the colouring document(s) here")
    p.add_argument("--json", action="store_true", help="print the full JSON report")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a colouring is a k-bisection")
    graph_input(p, "graph")
    p.add_argument("colouring", help="file holding a B/W colouring line")
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive k-bisection search")
    graph_input(p)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--count", action="store_true", help="count all k-bisections")
    p.add_argument("--cap", type=int, default=None, help="largest order accepted")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("kind", choices=GEN_KINDS)
    p.add_argument("--size", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strings", type=int, default=2, help="diamond strings for claw-free")
    p.add_argument("--out")
    p.add_argument("--format", choices=("g6", "el"), default=None)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (Bisect2Error, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
