"""Command-line entry point.

Every subcommand writes one JSON record (or one serialized graph) per line to
stdout; diagnostics go to stderr. Exit codes:

    0  ok
    1  input error (bad arguments, malformed graph data)
    2  hypothesis violation (verify-proof on a graph outside the theorem's scope)
    3  counterexamples found (search)
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from typing import BinaryIO, Iterator

from . import __version__
from .connectivity import is_k_connected, vertex_connectivity
from .constructions import k4_substitution, named_graph
from .cuts import find_forest_cut, find_independent_cut
from .enumeration import EnumerationConstraints, StreamFormatError, enumerate_graphs, ingest_graph6_stream
from .graph import Graph, VertexSet, encode_graph6, format_edge_list, parse_edge_list, parse_graph6
from .harness import HARNESSES, run_harness
from .neighborhoods import all_neighborhoods_cyclic, induces_forest, is_independent_set
from .verifier import HypothesisError, compute_bound_report, verify_theorem1

__all__ = ["main", "run_command", "EXIT_CODES"]

EXIT_CODES = {
    "ok": 0,
    "input-error": 1,
    "hypothesis-violation": 2,
    "counterexamples-found": 3,
}


class InputError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _dump(record: dict) -> bytes:
    return json.dumps(record, separators=(", ", ": ")).encode() + b"\n"


def _graph_record(G: Graph) -> dict:
    return {"graph6": encode_graph6(G).decode("ascii"), "n": G.n, "m": G.m}


def _serialize(G: Graph, fmt: str) -> bytes:
    if fmt == "g6":
        return encode_graph6(G) + b"\n"
    if fmt == "edges":
        return format_edge_list(G).encode()
    return _dump({"n": G.n, "m": G.m, "edges": [list(e) for e in G.edges()]})


def _read_graphs(stdin: BinaryIO, fmt: str) -> Iterator[Graph]:
    if fmt == "edges":
        lines = io.TextIOWrapper(stdin, encoding="ascii", errors="replace")
        try:
            yield from parse_edge_list(lines)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        return
    for lineno, line in enumerate(stdin, 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except ValueError as exc:
            raise InputError(f"line {lineno}: {exc}") from None


def _parse_base(spec: str, stdin: BinaryIO) -> Graph:
    if spec == "-":
        graphs = list(_read_graphs(stdin, "g6"))
        if len(graphs) != 1:
            raise InputError(f"expected one base graph on stdin, got {len(graphs)}")
        return graphs[0]
    if spec.startswith("g6:"):
        return parse_graph6(spec[3:])
    return named_graph(spec)


def _cmd_construct(args, stdin, out) -> str:
    if args.family == "k4sub":
        if not args.base:
            raise InputError("k4sub needs --base (e.g. prism:3, complete:4, petersen, g6:<code>, or - for stdin)")
        G, _ = k4_substitution(_parse_base(args.base, stdin))
    else:
        G = named_graph(args.family, args.param)
    out.write(_serialize(G, args.format))
    return "ok"


def _parse_set(text: str | None, G: Graph) -> VertexSet:
    if text is None:
        raise InputError("this property needs --set, e.g. --set 0,2")
    members = [int(x) for x in text.split(",") if x.strip()]
    return VertexSet.of(G, members)


def _cmd_check(args, stdin, out) -> str:
    prop = args.property
    for G in _read_graphs(stdin, args.input_format):
        record = _graph_record(G)
        if prop == "three-connected":
            record["vertex_connectivity"] = vertex_connectivity(G) if G.n else 0
            value = is_k_connected(G, 3)
        elif prop == "nbhd-cycles":
            value = all_neighborhoods_cyclic(G)
        elif prop.startswith("min-degree:"):
            try:
                k = int(prop.partition(":")[2])
            except ValueError:
                raise InputError(f"bad property {prop!r}") from None
            record["min_degree"] = G.min_degree()
            value = G.min_degree() >= k
        elif prop == "independent-set":
            value = is_independent_set(G, _parse_set(args.set, G))
        elif prop == "forest":
            value = induces_forest(G, _parse_set(args.set, G))
        else:
            raise InputError(f"unknown property {prop!r}")
        record["property"] = prop
        record["value"] = value
        out.write(_dump(record))
    return "ok"


def _cmd_cut(args, stdin, out) -> str:
    finder = find_independent_cut if args.kind == "independent" else find_forest_cut
    for G in _read_graphs(stdin, args.input_format):
        record = _graph_record(G)
        cert = finder(G)
        record["kind"] = args.kind
        record["cut"] = None if cert is None else cert.cut.sorted()
        record["components"] = None if cert is None else cert.component_count_after_removal
        out.write(_dump(record))
    return "ok"


def _cmd_verify(args, stdin, out) -> str:
    status = "ok"
    for G in _read_graphs(stdin, args.input_format):
        record = _graph_record(G)
        try:
            report = verify_theorem1(G)
            record["status"] = "ok"
        except HypothesisError as exc:
            report = compute_bound_report(G)
            record["status"] = "hypothesis-violation"
            record["violation"] = exc.hypothesis
            status = "hypothesis-violation"
        record.update(report.to_record())
        out.write(_dump(record))
    return status


def _source(args, stdin):
    if args.source == "native":
        return "native"
    if args.source == "-":
        return stdin
    return open(args.source, "rb")


def _cmd_search(args, stdin, out) -> str:
    source = _source(args, stdin)
    try:
        report = run_harness(args.harness, args.n, source, args.jobs)
    finally:
        if hasattr(source, "close") and source is not stdin:
            source.close()
    out.write(_dump(report.to_record()))
    return "counterexamples-found" if report.counterexamples else "ok"


def _cmd_stats(args, stdin, out) -> str:
    c = EnumerationConstraints(
        args.n,
        connected_only=args.connected,
        min_degree=args.min_degree,
        min_connectivity=args.min_connectivity,
        max_edges=args.max_edges,
        min_edges=args.min_edges,
        require_neighborhood_cycles=args.nbhd_cycles,
    )
    source = _source(args, stdin)
    graphs = enumerate_graphs(c) if source == "native" else ingest_graph6_stream(source, c)
    by_edges = {}
    for G in graphs:
        by_edges[G.m] = by_edges.get(G.m, 0) + 1
    out.write(_dump({
        "constraints": c.to_record(),
        "source": "native" if source == "native" else "stream",
        "count": sum(by_edges.values()),
        "by_edges": {str(m): by_edges[m] for m in sorted(by_edges)},
    }))
    return "ok"


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="nbhdcycles", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("construct", help="emit a named construction")
    p.add_argument("family", choices=["book", "prism", "k4sub", "complete", "cycle", "octahedron", "petersen"])
    p.add_argument("param", nargs="?", type=int, help="pages / cycle length / vertex count")
    p.add_argument("--base", help="cubic base for k4sub: prism:T, complete:4, petersen, g6:CODE or -")
    p.add_argument("--format", choices=["g6", "edges", "json"], default="g6")
    p.set_defaults(func=_cmd_construct)

    def add_input(p):
        p.add_argument("--input-format", choices=["g6", "edges"], default="g6")

    p = sub.add_parser("check", help="test a property of each graph on stdin")
    p.add_argument("--property", required=True,
                   help="three-connected | nbhd-cycles | min-degree:K | independent-set | forest")
    p.add_argument("--set", help="comma-separated vertices for independent-set / forest")
    add_input(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("cut", help="find a minimum independent or forest cut")
    p.add_argument("--kind", choices=["independent", "forest"], required=True)
    add_input(p)
    p.set_defaults(func=_cmd_cut)

    p = sub.add_parser("verify-proof", help="check every step of the 15n/8 bound on each graph")
    add_input(p)
    p.set_defaults(func=_cmd_verify)

    def add_source(p):
        p.add_argument("--source", default="native", help="native, - for stdin, or a graph6 file")

    p = sub.add_parser("search", help="run an exhaustive harness")
    p.add_argument("--harness", choices=sorted(HARNESSES), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: $NBHDCYCLES_JOBS or 1)")
    add_source(p)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("stats", help="count isomorphism classes meeting constraints")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--min-degree", type=int)
    p.add_argument("--min-connectivity", type=int)
    p.add_argument("--max-edges", type=int)
    p.add_argument("--min-edges", type=int)
    p.add_argument("--nbhd-cycles", action="store_true")
    add_source(p)
    p.set_defaults(func=_cmd_stats)
    return parser


def main(argv=None, stdin: BinaryIO | None = None, stdout: BinaryIO | None = None,
         stderr: BinaryIO | None = None) -> int:
    stdin = stdin if stdin is not None else sys.stdin.buffer
    stdout = stdout if stdout is not None else sys.stdout.buffer
    stderr = stderr if stderr is not None else sys.stderr.buffer
    try:
        args = build_parser().parse_args(argv)
        status = args.func(args, stdin, stdout)
    except (InputError, StreamFormatError, ValueError, OSError) as exc:
        stderr.write(f"error: {exc}\n".encode())
        return EXIT_CODES["input-error"]
    finally:
        stdout.flush()
    if status != "ok":
        stderr.write(f"status: {status}\n".encode())
    return EXIT_CODES[status]


def run_command(argv: list[str], stdin: bytes = b"") -> tuple[int, bytes, bytes]:
    """Run the CLI in-process and capture ``(exit code, stdout, stderr)``."""
    out, err = io.BytesIO(), io.BytesIO()
    code = main(argv, io.BytesIO(stdin), out, err)
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())
