"""Command-line surface: check, enumerate, verify, gen, planar-cut, lp, audit.

Exit codes: 0 for success with no counterexamples, 1 when a verification
run flags counterexamples, 2 for usage or input errors.  Output is plain
line-oriented text and identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from fractions import Fraction

from . import constructions, cuts, lp, planar, verify
from .errors import ForestCutError
from .graph import (
    Graph,
    iter_bits,
    parse_edge_list,
    parse_graph6,
    vertex_connectivity_at_least,
    write_edge_list,
    write_graph6,
)

_THRESHOLD_RE = re.compile(
    r"^\s*([+-]?\d+(?:/\d+)?)\s*\*?\s*n\s*(?:([+-])\s*(\d+(?:/\d+)?))?\s*$"
)


def parse_threshold(text: str) -> tuple[Fraction, Fraction]:
    """Parse a density expression like ``11/5n-18/5`` into (slope, offset)."""
    m = _THRESHOLD_RE.match(text)
    if not m:
        raise ValueError(f"bad threshold expression {text!r}; expected a/b*n-c/d")
    slope = Fraction(m.group(1))
    offset = Fraction(0)
    if m.group(2):
        offset = Fraction(m.group(3))
        if m.group(2) == "-":
            offset = -offset
    return slope, offset


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("FORESTCUT_WORKERS", "1")))
    except ValueError:
        return 1


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load_graph(path: str, fmt: str) -> Graph:
    text = _read_text(path)
    if fmt == "graph6":
        first = next((ln for ln in text.splitlines() if ln.strip()), "")
        return parse_graph6(first)
    return parse_edge_list(text)


def _emit_graph(g: Graph, fmt: str) -> None:
    if fmt == "graph6":
        print(write_graph6(g))
    else:
        print(write_edge_list(g), end="")


def _print_witness(w: cuts.CutWitness | None) -> None:
    if w is None:
        print("NONE")
        return
    print("witness", *w.vertices())
    print("kind", w.kind)
    print("separates", w.rep_a, w.rep_b)


def _cmd_check(args: argparse.Namespace) -> int:
    g = _load_graph(args.input, args.format)
    if args.kind == "forest":
        finder = cuts.find_forest_cut_exhaustive if args.exhaustive else cuts.find_forest_cut
        witness = finder(g)
    elif args.avoid is not None:
        witness = cuts.find_independent_cut_avoiding(g, args.avoid)
    else:
        witness = cuts.find_independent_cut(g)
    _print_witness(witness)
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    bound = parse_threshold(args.max_edges_lt) if args.max_edges_lt else None
    for g in verify.enumerate_connected_graphs(args.n):
        if args.min_connectivity and not (
            g.order > args.min_connectivity
            and vertex_connectivity_at_least(g, args.min_connectivity)
        ):
            continue
        if bound is not None:
            slope, offset = bound
            if Fraction(g.size) >= slope * g.order + offset:
                continue
        _emit_graph(g, args.format)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.builtin_n is not None:
        corpus = list(verify.enumerate_connected_graphs(args.builtin_n))
        description = f"builtin-n{args.builtin_n}"
        report = verify.run_check(args.claim, corpus, description, args.workers)
    else:
        source = verify.ingest_graph6(args.input)
        report = verify.run_check(args.claim, source, workers=args.workers)
    print(report.format(), end="")
    return 1 if report.counterexamples else 0


def _parse_clique(text: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in text.split(","))


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "stacked":
        tri = planar.random_stacked_triangulation(args.n, args.seed)
        if args.format == "rot":
            print(planar.write_rotation_system(tri.embedding), end="")
        else:
            _emit_graph(tri.graph, args.format)
        return 0
    if args.format == "rot":
        raise ValueError("rotation output is only available for --family stacked")
    if args.family == "fixture":
        g = constructions.fixture(args.name)
    elif args.family == "gk":
        g = constructions.conjecture2_family(args.k)
    elif args.family == "band":
        g = constructions.k3_band_cycle(args.n, args.c)
    elif args.family == "cdu":
        g = constructions.cycle_diagonals_universal(args.k)
    else:
        spec = constructions.GlueSpec(_parse_clique(args.clique_a), _parse_clique(args.clique_b))
        g = constructions.clique_glue(
            constructions.fixture(args.a), constructions.fixture(args.b), spec
        )
    _emit_graph(g, args.format)
    return 0


def _cmd_planar_cut(args: argparse.Namespace) -> int:
    system = planar.parse_rotation_system(_read_text(args.input))
    u, v = (int(tok) for tok in args.edge.split(","))
    outer = planar.face_containing_edge(system, u, v)
    tri = planar.PlaneTriangulation(system, outer)
    cut = planar.prop1_forest_cut(tri, (u, v))
    print("cut", *iter_bits(cut))
    return 0


def _cmd_lp(args: argparse.Namespace) -> int:
    point = lp.certificate_dual_point(args.n)
    report = lp.check_feasible(lp.build_dual(args.n), point.assignment())
    for row in report.rows:
        print(row.row_id, row.relation, row.lhs, row.rhs, row.slack)
    if not report.feasible:
        print("INFEASIBLE")
        return 1
    print("objective-bound", lp.weak_duality_bound(args.n, point))
    if args.solve:
        print("primal-optimum", lp.solve_primal_exact(args.n))
    return 0


def _cmd_audit(args: argparse.Namespace) -> int:
    g = _load_graph(args.input, args.format)
    record = verify.audit_claim_inequalities(g)
    for name, value in vars(record).items():
        print(name, "holds" if value else "FAILS")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="forestcut")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="find a forest or independent cut in one graph")
    p.add_argument("--input", default="-", help="graph file, or - for stdin")
    p.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    p.add_argument("--kind", choices=("forest", "independent"), default="forest")
    p.add_argument("--avoid", type=int, default=None, help="vertex the independent cut must avoid")
    p.add_argument("--exhaustive", action="store_true", help="use the brute-force oracle")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("enumerate", help="stream built-in connected graphs with filters")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-connectivity", type=int, default=0)
    p.add_argument("--max-edges-lt", default=None, metavar="EXPR",
                   help="keep graphs with m < slope*n+offset, e.g. 11/5n-18/5")
    p.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="scan a corpus for counterexamples to a claim")
    p.add_argument("--claim", choices=verify.CLAIM_NAMES, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--builtin-n", type=int, default=None)
    group.add_argument("--input", default=None, help="graph6 corpus file")
    p.add_argument("--workers", type=int, default=_default_workers())
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="emit one of the named constructions")
    p.add_argument(
        "--family",
        choices=("fixture", "gk", "band", "cdu", "glue", "stacked"),
        required=True,
    )
    p.add_argument("--name", default=None, help="fixture name")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--c", type=int, default=None)
    p.add_argument("--seed", type=int, default=0, help="seed for --family stacked")
    p.add_argument("--a", default=None, help="glue operand fixture")
    p.add_argument("--b", default=None, help="glue operand fixture")
    p.add_argument("--clique-a", default=None, help="comma-separated clique in operand a")
    p.add_argument("--clique-b", default=None, help="comma-separated clique in operand b")
    p.add_argument("--format", choices=("graph6", "edges", "rot"), default="graph6")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("planar-cut", help="run the triangulation forest-cut construction")
    p.add_argument("--input", required=True, help="rotation system file")
    p.add_argument("--edge", required=True, metavar="U,V")
    p.set_defaults(func=_cmd_planar_cut)

    p = sub.add_parser("lp", help="print the dual certificate report for a given n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--solve", action="store_true", help="also solve the primal exactly")
    p.set_defaults(func=_cmd_lp)

    p = sub.add_parser("audit", help="evaluate the counting inequalities on one graph")
    p.add_argument("--input", default="-")
    p.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    p.set_defaults(func=_cmd_audit)
    return parser


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ForestCutError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
