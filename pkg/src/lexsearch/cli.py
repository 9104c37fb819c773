"""Command-line front end.

Each subcommand reads text files, calls one library operation and prints
the result.  Exit codes: 0 accept, 1 reject or not chordal, 2 usage,
parse or contract error (message on stderr).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .bench import format_table, growth_factors, linearity_verdict, run_bench
from .chordal import (
    chordal_lexdfs_search,
    check_chordal,
    verify_lexdfs_ltree,
    verify_lexdfs_order,
)
from .errors import LexSearchError, NotChordal
from .graph import Graph
from .io import format_edge_list, format_order, format_tree, parse_edge_list, parse_order, parse_tree
from .lexbfs import canonical_tiebreak, lexbfs, lexbfs_plus
from .oracle import (
    check_lexdfs_order,
    enumerate_lexbfs_orders,
    enumerate_lexdfs_orders,
    naive_lexbfs_plus,
    naive_lexdfs_plus,
)
from .testkit import gen_chordal
from .trees import f_tree, l_tree

# optional CPU to pin the bench process to, e.g. LEXSEARCH_BENCH_CPU=0
BENCH_CPU_ENV = "LEXSEARCH_BENCH_CPU"


class _UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(args) -> Graph:
    # kept on args so a NotChordal witness can be printed with tokens
    args.loaded_graph = parse_edge_list(_read(args.graph))
    return args.loaded_graph


def _start_and_rho(graph: Graph, start_tok: str, tiebreak_path: str | None):
    start = graph.vertex(start_tok)
    if tiebreak_path is None:
        return start, None
    rho = parse_order(graph, _read(tiebreak_path))
    if rho.last != start:
        raise _UsageError(f"tie-break order must end with the start vertex {start_tok!r}")
    return start, rho


def _print_cycle(graph: Graph, cycle) -> None:
    print("not-chordal")
    print("cycle: " + " ".join(str(graph.names[v]) for v in cycle))


def cmd_lexbfs(args) -> int:
    g = _load_graph(args)
    start, rho = _start_and_rho(g, args.start, args.tiebreak)
    order = lexbfs(g, start) if rho is None else lexbfs_plus(g, rho)
    print(format_order(g, order))
    return 0


def cmd_lexdfs(args) -> int:
    g = _load_graph(args)
    start, rho = _start_and_rho(g, args.start, args.tiebreak)
    if rho is None:
        rho = canonical_tiebreak(g.n, start)
    result = chordal_lexdfs_search(g, start, rho)
    print(format_order(g, result.order))
    if args.emit_tree:
        try:
            Path(args.emit_tree).write_text(format_tree(g, result.tree))
        except OSError as exc:
            raise _UsageError(f"cannot write {args.emit_tree}: {exc.strerror}") from None
    return 0


def _verdict(label: str, ok: bool) -> int:
    print(f"{label}: {'yes' if ok else 'no'}")
    return 0 if ok else 1


def cmd_verify_order(args) -> int:
    g = _load_graph(args)
    order = parse_order(g, _read(args.order))
    if args.oracle:
        ok = check_lexdfs_order(g, order)
    else:
        ok = verify_lexdfs_order(g, order)
    return _verdict("lexdfs-order", ok)


def cmd_verify_tree(args) -> int:
    g = _load_graph(args)
    tree = parse_tree(g, _read(args.tree))
    return _verdict("lexdfs-ltree", verify_lexdfs_ltree(g, tree))


def cmd_tree(args) -> int:
    g = _load_graph(args)
    order = parse_order(g, _read(args.order))
    build = l_tree if args.kind == "l" else f_tree
    sys.stdout.write(format_tree(g, build(g, order)))
    return 0


def cmd_gen(args) -> int:
    sys.stdout.write(format_edge_list(gen_chordal(args.n, args.k, args.seed)))
    return 0


def cmd_check_chordal(args) -> int:
    g = _load_graph(args)
    cert = check_chordal(g)
    if cert.chordal:
        print("chordal: yes")
        print("peo: " + format_order(g, cert.peo))
        return 0
    print("chordal: no")
    print("cycle: " + " ".join(str(g.names[v]) for v in cert.cycle))
    return 1


def cmd_oracle(args) -> int:
    g = _load_graph(args)
    if args.oracle_cmd == "verify-order":
        order = parse_order(g, _read(args.order))
        return _verdict("lexdfs-order", check_lexdfs_order(g, order))
    start, rho = _start_and_rho(g, args.start, getattr(args, "tiebreak", None))
    if args.oracle_cmd == "enumerate":
        enum = enumerate_lexdfs_orders if args.search == "lexdfs" else enumerate_lexbfs_orders
        lines = sorted(format_order(g, o) for o in enum(g, start, max_n=args.max_n))
        for line in lines:
            print(line)
        return 0
    if rho is None:
        rho = canonical_tiebreak(g.n, start)
    naive = naive_lexdfs_plus if args.oracle_cmd == "lexdfs" else naive_lexbfs_plus
    print(format_order(g, naive(g, rho)))
    return 0


def _sizes(text: str) -> list[int]:
    try:
        sizes = [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None
    if not sizes or any(s < 1 for s in sizes):
        raise argparse.ArgumentTypeError("sizes must be positive integers")
    return sizes


def cmd_bench(args) -> int:
    cpu = os.environ.get(BENCH_CPU_ENV)
    if cpu and hasattr(os, "sched_setaffinity"):
        try:
            os.sched_setaffinity(0, {int(cpu)})
        except (ValueError, OSError) as exc:
            print(f"warning: cannot pin to CPU {cpu}: {exc}", file=sys.stderr)
    rows = run_bench(args.k, args.sizes, args.seed, repeats=args.repeats, naive_max_n=args.naive_max_n)
    print(format_table(rows))
    for sg, tg in growth_factors(rows):
        print(f"growth: size x{sg:.2f} time x{tg:.2f}")
    ok = linearity_verdict(rows)
    print(f"linear: {'yes' if ok else 'no'}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lexsearch", description="Lexicographic graph searches.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("graph", help="edge-list file")
        sp.set_defaults(func=fn)
        return sp

    sp = graph_cmd("lexbfs", cmd_lexbfs, "LexBFS order (LexBFS+ with --tiebreak)")
    sp.add_argument("--start", required=True)
    sp.add_argument("--tiebreak", help="order file ending with the start vertex")

    sp = graph_cmd("lexdfs", cmd_lexdfs, "LexDFS order of a chordal graph in linear time")
    sp.add_argument("--start", required=True)
    sp.add_argument("--tiebreak", help="order file ending with the start vertex")
    sp.add_argument("--emit-tree", help="write the L-tree of the result to this file")

    sp = graph_cmd("verify-order", cmd_verify_order, "is the order a LexDFS order?")
    sp.add_argument("order")
    sp.add_argument("--oracle", action="store_true", help="use the four-point check; works on any graph")

    sp = graph_cmd("verify-tree", cmd_verify_tree, "is the tree an L-tree of LexDFS?")
    sp.add_argument("tree")

    sp = graph_cmd("tree", cmd_tree, "L-tree or F-tree of a search order")
    sp.add_argument("order")
    sp.add_argument("--kind", choices=("l", "f"), required=True)

    sp = sub.add_parser("gen", help="random connected chordal graph")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.set_defaults(func=cmd_gen)

    graph_cmd("check-chordal", cmd_check_chordal, "chordality with a PEO or a chordless cycle")

    sp = sub.add_parser("oracle", help="slow reference implementations")
    osub = sp.add_subparsers(dest="oracle_cmd", required=True)
    for name in ("lexdfs", "lexbfs"):
        op = osub.add_parser(name, help=f"naive {name.upper()}+")
        op.add_argument("graph")
        op.add_argument("--start", required=True)
        op.add_argument("--tiebreak")
        op.set_defaults(func=cmd_oracle)
    op = osub.add_parser("verify-order", help="four-point LexDFS check")
    op.add_argument("graph")
    op.add_argument("order")
    op.set_defaults(func=cmd_oracle)
    op = osub.add_parser("enumerate", help="all LexDFS or LexBFS orders from a start vertex")
    op.add_argument("graph")
    op.add_argument("--start", required=True)
    op.add_argument("--search", choices=("lexdfs", "lexbfs"), default="lexdfs")
    op.add_argument("--max-n", type=int, default=10)
    op.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("bench", help="doubling experiment for the linear-time LexDFS")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--sizes", type=_sizes, required=True, help="comma-separated vertex counts")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--repeats", type=int, default=5)
    sp.add_argument("--naive-max-n", type=int, default=2048)
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotChordal as exc:
        _print_cycle(args.loaded_graph, exc.cycle)
        return 1
    except (LexSearchError, _UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
