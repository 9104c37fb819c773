"""Text formats: edge lists, orders, and rooted trees.

Edge list: one ``u v`` pair per line, ``#`` comments and blank lines
ignored.  A line with a single token declares a vertex without listing an
edge, which is the only way to write the one-vertex graph.

Order: tokens separated by any whitespace.

Tree: a ``root r`` line, then one ``child parent`` line per non-root vertex.
"""

from __future__ import annotations

from typing import Iterable

from .errors import NotASpanningTree, ParseError, StartNotInGraph
from .graph import Graph, VertexOrder, build_graph
from .trees import RootedSpanningTree

__all__ = [
    "parse_edge_list",
    "format_edge_list",
    "parse_order",
    "format_order",
    "parse_tree",
    "format_tree",
]


def _content_lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped.split()


def parse_edge_list(text: str) -> Graph:
    edges = []
    isolated = []
    for lineno, toks in _content_lines(text):
        if len(toks) == 2:
            edges.append((toks[0], toks[1]))
        elif len(toks) == 1:
            isolated.append(toks[0])
        else:
            raise ParseError(f"line {lineno}: expected 'u v', got {' '.join(toks)!r}")
    return build_graph(edges, isolated)


def format_edge_list(graph: Graph) -> str:
    names = graph.names
    if graph.n == 1:
        return f"{names[0]}\n"
    return "".join(f"{names[u]} {names[v]}\n" for u, v in graph.edges())


def parse_order(graph: Graph, text: str) -> VertexOrder:
    tokens = [t for line in text.splitlines() if not line.lstrip().startswith("#") for t in line.split()]
    return VertexOrder.from_tokens(graph, tokens)


def format_order(graph: Graph, order: VertexOrder) -> str:
    return " ".join(str(t) for t in order.tokens(graph))


def parse_tree(graph: Graph, text: str) -> RootedSpanningTree:
    root = None
    parent = [-2] * graph.n
    for lineno, toks in _content_lines(text):
        if len(toks) != 2:
            raise ParseError(f"line {lineno}: expected two tokens, got {' '.join(toks)!r}")
        a, b = toks
        try:
            if a == "root":
                if root is not None:
                    raise ParseError(f"line {lineno}: second root line")
                root = graph.vertex(b)
                continue
            child, par = graph.vertex(a), graph.vertex(b)
        except StartNotInGraph as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        if parent[child] != -2:
            raise ParseError(f"line {lineno}: vertex {a!r} listed twice")
        parent[child] = par
    if root is None:
        raise ParseError("tree file has no 'root' line")
    if parent[root] != -2:
        raise ParseError(f"root {graph.names[root]!r} is also listed as a child")
    parent[root] = -1
    missing = [graph.names[v] for v, p in enumerate(parent) if p == -2]
    if missing:
        raise NotASpanningTree(f"tree misses vertices {missing}")
    return RootedSpanningTree(root, parent)


def format_tree(graph: Graph, tree: RootedSpanningTree) -> str:
    names = graph.names
    lines = [f"root {names[tree.root]}"]
    rows = sorted(
        ((str(names[v]), str(names[p])) for v, p in enumerate(tree.parent) if p != -1),
        key=lambda row: row[0],
    )
    lines.extend(f"{c} {p}" for c, p in rows)
    return "\n".join(lines) + "\n"
