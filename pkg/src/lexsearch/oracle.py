"""Slow reference implementations used as ground truth in the test suite.

Everything here favours being obviously correct over being fast: labels
are explicit integer lists, the maximum is found by a full rescan, and the
four-point checkers loop over all triples.
"""

from __future__ import annotations

from typing import Iterator

from .errors import GraphTooLarge
from .graph import Graph, VertexOrder, _check_order

__all__ = [
    "LabelState",
    "naive_lexdfs_plus",
    "naive_lexbfs_plus",
    "check_dfs_order",
    "check_lexdfs_order",
    "enumerate_lexdfs_orders",
    "enumerate_lexbfs_orders",
    "verdict_changing_swaps",
]

DFS = "dfs"
BFS = "bfs"


class LabelState:
    """Per-vertex labels for a lexicographic search in progress.

    In ``"dfs"`` mode visit indices are prepended (so labels are descending
    sequences); in ``"bfs"`` mode ``n - i`` is appended.
    """

    def __init__(self, graph: Graph, start: int, mode: str):
        if mode not in (DFS, BFS):
            raise ValueError(f"unknown mode {mode!r}")
        self.graph = graph
        self.mode = mode
        self.labels: list[list[int]] = [[] for _ in range(graph.n)]
        self.labels[start] = [0] if mode == DFS else [graph.n]
        self.numbered = [False] * graph.n
        self.step = 0

    def unnumbered(self) -> list[int]:
        return [v for v in range(self.graph.n) if not self.numbered[v]]

    def candidates(self) -> list[int]:
        """Unnumbered vertices whose label is lexicographically largest."""
        rest = self.unnumbered()
        best = max(self.labels[v] for v in rest)
        return [v for v in rest if self.labels[v] == best]

    def visit(self, v: int) -> None:
        self.step += 1
        i = self.step
        self.numbered[v] = True
        n = self.graph.n
        for w in self.graph.adj[v]:
            if not self.numbered[w]:
                if self.mode == DFS:
                    self.labels[w].insert(0, i)
                else:
                    self.labels[w].append(n - i)

    def copy(self) -> "LabelState":
        other = LabelState.__new__(LabelState)
        other.graph = self.graph
        other.mode = self.mode
        other.labels = [list(lab) for lab in self.labels]
        other.numbered = list(self.numbered)
        other.step = self.step
        return other


def _naive_plus(graph: Graph, tiebreak: VertexOrder, mode: str) -> VertexOrder:
    _check_order(graph, tiebreak)
    state = LabelState(graph, tiebreak.last, mode)
    pos = tiebreak.pos
    out = []
    for _ in range(graph.n):
        v = max(state.candidates(), key=pos.__getitem__)
        out.append(v)
        state.visit(v)
    return VertexOrder(out)


def naive_lexdfs_plus(graph: Graph, tiebreak: VertexOrder) -> VertexOrder:
    """LexDFS+(tiebreak) by direct label simulation, starting at ``tiebreak``'s last vertex."""
    return _naive_plus(graph, tiebreak, DFS)


def naive_lexbfs_plus(graph: Graph, tiebreak: VertexOrder) -> VertexOrder:
    """LexBFS+(tiebreak) by direct label simulation, starting at ``tiebreak``'s last vertex."""
    return _naive_plus(graph, tiebreak, BFS)


def _four_point(graph: Graph, order: VertexOrder, lex: bool) -> bool:
    _check_order(graph, order)
    adj = graph.adjacency_sets()
    seq = order.seq
    n = len(seq)
    for ia in range(n):
        a = seq[ia]
        na = adj[a]
        for ic in range(ia + 2, n):
            c = seq[ic]
            if c not in na:
                continue
            nc = adj[c]
            for ib in range(ia + 1, ic):
                b = seq[ib]
                if b in na:
                    continue
                nb = adj[b]
                if not any(
                    seq[idx] in nb and not (lex and seq[idx] in nc) for idx in range(ia + 1, ib)
                ):
                    return False
    return True


def check_dfs_order(graph: Graph, order: VertexOrder) -> bool:
    """Four-point test for DFS orders.

    For every ``a < b < c`` with ``ac`` an edge and ``ab`` not, some ``d``
    strictly between ``a`` and ``b`` must be adjacent to ``b``.
    """
    return _four_point(graph, order, lex=False)


def check_lexdfs_order(graph: Graph, order: VertexOrder) -> bool:
    """As :func:`check_dfs_order`, but the witness ``d`` must also miss ``c``."""
    return _four_point(graph, order, lex=True)


def _enumerate(graph: Graph, start: int, mode: str, max_n: int) -> set[VertexOrder]:
    if graph.n > max_n:
        raise GraphTooLarge(f"enumeration limited to n <= {max_n}, got n = {graph.n}")
    start = graph.check_vertex(start)
    found: set[VertexOrder] = set()

    def walk(state: LabelState, prefix: list[int]) -> None:
        if len(prefix) == graph.n:
            found.add(VertexOrder(prefix))
            return
        choices = state.candidates()
        for v in choices:
            nxt = state.copy() if len(choices) > 1 else state
            nxt.visit(v)
            walk(nxt, prefix + [v])

    walk(LabelState(graph, start, mode), [])
    return found


def enumerate_lexdfs_orders(graph: Graph, start: int, max_n: int = 10) -> set[VertexOrder]:
    """Every LexDFS order of ``graph`` starting at ``start``, by branching on all ties."""
    return _enumerate(graph, start, DFS, max_n)


def enumerate_lexbfs_orders(graph: Graph, start: int, max_n: int = 10) -> set[VertexOrder]:
    """Every LexBFS order of ``graph`` starting at ``start``, by branching on all ties."""
    return _enumerate(graph, start, BFS, max_n)


def verdict_changing_swaps(
    graph: Graph, order: VertexOrder, checker=check_lexdfs_order
) -> Iterator[VertexOrder]:
    """Orders obtained by swapping two adjacent entries whose verdict differs from ``order``'s."""
    base = checker(graph, order)
    seq = list(order.seq)
    for i in range(len(seq) - 1):
        swapped = seq[:]
        swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
        cand = VertexOrder(swapped)
        if checker(graph, cand) != base:
            yield cand
