"""Linear-time LexBFS and LexBFS+ by partition refinement."""

from __future__ import annotations

from typing import Callable

from .graph import Graph, VertexOrder, _check_order, sort_adjacency_desc
from .partition import OrderedPartition

__all__ = ["lexbfs_plus", "lexbfs", "canonical_tiebreak"]

Trace = Callable[[int, OrderedPartition], None]


def canonical_tiebreak(n: int, start: int) -> VertexOrder:
    """Identity id order with ``start`` moved to the last position."""
    return VertexOrder([v for v in range(n) if v != start] + [start])


def lexbfs_plus(
    graph: Graph,
    tiebreak: VertexOrder,
    *,
    trace: Trace | None = None,
    stats: dict | None = None,
) -> VertexOrder:
    """The LexBFS+(tiebreak) order of ``graph``.

    The search starts at the last vertex of ``tiebreak``.  Among the
    vertices with lexicographically largest label, the one rightmost in
    ``tiebreak`` is taken next.

    The partition starts as one class sorted by descending tie-break
    position, so the front of the first unvisited class is always the
    vertex to visit.  Each pivot pulls its unvisited neighbours to the front
    of their classes; adjacency lists are pre-sorted the same way, which
    keeps every class sorted and each refinement O(deg).

    ``trace(pivot, partition)`` is called after every pivot step, with the
    visited prefix still present as leading singleton classes.  If ``stats``
    is a dict, ``stats["moves"]`` receives the number of vertex moves made
    by the partition.
    """
    _check_order(graph, tiebreak)
    n = graph.n
    part = OrderedPartition(n, tiebreak.seq[::-1])
    adj = sort_adjacency_desc(graph.adj, tiebreak)
    visited = [False] * n
    out = []
    cls = part.cls
    cnext = part.cnext
    c = part.first
    for _ in range(n):
        v = part.split_front(c)
        visited[v] = True
        out.append(v)
        part.refine([w for w in adj[v] if not visited[w]], presorted=True)
        if trace is not None:
            trace(v, part)
        c = cnext[cls[v]]
    if stats is not None:
        stats["moves"] = part.moves
    return VertexOrder(out)


def lexbfs(graph: Graph, start: int) -> VertexOrder:
    """A LexBFS order from ``start``, fixed by :func:`canonical_tiebreak`."""
    start = graph.check_vertex(start)
    return lexbfs_plus(graph, canonical_tiebreak(graph.n, start))
