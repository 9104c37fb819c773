"""Turn a DFS L-tree into a LexDFS order.

A leaf-to-root partition refinement over the tree produces a tie-break
order ``tau``; a DFS+(tau) over the tree then yields the search order.
The result is a LexDFS order of the graph exactly when the tree is an
L-tree of LexDFS.
"""

from __future__ import annotations

from typing import Callable

from .errors import InvalidBeta, NotDfsLtree, RhoDoesNotEndAtStart
from .graph import Graph, VertexOrder, _bfs, _check_order
from .partition import OrderedPartition
from .trees import RootedSpanningTree, check_spanning, is_dfs_ltree, tree_dfs_plus

__all__ = ["ordering", "ordering_tiebreak", "tree_beta"]


def tree_beta(tree: RootedSpanningTree) -> VertexOrder:
    """Reverse of a BFS order of the tree from its root."""
    return VertexOrder(_bfs(tree.children, tree.root)[::-1])


def _validate_beta(tree: RootedSpanningTree, beta: VertexOrder) -> None:
    if len(beta) != tree.n:
        raise InvalidBeta("beta does not cover the vertex set")
    pos = beta.pos
    for v, p in enumerate(tree.parent):
        if p != -1 and pos[v] > pos[p]:
            raise InvalidBeta(f"vertex {v} is placed right of its parent {p}")


def _check_inputs(graph, tree, start, rho, check):
    start = graph.check_vertex(start)
    _check_order(graph, rho)
    if rho.last != start:
        raise RhoDoesNotEndAtStart(
            f"rho ends with {graph.names[rho.last]!r}, expected {graph.names[start]!r}"
        )
    if tree.root != start:
        raise NotDfsLtree(f"tree is rooted at {graph.names[tree.root]!r}, not at the start vertex")
    if check:
        check_spanning(graph, tree)
        if not is_dfs_ltree(graph, tree):
            raise NotDfsLtree("tree is not an L-tree of any DFS of the graph")
    return start


def ordering_tiebreak(
    graph: Graph,
    tree: RootedSpanningTree,
    start: int,
    rho: VertexOrder,
    beta_override: VertexOrder | None = None,
    *,
    check: bool = True,
    trace: Callable[[int, OrderedPartition], None] | None = None,
    stats: dict | None = None,
) -> VertexOrder:
    """The tie-break order ``tau`` fed to the final tree DFS+.

    ``trace(v, partition)`` fires after the refinement for each vertex of
    beta.  ``stats["refine_work"]`` counts vertices moved by refinement.
    """
    start = _check_inputs(graph, tree, start, rho, check)
    if beta_override is None:
        beta = tree_beta(tree)
    else:
        _validate_beta(tree, beta_override)
        beta = beta_override

    part = OrderedPartition(graph.n, beta.seq)
    # left[v]: neighbours of v that precede it in beta, in beta order
    left: list[list[int]] = [[] for _ in range(graph.n)]
    bpos = beta.pos
    adj = graph.adj
    for u in beta.seq:
        pu = bpos[u]
        for w in adj[u]:
            if bpos[w] > pu:
                left[w].append(u)
    work = 0
    refine = part.refine
    for v in beta.seq:
        nbrs = left[v]
        if nbrs:
            refine(nbrs, presorted=True)
            work += len(nbrs)
        if trace is not None:
            trace(v, part)

    for v in reversed(rho.seq):
        part.move_to_back(v)
    part.remove(start)
    part.prepend_singleton(start)
    if stats is not None:
        stats["refine_work"] = work
    return VertexOrder(part.flatten()[::-1])


def ordering(
    graph: Graph,
    tree: RootedSpanningTree,
    start: int,
    rho: VertexOrder,
    beta_override: VertexOrder | None = None,
    *,
    check: bool = True,
    trace: Callable[[int, OrderedPartition], None] | None = None,
    stats: dict | None = None,
) -> VertexOrder:
    """Search order starting at ``start`` whose L-tree is ``tree``.

    Parameters
    ----------
    graph, tree
        ``tree`` must be a DFS L-tree of ``graph`` rooted at ``start``
        (verified when ``check`` is true).
    rho
        Any vertex order ending with ``start``; it decides ties between
        siblings that nothing else separates.
    beta_override
        Processing order for the refinement loop.  Any order placing each
        vertex left of all its tree ancestors is valid; the default is the
        reverse of a BFS of the tree.

    Returns
    -------
    VertexOrder
        A DFS order of ``graph`` with L-tree ``tree``.  It is a LexDFS order
        if and only if ``tree`` is an L-tree of LexDFS.  O(n + m).
    """
    tau = ordering_tiebreak(
        graph, tree, start, rho, beta_override, check=check, trace=trace, stats=stats
    )
    return tree_dfs_plus(tree, tau)
