"""Linear-time LexDFS+ on chordal graphs, chordality testing, and
linear-time recognition of LexDFS orders and L-trees."""

from __future__ import annotations

from collections import deque
from typing import NamedTuple


from . import _kernels
from .errors import NotChordal, RhoDoesNotEndAtStart
from .graph import Graph, VertexOrder, _check_order
from .lexbfs import canonical_tiebreak, lexbfs_plus
from .ordering import ordering
from .trees import RootedSpanningTree, check_spanning, is_dfs_ltree, l_tree

__all__ = [
    "ChordalityCertificate",
    "ChordalSearch",
    "check_chordal",
    "is_chordal",
    "chordless_cycle",
    "lexdfs_plus_chordal",
    "chordal_lexdfs_search",
    "lexdfs_chordal",
    "verify_lexdfs_order",
    "verify_lexdfs_ltree",
]


class ChordalityCertificate(NamedTuple):
    chordal: bool
    peo: VertexOrder | None
    cycle: list[int] | None


def _peo_violation(graph: Graph, order: VertexOrder) -> tuple[int, int, int] | None:
    """First ``(v, u, w)`` breaking the elimination test on a LexBFS order.

    ``u`` is the latest earlier neighbour of ``v`` and ``w`` another earlier
    neighbour of ``v`` that is not adjacent to ``u``.  ``None`` when the
    reverse of ``order`` is a perfect elimination order.
    """
    pos = order.pos
    adj = graph.adj
    n = graph.n
    # requirements[u]: (v, w) pairs meaning "w must be an earlier neighbour of u"
    requirements: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for v in order.seq:
        pv = pos[v]
        u = -1
        pu = -1
        for w in adj[v]:
            pw = pos[w]
            if pw < pv and pw > pu:
                u, pu = w, pw
        if u == -1:
            continue
        req = requirements[u]
        for w in adj[v]:
            if pos[w] < pu:
                req.append((v, w))
    mark = [-1] * n
    for u in order.seq:
        req = requirements[u]
        if not req:
            continue
        for x in adj[u]:
            mark[x] = u
        for v, w in req:
            if mark[w] != u:
                return v, u, w
    return None


def _induced_path(graph: Graph, src: int, dst: int, blocked: set[int]) -> list[int] | None:
    """Shortest ``src``-``dst`` path avoiding ``blocked``; shortest paths are induced."""
    prev = {src: -1}
    queue = deque([src])
    adj = graph.adj
    while queue:
        x = queue.popleft()
        if x == dst:
            path = []
            while x != -1:
                path.append(x)
                x = prev[x]
            return path[::-1]
        for y in adj[x]:
            if y not in prev and y not in blocked:
                prev[y] = x
                queue.append(y)
    return None


def _cycle_through(graph: Graph, v: int, u: int, w: int) -> list[int] | None:
    blocked = set(graph.adj[v]) - {u, w}
    blocked.add(v)
    path = _induced_path(graph, u, w, blocked)
    if path is None:
        return None
    return [v] + path


def chordless_cycle(graph: Graph, hint: tuple[int, int, int] | None = None) -> list[int] | None:
    """A chordless cycle of length >= 4, or ``None`` if the graph is chordal.

    ``hint`` is a candidate ``(v, u, w)`` with ``u``, ``w`` non-adjacent
    neighbours of ``v``; it is tried first.  Otherwise every such triple is
    tried, which is slow but complete: every hole has a vertex whose two
    hole neighbours are non-adjacent and linked by a path outside its
    closed neighbourhood.
    """
    if hint is not None:
        cyc = _cycle_through(graph, *hint)
        if cyc is not None:
            return cyc
    sets = graph.adjacency_sets()
    for v in range(graph.n):
        nbrs = graph.adj[v]
        for i, u in enumerate(nbrs):
            for w in nbrs[i + 1:]:
                if w not in sets[u]:
                    cyc = _cycle_through(graph, v, u, w)
                    if cyc is not None:
                        return cyc
    return None


def check_chordal(graph: Graph) -> ChordalityCertificate:
    """Chordality test with a certificate either way.

    Runs LexBFS and checks that its reverse is a perfect elimination order
    in O(n + m).  On success the PEO is returned, otherwise a chordless
    cycle.
    """
    order = lexbfs_plus(graph, VertexOrder.identity(graph.n))
    bad = _peo_violation(graph, order)
    if bad is None:
        return ChordalityCertificate(True, order.reversed(), None)
    cycle = chordless_cycle(graph, hint=bad)
    if cycle is None:  # pragma: no cover - would mean the PEO test is wrong
        raise AssertionError("PEO test failed but no chordless cycle exists")
    return ChordalityCertificate(False, None, cycle)


def is_chordal(graph: Graph) -> bool:
    return check_chordal(graph).chordal


def require_chordal(graph: Graph) -> None:
    cert = check_chordal(graph)
    if not cert.chordal:
        raise NotChordal(cert.cycle)


class ChordalSearch(NamedTuple):
    order: VertexOrder
    lexbfs_order: VertexOrder
    tree: RootedSpanningTree


def _check_search_inputs(graph: Graph, start: int, rho: VertexOrder, beta: str, engine: str) -> int:
    start = graph.check_vertex(start)
    _check_order(graph, rho)
    if rho.last != start:
        raise RhoDoesNotEndAtStart(
            f"rho ends with {graph.names[rho.last]!r}, expected {graph.names[start]!r}"
        )
    if beta not in ("bfs", "lexbfs"):
        raise ValueError(f"beta must be 'bfs' or 'lexbfs', got {beta!r}")
    if engine not in ("compiled", "python"):
        raise ValueError(f"engine must be 'compiled' or 'python', got {engine!r}")
    return start


def _compiled_search(graph: Graph, rho: VertexOrder, beta: str, check_chordal: bool):
    """Raw ``(sigma, pi, parent)`` arrays from the compiled pipeline."""
    indptr, indices = graph.csr32()
    sigma, pi, parent, ok = _kernels.chordal_lexdfs(
        indptr, indices, rho.as_array(), beta == "lexbfs", check_chordal
    )
    if not ok:
        raise NotChordal(chordless_cycle(graph, hint=_peo_violation(graph, VertexOrder._trusted(pi))))
    return sigma, pi, parent


def _python_search(graph: Graph, start: int, rho: VertexOrder, beta: str, check_chordal: bool) -> ChordalSearch:
    pi = lexbfs_plus(graph, rho)
    if check_chordal:
        # any LexBFS order certifies chordality, so reuse pi
        bad = _peo_violation(graph, pi)
        if bad is not None:
            raise NotChordal(chordless_cycle(graph, hint=bad))
    tree = l_tree(graph, pi)
    beta_order = pi.reversed() if beta == "lexbfs" else None
    sigma = ordering(graph, tree, start, rho, beta_order, check=False)
    return ChordalSearch(sigma, pi, tree)


def chordal_lexdfs_search(
    graph: Graph,
    start: int,
    rho: VertexOrder,
    *,
    check_chordal: bool = True,
    beta: str = "bfs",
    engine: str = "compiled",
) -> ChordalSearch:
    """:func:`lexdfs_plus_chordal` that also returns the LexBFS+ order and its L-tree."""
    start = _check_search_inputs(graph, start, rho, beta, engine)
    if engine == "python":
        return _python_search(graph, start, rho, beta, check_chordal)
    sigma, pi, parent = _compiled_search(graph, rho, beta, check_chordal)
    return ChordalSearch(
        VertexOrder._trusted(sigma), VertexOrder._trusted(pi), RootedSpanningTree._trusted(start, parent)
    )


def lexdfs_plus_chordal(
    graph: Graph,
    start: int,
    rho: VertexOrder,
    *,
    check_chordal: bool = True,
    beta: str = "bfs",
    engine: str = "compiled",
) -> VertexOrder:
    """The LexDFS+(rho) order of a chordal graph, in O(n + m).

    The L-tree of the LexBFS+(rho) order is also an L-tree of LexDFS on a
    chordal graph; feeding it to :func:`~lexsearch.ordering.ordering` with
    the same ``rho`` gives exactly the LexDFS+(rho) order.

    ``rho`` must end with ``start``.  Chordality is verified first unless
    ``check_chordal=False``; on a non-chordal graph the result would be
    meaningless, so :class:`~lexsearch.errors.NotChordal` is raised with a
    chordless cycle.  ``beta`` selects the processing order of the
    refinement loop: ``"bfs"`` (reverse BFS of the tree) or ``"lexbfs"``
    (reverse of the LexBFS+ order); the output does not depend on it.
    ``engine="python"`` runs the instrumented pure-Python pipeline instead
    of the compiled one; both give the same order.
    """
    start = _check_search_inputs(graph, start, rho, beta, engine)
    if engine == "python":
        return _python_search(graph, start, rho, beta, check_chordal).order
    return VertexOrder._trusted(_compiled_search(graph, rho, beta, check_chordal)[0])


def lexdfs_chordal(graph: Graph, start: int, *, check_chordal: bool = True) -> VertexOrder:
    """A LexDFS order from ``start`` using the identity tie-break with ``start`` last."""
    start = graph.check_vertex(start)
    return lexdfs_plus_chordal(
        graph, start, canonical_tiebreak(graph.n, start), check_chordal=check_chordal
    )


def verify_lexdfs_order(graph: Graph, order: VertexOrder, *, check_chordal: bool = True) -> bool:
    """Whether ``order`` is a LexDFS order of the chordal ``graph``.

    An order is a LexDFS order iff LexDFS+ on its own reverse returns it.
    """
    _check_order(graph, order)
    if check_chordal:
        require_chordal(graph)
    rerun = lexdfs_plus_chordal(graph, order.first, order.reversed(), check_chordal=False)
    return rerun == order


def verify_lexdfs_ltree(graph: Graph, tree: RootedSpanningTree, *, check_chordal: bool = True) -> bool:
    """Whether ``tree`` is an L-tree of LexDFS on the chordal ``graph``.

    Rejects non-DFS trees outright; otherwise builds the order the tree
    induces and checks that order.
    """
    check_spanning(graph, tree)
    if check_chordal:
        require_chordal(graph)
    if not is_dfs_ltree(graph, tree):
        return False
    rho = canonical_tiebreak(graph.n, tree.root)
    sigma = ordering(graph, tree, tree.root, rho, check=False)
    return verify_lexdfs_order(graph, sigma, check_chordal=False)
