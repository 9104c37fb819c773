"""Rooted spanning trees: construction from orders, DFS L-tree recognition,
and tree-restricted DFS+."""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, VertexOrder, _check_order, _dfs_plus
from .errors import InvalidOrder, NotASearchOrder, NotASpanningTree

__all__ = [
    "RootedSpanningTree",
    "AncestorIndex",
    "l_tree",
    "f_tree",
    "is_dfs_ltree",
    "tree_dfs_plus",
    "tree_equal",
]


class RootedSpanningTree:
    """Parent array plus designated root; ``parent[root] == -1``."""

    __slots__ = ("root", "parent", "n", "_children")

    def __init__(self, root: int, parent: Sequence[int]):
        parent = tuple(int(p) for p in parent)
        n = len(parent)
        if not 0 <= root < n:
            raise NotASpanningTree(f"root {root} out of range")
        if parent[root] != -1:
            raise NotASpanningTree("root must have parent -1")
        children: list[list[int]] = [[] for _ in range(n)]
        for v, p in enumerate(parent):
            if v == root:
                continue
            if not 0 <= p < n or p == v:
                raise NotASpanningTree(f"vertex {v} has invalid parent {p}")
            children[p].append(v)
        # reachability from the root rules out cycles and extra roots
        seen = 1
        stack = [root]
        while stack:
            v = stack.pop()
            seen += len(children[v])
            stack.extend(children[v])
        if seen != n:
            raise NotASpanningTree("parent relation has a cycle or does not span all vertices")
        self.root = root
        self.parent = parent
        self.n = n
        self._children = tuple(tuple(c) for c in children)

    @classmethod
    def _trusted(cls, root: int, parent) -> "RootedSpanningTree":
        """Wrap a parent array known to form a spanning tree, skipping the checks."""
        self = cls.__new__(cls)
        self.root = root
        self.parent = tuple(parent.tolist())
        self.n = len(self.parent)
        self._children = None
        return self

    @property
    def children(self) -> tuple[tuple[int, ...], ...]:
        if self._children is None:
            kids: list[list[int]] = [[] for _ in range(self.n)]
            for v, p in enumerate(self.parent):
                if p != -1:
                    kids[p].append(v)
            self._children = tuple(tuple(c) for c in kids)
        return self._children

    def edges(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset((v, p)) for v, p in enumerate(self.parent) if p != -1)

    def __eq__(self, other):
        if not isinstance(other, RootedSpanningTree):
            return NotImplemented
        return self.root == other.root and self.parent == other.parent

    def __hash__(self):
        return hash((self.root, self.parent))

    def __repr__(self):
        return f"RootedSpanningTree(root={self.root}, parent={list(self.parent)})"


class AncestorIndex:
    """Euler-tour entry/exit stamps for O(1) ancestor queries."""

    __slots__ = ("entry", "exit")

    def __init__(self, tree: RootedSpanningTree):
        n = tree.n
        entry = [0] * n
        exit_ = [0] * n
        kids = tree.children
        clock = 0
        stack = [(tree.root, 0)]
        entry[tree.root] = clock
        clock += 1
        while stack:
            v, i = stack[-1]
            if i < len(kids[v]):
                stack[-1] = (v, i + 1)
                w = kids[v][i]
                entry[w] = clock
                clock += 1
                stack.append((w, 0))
            else:
                stack.pop()
                exit_[v] = clock
                clock += 1
        self.entry = entry
        self.exit = exit_

    def is_ancestor(self, u: int, v: int) -> bool:
        """True if ``u`` is an ancestor of ``v`` (every vertex is its own ancestor)."""
        return self.entry[u] <= self.entry[v] and self.exit[v] <= self.exit[u]


def _search_tree(graph: Graph, order: VertexOrder, rightmost: bool) -> RootedSpanningTree:
    _check_order(graph, order)
    pos = order.pos
    parent = [-1] * graph.n
    adj = graph.adj
    for v in order.seq[1:]:
        pv = pos[v]
        best = -1
        best_pos = -1 if rightmost else graph.n
        for w in adj[v]:
            pw = pos[w]
            if pw < pv and (pw > best_pos if rightmost else pw < best_pos):
                best, best_pos = w, pw
        if best == -1:
            raise NotASearchOrder(graph.names[v])
        parent[v] = best
    return RootedSpanningTree(order.first, parent)


def l_tree(graph: Graph, order: VertexOrder) -> RootedSpanningTree:
    """Last-in tree: each vertex hangs off its rightmost earlier neighbour."""
    return _search_tree(graph, order, rightmost=True)


def f_tree(graph: Graph, order: VertexOrder) -> RootedSpanningTree:
    """First-in tree: each vertex hangs off its leftmost earlier neighbour."""
    return _search_tree(graph, order, rightmost=False)


def check_spanning(graph: Graph, tree: RootedSpanningTree) -> None:
    if tree.n != graph.n:
        raise NotASpanningTree(f"tree has {tree.n} vertices, graph has {graph.n}")
    sets = graph.adjacency_sets()
    for v, p in enumerate(tree.parent):
        if p != -1 and p not in sets[v]:
            raise NotASpanningTree(
                f"tree edge {graph.names[v]!r}-{graph.names[p]!r} is not an edge of the graph"
            )


def is_dfs_ltree(graph: Graph, tree: RootedSpanningTree) -> bool:
    """Whether ``tree`` is the L-tree of some DFS of ``graph``.

    Uses the ancestor characterisation: every graph edge must join an
    ancestor/descendant pair of the tree.  O(n + m).
    """
    check_spanning(graph, tree)
    idx = AncestorIndex(tree)
    entry, exit_ = idx.entry, idx.exit
    for u, nbrs in enumerate(graph.adj):
        eu, xu = entry[u], exit_[u]
        for v in nbrs:
            if u < v:
                ev, xv = entry[v], exit_[v]
                if not ((eu <= ev and xv <= xu) or (ev <= eu and xu <= xv)):
                    return False
    return True


def _children_desc(tree: RootedSpanningTree, tiebreak: VertexOrder) -> list[list[int]]:
    kids: list[list[int]] = [[] for _ in range(tree.n)]
    parent = tree.parent
    for v in reversed(tiebreak.seq):
        p = parent[v]
        if p != -1:
            kids[p].append(v)
    return kids


def tree_dfs_plus(tree: RootedSpanningTree, tiebreak: VertexOrder) -> VertexOrder:
    """DFS of the tree from its root, children taken rightmost-in-``tiebreak`` first."""
    if len(tiebreak) != tree.n:
        raise InvalidOrder("tiebreak length does not match the tree")
    return VertexOrder(_dfs_plus(_children_desc(tree, tiebreak), tree.root))


def tree_equal(t1: RootedSpanningTree, t2: RootedSpanningTree) -> bool:
    """Same root and same edge set."""
    return t1.n == t2.n and t1.root == t2.root and t1.edges() == t2.edges()
