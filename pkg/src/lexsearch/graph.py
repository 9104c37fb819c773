"""Graph and vertex-order representations plus the plain DFS/BFS traversals.

Vertices are dense integer ids ``0 .. n-1``.  External tokens (whatever
appeared in the input edge list) are kept in :attr:`Graph.names` for I/O.
"""

from __future__ import annotations

from collections import deque
from typing import Hashable, Iterable, Iterator, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import (
    Disconnected,
    EmptyInput,
    InvalidOrder,
    LexSearchError,
    SelfLoop,
    StartNotInGraph,
)

__all__ = [
    "Graph",
    "VertexOrder",
    "build_graph",
    "reverse",
    "dfs_plus",
    "bfs_order",
]


class Graph:
    """Immutable simple, undirected, connected graph in CSR form.

    ``indptr``/``indices`` follow the usual compressed-sparse-row layout:
    the neighbours of ``v`` are ``indices[indptr[v]:indptr[v + 1]]``, kept in
    input order.  Both arrays are read-only.
    """

    __slots__ = ("n", "m", "indptr", "indices", "names", "_adj", "_index", "_adjsets", "_csr32")

    def __init__(self, adjacency: Sequence[Sequence[int]], names: Sequence[Hashable] | None = None):
        n = len(adjacency)
        if n == 0:
            raise EmptyInput("graph has no vertices")
        if names is None:
            names = tuple(range(n))
        else:
            names = tuple(names)
            if len(names) != n:
                raise LexSearchError("names must have one entry per vertex")
        adj = tuple(tuple(nbrs) for nbrs in adjacency)
        degrees = np.fromiter((len(a) for a in adj), dtype=np.int64, count=n)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(degrees, out=indptr[1:])
        indices = np.fromiter((w for a in adj for w in a), dtype=np.int64, count=int(indptr[-1]))
        _validate(adj, names, indptr, indices)
        indptr.flags.writeable = False
        indices.flags.writeable = False

        self.n = n
        self.m = int(indptr[-1]) // 2
        self.indptr = indptr
        self.indices = indices
        self.names = names
        self._adj = adj
        self._index = None
        self._adjsets = None
        self._csr32 = None
        _check_connected(self)

    @property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        """Neighbour tuples per vertex; the fast path for pure-Python loops."""
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def adjacency_sets(self) -> tuple[frozenset[int], ...]:
        if self._adjsets is None:
            self._adjsets = tuple(frozenset(a) for a in self._adj)
        return self._adjsets

    def csr32(self) -> tuple[np.ndarray, np.ndarray]:
        """``(indptr, indices)`` as int32 arrays for the compiled kernels.

        ``indptr`` stays int64 when ``2m`` does not fit in 32 bits.
        """
        if self._csr32 is None:
            ptr_type = np.int32 if len(self.indices) < 2**31 else np.int64
            self._csr32 = (self.indptr.astype(ptr_type), self.indices.astype(np.int32))
        return self._csr32

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency_sets()[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each edge once, as ``(u, v)`` with ``u < v``."""
        for u, nbrs in enumerate(self._adj):
            for v in nbrs:
                if u < v:
                    yield u, v

    def vertex(self, token: Hashable) -> int:
        """Id of the vertex whose external token is ``token``."""
        if self._index is None:
            self._index = {name: i for i, name in enumerate(self.names)}
        try:
            return self._index[token]
        except KeyError:
            raise StartNotInGraph(f"vertex {token!r} is not in the graph") from None

    def check_vertex(self, v: int) -> int:
        if not isinstance(v, (int, np.integer)) or not 0 <= v < self.n:
            raise StartNotInGraph(f"vertex id {v!r} is not in the graph")
        return int(v)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _validate(adj: tuple[tuple[int, ...], ...], names: tuple, indptr, indices) -> None:
    n = len(adj)
    if len(indices) and (indices.min() < 0 or indices.max() >= n):
        raise LexSearchError("neighbour id out of range")
    src = np.repeat(np.arange(n, dtype=np.int64), np.diff(indptr))
    loops = np.flatnonzero(src == indices)
    if len(loops):
        raise SelfLoop(names[int(src[loops[0]])])
    fwd = np.sort(src * n + indices)
    dup = np.flatnonzero(fwd[1:] == fwd[:-1])
    if len(dup):
        u, v = divmod(int(fwd[dup[0]]), n)
        raise LexSearchError(f"duplicate edge {names[u]!r}-{names[v]!r}")
    bwd = np.sort(indices * n + src)
    if not np.array_equal(fwd, bwd):
        bad = int(np.setdiff1d(fwd, bwd)[0])
        u, v = divmod(bad, n)
        raise LexSearchError(f"adjacency not symmetric at {names[u]!r}-{names[v]!r}")


def _check_connected(g: Graph) -> None:
    if g.n == 1:
        return
    data = np.ones(len(g.indices), dtype=np.int8)
    mat = csr_matrix((data, g.indices, g.indptr), shape=(g.n, g.n))
    ncomp, labels = connected_components(mat, directed=False)
    if ncomp > 1:
        other = int(np.flatnonzero(labels != labels[0])[0])
        raise Disconnected(g.names[0], g.names[other])


def build_graph(edges: Iterable[tuple[Hashable, Hashable]], isolated: Iterable[Hashable] = ()) -> Graph:
    """Build a :class:`Graph` from token pairs.

    Ids are assigned by first occurrence of each token.  Duplicate edges are
    dropped, keeping the first occurrence's position in both adjacency lists.
    ``isolated`` lists extra tokens with no edges; the only connected graph
    that can use it is the single-vertex one.
    """
    index: dict[Hashable, int] = {}
    names: list[Hashable] = []
    adj: list[list[int]] = []
    seen: set[tuple[int, int]] = set()

    def vid(tok):
        i = index.get(tok)
        if i is None:
            i = index[tok] = len(names)
            names.append(tok)
            adj.append([])
        return i

    any_edge = False
    for a, b in edges:
        any_edge = True
        if a == b:
            raise SelfLoop(a)
        u, v = vid(a), vid(b)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            continue
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    for tok in isolated:
        vid(tok)
    if not any_edge and not names:
        raise EmptyInput("edge list is empty")
    return Graph(adj, names)


class VertexOrder:
    """A bijection between positions ``0 .. n-1`` and vertex ids.

    ``seq[i]`` is the vertex at position ``i`` and ``pos[v]`` its inverse.
    """

    __slots__ = ("seq", "_pos", "_arr")

    def __init__(self, seq: Iterable[int]):
        seq = tuple(int(v) for v in seq)
        n = len(seq)
        pos = [-1] * n
        for i, v in enumerate(seq):
            if not 0 <= v < n or pos[v] != -1:
                raise InvalidOrder(f"not a permutation of 0..{n - 1}: {seq}")
            pos[v] = i
        self.seq = seq
        self._pos = tuple(pos)
        self._arr = None

    @classmethod
    def from_tokens(cls, graph: Graph, tokens: Iterable[Hashable]) -> "VertexOrder":
        tokens = list(tokens)
        if len(tokens) != graph.n:
            raise InvalidOrder(f"order has {len(tokens)} entries, graph has {graph.n} vertices")
        try:
            return cls(graph.vertex(t) for t in tokens)
        except StartNotInGraph as exc:
            raise InvalidOrder(str(exc)) from None

    @classmethod
    def _trusted(cls, seq: np.ndarray) -> "VertexOrder":
        """Wrap a permutation array known to be valid, skipping the checks."""
        self = cls.__new__(cls)
        self.seq = tuple(seq.tolist())
        self._pos = None
        self._arr = seq
        seq.flags.writeable = False
        return self

    def as_array(self) -> np.ndarray:
        """The order as a read-only int32 array, built once and cached."""
        if self._arr is None:
            arr = np.fromiter(self.seq, dtype=np.int32, count=len(self.seq))
            arr.flags.writeable = False
            self._arr = arr
        return self._arr

    @property
    def pos(self) -> tuple[int, ...]:
        if self._pos is None:
            pos = [0] * len(self.seq)
            for i, v in enumerate(self.seq):
                pos[v] = i
            self._pos = tuple(pos)
        return self._pos

    @classmethod
    def identity(cls, n: int) -> "VertexOrder":
        return cls(range(n))

    def tokens(self, graph: Graph) -> list:
        names = graph.names
        return [names[v] for v in self.seq]

    def reversed(self) -> "VertexOrder":
        return VertexOrder(self.seq[::-1])

    @property
    def first(self) -> int:
        return self.seq[0]

    @property
    def last(self) -> int:
        return self.seq[-1]

    def before(self, u: int, v: int) -> bool:
        """``u`` strictly precedes ``v``."""
        return self.pos[u] < self.pos[v]

    def __len__(self):
        return len(self.seq)

    def __iter__(self):
        return iter(self.seq)

    def __getitem__(self, i):
        return self.seq[i]

    def __eq__(self, other):
        if isinstance(other, VertexOrder):
            return self.seq == other.seq
        if isinstance(other, (tuple, list)):
            return self.seq == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.seq)

    def __repr__(self):
        return f"VertexOrder({list(self.seq)})"


def reverse(order: VertexOrder) -> VertexOrder:
    return order.reversed()


def _check_order(graph: Graph, order: VertexOrder) -> None:
    if len(order) != graph.n:
        raise InvalidOrder(f"order has {len(order)} entries, graph has {graph.n} vertices")


def sort_adjacency_desc(adj: Sequence[Sequence[int]], order: VertexOrder) -> list[list[int]]:
    """Neighbour lists re-sorted by descending position in ``order``.

    Counting-sort style: one pass over ``order`` from the back, O(n + m).
    """
    out: list[list[int]] = [[] for _ in range(len(adj))]
    for u in reversed(order.seq):
        for w in adj[u]:
            out[w].append(u)
    return out


def sort_adjacency_asc(adj: Sequence[Sequence[int]], order: VertexOrder) -> list[list[int]]:
    out: list[list[int]] = [[] for _ in range(len(adj))]
    for u in order.seq:
        for w in adj[u]:
            out[w].append(u)
    return out


def _dfs_plus(adj_desc: Sequence[Sequence[int]], start: int) -> list[int]:
    # adj_desc lists are already in preference order
    n = len(adj_desc)
    visited = [False] * n
    visited[start] = True
    out = [start]
    stack = [start]
    ptr = [0] * n
    while stack:
        v = stack[-1]
        nbrs = adj_desc[v]
        i = ptr[v]
        k = len(nbrs)
        while i < k and visited[nbrs[i]]:
            i += 1
        if i == k:
            ptr[v] = i
            stack.pop()
            continue
        w = nbrs[i]
        ptr[v] = i + 1
        visited[w] = True
        out.append(w)
        stack.append(w)
    return out


def dfs_plus(graph: Graph, start: int, tiebreak: VertexOrder) -> VertexOrder:
    """DFS from ``start`` that always enters the unvisited neighbour rightmost in ``tiebreak``.

    Backtracks to the deepest stack vertex that still has an unvisited
    neighbour.  Runs in O(n + m).
    """
    start = graph.check_vertex(start)
    _check_order(graph, tiebreak)
    return VertexOrder(_dfs_plus(sort_adjacency_desc(graph.adj, tiebreak), start))


def _bfs(adj: Sequence[Sequence[int]], start: int) -> list[int]:
    visited = [False] * len(adj)
    visited[start] = True
    out = [start]
    queue = deque(out)
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if not visited[w]:
                visited[w] = True
                out.append(w)
                queue.append(w)
    return out


def bfs_order(graph: Graph, start: int) -> VertexOrder:
    """Breadth-first order from ``start``, neighbours taken in adjacency order."""
    start = graph.check_vertex(start)
    return VertexOrder(_bfs(graph.adj, start))
