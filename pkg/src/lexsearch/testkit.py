"""Deterministic instance generators: chordal graphs, tie-break orders,
benchmark families.

All randomness comes from :class:`SplitMix64` so that a seed names the same
instance on every platform and in every implementation that follows the
recipe below.

SplitMix64 (Steele, Lea, Flood 2014), 64-bit arithmetic modulo 2**64::

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

The initial state is the seed reduced modulo 2**64.  Bounded draws in
``[0, k)`` use Lemire's multiply-shift with rejection: ``x * k`` as a
128-bit product, reject while its low 64 bits are below ``(2**64 - k) % k``,
return the high 64 bits.
"""

from __future__ import annotations

from typing import Iterable

from .errors import InvalidParameters
from .graph import Graph, VertexOrder

__all__ = ["SplitMix64", "gen_chordal", "gen_rho", "bench_family"]

MASK64 = (1 << 64) - 1


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        """Uniform integer in ``[0, k)``."""
        if k <= 0:
            raise ValueError("bound must be positive")
        m = self.next() * k
        low = m & MASK64
        if low < k:
            threshold = ((1 << 64) - k) % k
            while low < threshold:
                m = self.next() * k
                low = m & MASK64
        return m >> 64

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates, swapping ``items[i]`` with ``items[below(i + 1)]`` for i from the top."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def gen_chordal(n: int, k: int, seed: int) -> Graph:
    """Random connected chordal graph on ``n`` vertices.

    The generator keeps the list of maximal cliques.  Vertex ``u = 1 .. n-1``
    picks one of them, ``M``, uniformly, sets ``c = min(k, |M|)`` and
    ``r = max(1, c - b)`` with ``b`` a fair coin, and joins ``u`` to a uniform ``r``-subset ``S`` of
    ``M`` (partial Fisher-Yates on a copy of ``M``).  If ``S == M`` then
    ``M`` grows by ``u``; otherwise ``S + {u}`` is a new maximal clique.
    Each new vertex is simplicial when added, so the insertion order
    reversed is a perfect elimination order.  Cliques never exceed
    ``k + 1`` vertices, the edge count settles near ``(k - 0.5) n`` for
    ``k >= 2``, and ``k = 1`` gives a random tree.

    Finally ids are renumbered in BFS order from vertex 0 (neighbours in
    ascending old id) so that adjacent vertices get nearby ids, which keeps
    memory access local on large instances.
    """
    if n < 1 or k < 1 or (n > 1 and k >= n):
        raise InvalidParameters(f"need n >= 1 and 1 <= k < n, got n={n}, k={k}")
    rng = SplitMix64(seed)
    adj: list[list[int]] = [[] for _ in range(n)]
    cliques: list[list[int]] = [[0]]
    for u in range(1, n):
        m_idx = rng.below(len(cliques))
        clique = cliques[m_idx]
        r = max(1, min(k, len(clique)) - rng.below(2))
        pool = clique[:]
        for i in range(r):
            j = i + rng.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        chosen = pool[:r]
        for x in chosen:
            adj[u].append(x)
            adj[x].append(u)
        if r == len(clique):
            clique.append(u)
        else:
            chosen.append(u)
            cliques.append(chosen)
    return _bfs_relabel(adj)


def _bfs_relabel(adj: list[list[int]]) -> Graph:
    n = len(adj)
    for nbrs in adj:
        nbrs.sort()
    new = [-1] * n
    new[0] = 0
    order = [0]
    for v in order:
        for w in adj[v]:
            if new[w] < 0:
                new[w] = len(order)
                order.append(w)
    return Graph([[new[w] for w in adj[v]] for v in order])


def gen_rho(graph: Graph, start: int, seed: int) -> VertexOrder:
    """Uniform random order of the other vertices, followed by ``start``."""
    start = graph.check_vertex(start)
    rest = [v for v in range(graph.n) if v != start]
    SplitMix64(seed).shuffle(rest)
    rest.append(start)
    return VertexOrder(rest)


def bench_family(k: int, sizes: Iterable[int], seed: int) -> list[Graph]:
    """One :func:`gen_chordal` graph per size, all with density ``k`` and ``seed``."""
    return [gen_chordal(n, k, seed) for n in sizes]
