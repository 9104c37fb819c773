"""Fixtures and independent helpers shared by the test modules."""

from __future__ import annotations

import collections
import itertools
import random

import networkx as nx

from lexsearch import Graph, RootedSpanningTree, VertexOrder, build_graph, gen_chordal

FIG1_EDGES = "sa sb sc sd ab ac bc cd ce cf cg ch dh eg fg gh gi gj hj ij".split()
FIG1_RHO = "a b c d e f g h i j s"
FIG1_PI = "s d c b a h g f e j i"
FIG1_SIGMA = "s d c h g j i f e b a"
# tie-break printed for the final tree search in the worked example
FIG1_TAU_PRINTED = "d c b h g a e f j i s"
# child -> parent of the highlighted tree
FIG1_TREE = {"d": "s", "c": "d", "b": "c", "a": "b", "h": "c", "g": "h", "f": "g", "e": "g", "j": "g", "i": "j"}


# criterion -> [(part, ok, detail)], printed by the terminal summary hook
ACCEPTANCE: dict[str, list] = collections.OrderedDict()


def report(criterion: str, part: str, ok: bool, detail: str = "") -> bool:
    ACCEPTANCE.setdefault(criterion, []).append((part, ok, detail))
    print(f"[{criterion}] {part}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
    return ok


def fig1() -> Graph:
    return build_graph([(e[0], e[1]) for e in FIG1_EDGES])


def graph_from(edges: str | list, isolated=()) -> Graph:
    """``graph_from("ab bc")`` or a list of token pairs."""
    if isinstance(edges, str):
        edges = [(e[0], e[1]) for e in edges.split()]
    return build_graph(edges, isolated)


def order(g: Graph, text: str) -> VertexOrder:
    return VertexOrder.from_tokens(g, text.split())


def tokens(g: Graph, o) -> str:
    return " ".join(str(t) for t in VertexOrder(o).tokens(g))


def tree_from(g: Graph, root: str, parents: dict) -> RootedSpanningTree:
    parent = [-1] * g.n
    for child, par in parents.items():
        parent[g.vertex(child)] = g.vertex(par)
    return RootedSpanningTree(g.vertex(root), parent)


def fig1_tree(g: Graph) -> RootedSpanningTree:
    return tree_from(g, "s", FIG1_TREE)


def cycle_graph(k: int) -> Graph:
    return Graph([[(v - 1) % k, (v + 1) % k] for v in range(k)])


def complete_graph(k: int) -> Graph:
    return Graph([[w for w in range(k) if w != v] for v in range(k)])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    relabel = {v: i for i, v in enumerate(h.nodes)}
    adj = [[] for _ in relabel]
    for u, v in h.edges:
        adj[relabel[u]].append(relabel[v])
        adj[relabel[v]].append(relabel[u])
    return Graph(adj)


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Random spanning tree plus independent extra edges with probability ``p``."""
    edges = set()
    for v in range(1, n):
        u = rng.randrange(v)
        edges.add((u, v))
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(adj)


def chordal_corpus(count: int, n_max: int, seed: int, k_max: int = 6):
    """``count`` gen_chordal graphs with n in [2, n_max], seeded deterministically."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(2, n_max)
        k = rng.randint(1, min(k_max, n - 1))
        out.append(gen_chordal(n, k, rng.randrange(2**32)))
    return out


def connected_labelled_graphs(n: int):
    """Every connected simple graph on vertex ids ``0..n-1``."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        adj = [[] for _ in range(n)]
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                adj[u].append(v)
                adj[v].append(u)
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(p for i, p in enumerate(pairs) if mask >> i & 1)
        if n == 1 or nx.is_connected(h):
            yield Graph(adj)


def all_dfs_orders(g: Graph, start: int) -> set[tuple[int, ...]]:
    """Every order generic DFS can produce from ``start`` (stack semantics, all choices)."""
    adj = g.adjacency_sets()
    out = set()

    def walk(prefix, visited):
        if len(prefix) == g.n:
            out.add(tuple(prefix))
            return
        # deepest visited vertex that still has an unvisited neighbour
        for v in reversed(prefix):
            cand = [w for w in adj[v] if w not in visited]
            if cand:
                break
        for w in cand:
            visited.add(w)
            prefix.append(w)
            walk(prefix, visited)
            prefix.pop()
            visited.discard(w)

    walk([start], {start})
    return out


def is_peo(g: Graph, peo) -> bool:
    """Later neighbours of every vertex form a clique."""
    pos = {v: i for i, v in enumerate(peo)}
    adj = g.adjacency_sets()
    for v in peo:
        later = [w for w in adj[v] if pos[w] > pos[v]]
        for a, b in itertools.combinations(later, 2):
            if b not in adj[a]:
                return False
    return True


def is_chordless_cycle(g: Graph, cycle) -> bool:
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    adj = g.adjacency_sets()
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if (cycle[j] in adj[cycle[i]]) != consecutive:
                return False
    return True


def has_induced_hole(g: Graph) -> bool:
    """Brute force: some vertex subset of size >= 4 induces a cycle."""
    adj = g.adjacency_sets()
    for size in range(4, g.n + 1):
        for sub in itertools.combinations(range(g.n), size):
            s = set(sub)
            if all(len(adj[v] & s) == 2 for v in sub):
                h = nx.Graph()
                h.add_edges_from((u, w) for u in sub for w in adj[u] & s)
                if nx.is_connected(h):
                    return True
    return False
