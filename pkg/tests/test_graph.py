import random

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lexsearch import (
    Disconnected,
    EmptyInput,
    Graph,
    InvalidOrder,
    LexSearchError,
    SelfLoop,
    StartNotInGraph,
    VertexOrder,
    bfs_order,
    build_graph,
    check_dfs_order,
    dfs_plus,
    reverse,
)

from support import (
    FIG1_PI,
    FIG1_SIGMA,
    FIG1_TAU_PRINTED,
    FIG1_TREE,
    fig1,
    graph_from,
    order,
    random_connected_graph,
    to_nx,
    tokens,
)


def test_fig1_graph_shape():
    g = fig1()
    assert (g.n, g.m) == (11, 20)
    assert {g.names[w] for w in g.neighbors(g.vertex("s"))} == set("abcd")
    assert sum(len(a) for a in g.adj) == 2 * g.m


def test_ids_follow_first_occurrence():
    g = build_graph([("x", "y"), ("y", "z"), ("z", "x")])
    assert g.names == ("x", "y", "z")


def test_single_edge():
    g = build_graph([("u", "v")])
    assert (g.n, g.m) == (2, 1)


def test_duplicate_edges_are_merged():
    g = build_graph([("u", "v"), ("v", "u"), ("u", "v")])
    assert g.m == 1
    assert g.adj == ((1,), (0,))


def test_disconnected_names_tokens():
    with pytest.raises(Disconnected) as exc:
        build_graph([("a", "b"), ("c", "d")])
    assert set(exc.value.tokens) <= {"a", "b", "c", "d"}
    assert len(set(exc.value.tokens)) == 2


def test_self_loop_names_token():
    with pytest.raises(SelfLoop) as exc:
        build_graph([("a", "b"), ("b", "b")])
    assert exc.value.token == "b"


def test_empty_input():
    with pytest.raises(EmptyInput):
        build_graph([])


def test_singleton_graph():
    g = build_graph([], isolated=["s"])
    assert (g.n, g.m) == (1, 0)
    assert dfs_plus(g, 0, VertexOrder([0])) == (0,)
    assert bfs_order(g, 0) == (0,)


@pytest.mark.parametrize(
    "adj",
    [
        [[1], []],  # asymmetric
        [[1, 1], [0, 0]],  # duplicate
        [[0, 1], [0]],  # self-loop
        [[2], [0]],  # out of range
    ],
)
def test_graph_constructor_rejects_bad_adjacency(adj):
    with pytest.raises(LexSearchError):
        Graph(adj)


def test_csr_matches_adjacency_and_is_readonly():
    g = fig1()
    for v in range(g.n):
        assert tuple(g.indices[g.indptr[v]:g.indptr[v + 1]]) == g.adj[v]
    with pytest.raises(ValueError):
        g.indices[0] = 3


def test_edges_and_has_edge():
    g = fig1()
    es = list(g.edges())
    assert len(es) == g.m and all(u < v for u, v in es)
    assert g.has_edge(g.vertex("s"), g.vertex("a"))
    assert not g.has_edge(g.vertex("s"), g.vertex("e"))


def test_vertex_lookup_errors():
    g = fig1()
    with pytest.raises(StartNotInGraph):
        g.vertex("zz")
    with pytest.raises(StartNotInGraph):
        bfs_order(g, 99)
    with pytest.raises(StartNotInGraph):
        dfs_plus(g, -1, VertexOrder.identity(g.n))


# orders


def test_reverse_fig1():
    g = fig1()
    assert tokens(g, reverse(order(g, FIG1_PI))) == "i j e f g h a b c d s"


def test_reverse_singleton():
    assert reverse(VertexOrder([0])) == (0,)


@given(st.permutations(list(range(12))))
def test_reverse_involution_and_pos(seq):
    o = VertexOrder(seq)
    assert reverse(reverse(o)) == o
    r = reverse(o)
    assert all(r.seq[r.pos[v]] == v for v in range(12))
    assert all(r.pos[r.seq[i]] == i for i in range(12))
    assert r.first == o.last and r.last == o.first


@pytest.mark.parametrize("seq", [[0, 0, 1], [0, 2], [1, 2, 3]])
def test_vertex_order_rejects_non_permutation(seq):
    with pytest.raises(InvalidOrder):
        VertexOrder(seq)


def test_order_of_wrong_length_is_rejected_by_searches():
    g = fig1()
    with pytest.raises(InvalidOrder):
        dfs_plus(g, 0, VertexOrder.identity(3))


def test_from_tokens_rejects_unknown_and_repeated():
    g = fig1()
    with pytest.raises(LexSearchError):
        VertexOrder.from_tokens(g, "s a b c d e f g h i zz".split())
    with pytest.raises(LexSearchError):
        VertexOrder.from_tokens(g, "s s b c d e f g h i j".split())


def test_vertex_order_equality_and_before():
    o = VertexOrder([2, 0, 1])
    assert o == (2, 0, 1) and o == [2, 0, 1] and o == VertexOrder([2, 0, 1])
    assert o != (0, 1, 2)
    assert hash(o) == hash(VertexOrder([2, 0, 1]))
    assert o.before(2, 1) and not o.before(1, 0)


# dfs_plus


def test_dfs_plus_triangle():
    g = graph_from("sa sb ab")
    assert tokens(g, dfs_plus(g, g.vertex("s"), order(g, "a b s"))) == "s b a"


def test_dfs_plus_path_is_forced():
    g = graph_from("ab bc")
    for perm in ["a b c", "c b a", "b c a"]:
        assert tokens(g, dfs_plus(g, g.vertex("a"), order(g, perm))) == "a b c"


def test_dfs_plus_on_fig1_tree_with_printed_tau():
    g = fig1()
    t = build_graph([(c, p) for c, p in FIG1_TREE.items()])
    sigma = dfs_plus(t, t.vertex("s"), order(t, FIG1_TAU_PRINTED))
    assert tokens(t, sigma) == FIG1_SIGMA
    assert g.n == t.n


def test_dfs_plus_backtracks_to_deepest_vertex_with_unvisited_neighbour():
    # s-a-b path plus s-c: after b is a dead end we return to a (nothing), then s
    g = graph_from("sa ab sc")
    assert tokens(g, dfs_plus(g, g.vertex("s"), order(g, "c a b s"))) == "s a b c"
    assert tokens(g, dfs_plus(g, g.vertex("s"), order(g, "a b c s"))) == "s c a b"


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 32), st.floats(0, 0.5), st.integers(0, 2**32))
def test_dfs_plus_satisfies_four_point_property(n, p, seed):
    rng = random.Random(seed)
    g = random_connected_graph(n, p, rng)
    tie = list(range(n))
    rng.shuffle(tie)
    o = dfs_plus(g, rng.randrange(n), VertexOrder(tie))
    assert check_dfs_order(g, o)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 20), st.floats(0, 0.4), st.integers(0, 2**32))
def test_dfs_plus_rightmost_rule(n, p, seed):
    """Independent re-simulation: the next vertex is the tiebreak-rightmost
    unvisited neighbour of the deepest vertex that has one."""
    rng = random.Random(seed)
    g = random_connected_graph(n, p, rng)
    tie = list(range(n))
    rng.shuffle(tie)
    tpos = {v: i for i, v in enumerate(tie)}
    o = dfs_plus(g, tie[0], VertexOrder(tie)).seq
    sets = g.adjacency_sets()
    for i in range(1, n):
        seen = set(o[:i])
        for v in reversed(o[:i]):
            cand = sets[v] - seen
            if cand:
                break
        assert o[i] == max(cand, key=tpos.__getitem__)


# bfs_order


def test_bfs_path_and_star():
    g = graph_from("ab bc")
    assert tokens(g, bfs_order(g, g.vertex("a"))) == "a b c"
    star = graph_from("sx sy sz")
    assert tokens(star, bfs_order(star, star.vertex("s"))) == "s x y z"


def test_bfs_on_fig1_tree_puts_ancestors_first():
    t = build_graph([(c, p) for c, p in FIG1_TREE.items()])
    o = bfs_order(t, t.vertex("s"))
    for c, p in FIG1_TREE.items():
        assert o.pos[t.vertex(p)] < o.pos[t.vertex(c)]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 40), st.floats(0, 0.3), st.integers(0, 2**32))
def test_bfs_positions_monotone_in_distance(n, p, seed):
    rng = random.Random(seed)
    g = random_connected_graph(n, p, rng)
    s = rng.randrange(n)
    o = bfs_order(g, s)
    dist = nx.single_source_shortest_path_length(to_nx(g), s)
    ds = [dist[v] for v in o.seq]
    assert ds == sorted(ds)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 40), st.floats(0, 0.3), st.integers(0, 2**32))
def test_graph_invariants_rechecked_independently(n, p, seed):
    g = random_connected_graph(n, p, random.Random(seed))
    h = to_nx(g)
    assert nx.is_connected(h)
    assert h.number_of_edges() == g.m
    for u in range(g.n):
        assert u not in g.adj[u]
        for v in g.adj[u]:
            assert u in g.adj[v]
    assert np.diff(g.indptr).sum() == 2 * g.m
