import random

from hypothesis import given, settings
from hypothesis import strategies as st

from lexsearch import (
    VertexOrder,
    canonical_tiebreak,
    enumerate_lexbfs_orders,
    gen_chordal,
    lexbfs,
    lexbfs_plus,
    naive_lexbfs_plus,
)

from support import (
    FIG1_PI,
    FIG1_RHO,
    chordal_corpus,
    complete_graph,
    fig1,
    graph_from,
    order,
    random_connected_graph,
    tokens,
)


def test_fig1_lexbfs_plus():
    g = fig1()
    assert tokens(g, lexbfs_plus(g, order(g, FIG1_RHO))) == FIG1_PI


def test_fig1_partitions_after_first_two_pivots():
    g = fig1()
    seen = []
    lexbfs_plus(g, order(g, FIG1_RHO), trace=lambda v, p: seen.append(p.format(g.names)))
    assert seen[0] == "(s)(d,c,b,a)(j,i,h,g,f,e)"
    assert seen[1] == "(s)(d)(c)(b,a)(h)(j,i,g,f,e)"


def test_k4_follows_tiebreak():
    g = complete_graph(4)
    assert lexbfs_plus(g, VertexOrder([0, 1, 2, 3])) == (3, 2, 1, 0)


def test_canonical_tiebreak():
    assert canonical_tiebreak(4, 1) == (0, 2, 3, 1)
    assert canonical_tiebreak(1, 0) == (0,)


def test_lexbfs_path_from_middle():
    g = graph_from("ab bc")
    b = g.vertex("b")
    valid = {tokens(g, o) for o in enumerate_lexbfs_orders(g, b)}
    assert valid == {"b a c", "b c a"}
    # canonical tiebreak (a, c, b): c is rightmost among the tied a, c
    assert tokens(g, lexbfs(g, b)) == "b c a"


def test_lexbfs_on_k3_starts_anywhere():
    g = complete_graph(3)
    for s in range(3):
        assert lexbfs(g, s).first == s


def test_fig1_lexbfs_replays_with_oracle():
    g = fig1()
    s = g.vertex("s")
    assert lexbfs(g, s) == naive_lexbfs_plus(g, canonical_tiebreak(g.n, s))


def test_singleton():
    g = gen_chordal(1, 1, 0)
    assert lexbfs(g, 0) == (0,)


def test_corpus_matches_oracle():
    rng = random.Random(7)
    for g in chordal_corpus(80, 64, seed=3):
        for _ in range(2):
            tie = list(range(g.n))
            rng.shuffle(tie)
            rho = VertexOrder(tie)
            assert lexbfs_plus(g, rho) == naive_lexbfs_plus(g, rho)


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 24), st.floats(0, 0.6), st.integers(0, 2**32))
def test_matches_oracle_on_arbitrary_graphs(n, p, seed):
    rng = random.Random(seed)
    g = random_connected_graph(n, p, rng)
    tie = list(range(n))
    rng.shuffle(tie)
    rho = VertexOrder(tie)
    assert lexbfs_plus(g, rho) == naive_lexbfs_plus(g, rho)


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 40), st.floats(0, 0.6), st.integers(0, 2**32))
def test_self_consistency_and_work_bound(n, p, seed):
    rng = random.Random(seed)
    g = random_connected_graph(n, p, rng)
    tie = list(range(n))
    rng.shuffle(tie)
    stats = {}
    sigma = lexbfs_plus(g, VertexOrder(tie), stats=stats)
    assert lexbfs_plus(g, sigma.reversed()) == sigma
    assert stats["moves"] <= 2 * g.m + g.n


def test_deterministic():
    g = gen_chordal(300, 4, 11)
    rho = VertexOrder(list(range(300)))
    assert lexbfs_plus(g, rho) == lexbfs_plus(g, rho)
