"""Lexicographic graph searches with a linear-time LexDFS for chordal graphs."""

from .errors import *  # noqa: F401,F403
from .graph import Graph, VertexOrder, bfs_order, build_graph, dfs_plus, reverse
from .partition import OrderedPartition
from .lexbfs import canonical_tiebreak, lexbfs, lexbfs_plus
from .trees import (
    AncestorIndex,
    RootedSpanningTree,
    f_tree,
    is_dfs_ltree,
    l_tree,
    tree_dfs_plus,
    tree_equal,
)
from .ordering import ordering, ordering_tiebreak, tree_beta
from .chordal import (
    ChordalityCertificate,
    ChordalSearch,
    check_chordal,
    chordal_lexdfs_search,
    chordless_cycle,
    is_chordal,
    lexdfs_chordal,
    lexdfs_plus_chordal,
    verify_lexdfs_ltree,
    verify_lexdfs_order,
)
from .oracle import (
    LabelState,
    check_dfs_order,
    check_lexdfs_order,
    enumerate_lexbfs_orders,
    enumerate_lexdfs_orders,
    naive_lexbfs_plus,
    naive_lexdfs_plus,
)
from .testkit import SplitMix64, bench_family, gen_chordal, gen_rho

__version__ = "0.1.0"
