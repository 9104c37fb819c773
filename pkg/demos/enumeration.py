"""Every LexDFS order of a small chordal graph is a LexDFS+ order.

Enumerates all LexDFS orders from each start vertex and reproduces each
one with the linear-time search, using its own reverse as the tie-break.
Also compares the rooted L-trees of all LexBFS and all LexDFS orders,
which coincide on chordal graphs.

    python3 demos/enumeration.py
"""

from lexsearch import (
    build_graph,
    enumerate_lexbfs_orders,
    enumerate_lexdfs_orders,
    l_tree,
    lexdfs_plus_chordal,
)

# two triangles sharing an edge, plus a pendant path
graph = build_graph([("a", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("c", "d"), ("d", "e"), ("e", "f")])

for s in range(graph.n):
    orders = enumerate_lexdfs_orders(graph, s)
    reproduced = sum(lexdfs_plus_chordal(graph, s, o.reversed()) == o for o in orders)
    dfs_trees = {l_tree(graph, o).parent for o in orders}
    bfs_trees = {l_tree(graph, o).parent for o in enumerate_lexbfs_orders(graph, s)}
    print(
        f"start {graph.names[s]}: {len(orders)} LexDFS orders, {reproduced} reproduced, "
        f"{len(dfs_trees)} L-trees, same as LexBFS: {dfs_trees == bfs_trees}"
    )
