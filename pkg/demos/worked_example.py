"""Walk through the linear-time LexDFS+ on a small chordal graph.

Prints the LexBFS+ partitions, the L-tree, the tie-break partition built
from that tree, and the final LexDFS+ order, then checks the result
against the slow label-based search.

    python3 demos/worked_example.py
"""

from lexsearch import (
    VertexOrder,
    build_graph,
    l_tree,
    lexbfs_plus,
    lexdfs_plus_chordal,
    naive_lexdfs_plus,
    ordering,
)

EDGES = "sa sb sc sd ab ac bc cd ce cf cg ch dh eg fg gh gi gj hj ij".split()

graph = build_graph([(e[0], e[1]) for e in EDGES])
names = graph.names
rho = VertexOrder.from_tokens(graph, "a b c d e f g h i j s".split())
start = graph.vertex("s")


def show(part):
    return "".join("(" + ",".join(names[v] for v in cls) + ")" for cls in part.classes())


print("LexBFS+ partitions:")
pi = lexbfs_plus(graph, rho, trace=lambda v, part: print(f"  after {names[v]}: {show(part)}"))
print("pi    =", " ".join(pi.tokens(graph)))

tree = l_tree(graph, pi)
print("L-tree:", ", ".join(f"{names[v]}->{names[tree.parent[v]]}" for v in range(graph.n) if v != start))

print("tie-break partition, refining leaf to root:")
sigma = ordering(
    graph, tree, start, rho, pi.reversed(),
    trace=lambda v, part: print(f"  after {names[v]}: {show(part)}"),
)
print("sigma =", " ".join(sigma.tokens(graph)))

fast = lexdfs_plus_chordal(graph, start, rho)
slow = naive_lexdfs_plus(graph, rho)
print("matches the label-based search:", fast == slow == sigma)
