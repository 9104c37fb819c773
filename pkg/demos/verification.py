"""Check given orders and trees against the LexDFS definition.

The linear-time verifiers recompute the LexDFS+ order that a candidate
must equal; the four-point checker from the reference module is the slow
ground truth.  Every swap of two vertices that changes the verdict is
rejected by both.

    python3 demos/verification.py
"""

from lexsearch import (
    check_lexdfs_order,
    gen_chordal,
    gen_rho,
    l_tree,
    lexdfs_plus_chordal,
    verify_lexdfs_ltree,
    verify_lexdfs_order,
)
from lexsearch.oracle import verdict_changing_swaps

graph = gen_chordal(30, 4, seed=11)
sigma = lexdfs_plus_chordal(graph, 0, gen_rho(graph, 0, seed=5))
print("produced order accepted:", verify_lexdfs_order(graph, sigma), check_lexdfs_order(graph, sigma))
print("its L-tree accepted:", verify_lexdfs_ltree(graph, l_tree(graph, sigma)))

swaps = list(verdict_changing_swaps(graph, sigma))
agree = sum(verify_lexdfs_order(graph, s) == check_lexdfs_order(graph, s) for s in swaps)
print(f"{len(swaps)} verdict-changing swaps, verifier agrees with the oracle on {agree}")
