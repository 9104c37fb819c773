"""Recognise chordal graphs and explain rejections.

A chordal graph gets a perfect elimination order as its certificate; a
non-chordal one gets a chordless cycle of length at least four.

    python3 demos/chordality.py
"""

from lexsearch import build_graph, check_chordal, gen_chordal

generated = gen_chordal(12, 3, seed=7)
cert = check_chordal(generated)
print(f"gen_chordal(12, 3): n={generated.n} m={generated.m} chordal={cert.chordal}")
print("  elimination order:", " ".join(map(str, cert.peo.seq)))

# a 6-cycle with one chord still leaves a 4-hole
wheelish = build_graph([(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 4)])
cert = check_chordal(wheelish)
print("hexagon with one chord: chordal =", cert.chordal)
print("  chordless cycle:", " ".join(str(wheelish.names[v]) for v in cert.cycle))

# adding the two remaining chords of a triangulation fixes it
triangulated = build_graph([(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 4), (1, 3), (4, 6)])
print("after triangulating: chordal =", check_chordal(triangulated).chordal)
