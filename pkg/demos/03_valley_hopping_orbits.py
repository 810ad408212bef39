"""
Valley hopping on trees
=======================

psi_u moves a double cyclic ascent or descent across its smaller neighbors,
carrying subtrees along. The moves commute and are involutions, so the trees
split into orbits. Each orbit has one member with no double cyclic descent,
and its contribution to the polynomial is (xy)^cdes (x+y)^(free vertices).
"""

from qstirling.fs_action import orbit_polynomial, orbits, psi
from qstirling.trees import classify_vertex, enumerate_trees, from_text, iter_vertices, to_text, tree_stats
from qstirling.words import Multiset

t = from_text("0(3,1(1(2)))")
for path, node in iter_vertices(t):
    print(f"vertex {node.label} at {path}: {classify_vertex(t, path).value}")
print("hop vertex 1:", to_text(t), "->", to_text(psi(t, (1,))))

###############################################################################
# Orbits of the whole family for {1, 2^2, 3}.

m = Multiset.of(1, 2, 1)
for o in orbits(enumerate_trees(m)):
    rep = tree_stats(o.representative)
    print(f"{len(o):>2} trees, rep {to_text(o.representative):<16} eleaf={rep.eleaf}  {orbit_polynomial(o)}")
