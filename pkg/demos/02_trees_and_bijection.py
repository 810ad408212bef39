"""
Ordered labeled trees and the word encoding
===========================================

Trees on {0} + M are built from gadgets: an odd vertex labeled i with
k_i - 1 even children labeled i. Reading gadgets left to right gives a
quasi-Stirling word, and the tree statistics (cdes, casc, eleaf) become the
word statistics (des, asc, plat).
"""

from qstirling.bijection import phi, phi_inverse
from qstirling.trees import enumerate_trees, is_weakly_increasing, to_text, tree_stats
from qstirling.words import Multiset, format_word, linear_stats, parse_word

w = parse_word("2773516455")
t = phi_inverse(w)
print("tree of", format_word(w), "is", to_text(t))
print("tree statistics:", tree_stats(t))
print("word statistics:", linear_stats(w))

###############################################################################
# Every tree of a small family, with its word. Weakly increasing trees are
# exactly the ones whose word is Stirling.

m = Multiset.of(1, 2, 1)
for t in enumerate_trees(m):
    s = tree_stats(t)
    mark = "*" if is_weakly_increasing(t) else " "
    print(f"{mark} {to_text(t):<18} {format_word(phi(t)):<8} cdes={s.cdes} casc={s.casc} eleaf={s.eleaf}")
