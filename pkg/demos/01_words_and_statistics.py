"""
Quasi-Stirling words and their statistics
=========================================

A permutation of the multiset {1^2, 2^2} is quasi-Stirling when no two
distinct letters interleave as a..b..a..b, and Stirling when everything
between two copies of a letter is at least that letter.
"""

from qstirling.words import (
    Multiset, cyclic_factorization, cyclic_profile, enumerate_words, format_word,
    is_quasi_stirling, is_stirling, linear_stats, parse_word,
)

m = Multiset.of(2, 2)
print(f"all {m.count_words()} permutations of {m}:")
for w in enumerate_words(m):
    tags = [name for name, ok in (("quasi", is_quasi_stirling(w)), ("stirling", is_stirling(w))) if ok]
    print(f"  {format_word(w)}  {' '.join(tags)}")

###############################################################################
# Linear statistics pad the word with 0 on both ends, so ascents, descents
# and plateaux always add up to K + 1.

w = parse_word("2773516455")
s = linear_stats(w)
print(f"\n{format_word(w)}: asc={s.asc} des={s.des} plat={s.plat} ddes={s.ddes}")

###############################################################################
# Cyclic statistics read the word around a circle. Double cyclic ascents and
# descents can be split around their smaller neighbors.

w = parse_word("15324")
p = cyclic_profile(w)
print(f"\ncycle {format_word(w)}: cdes={p.cdes} casc={p.casc}")
print("  classes:", [c.value for c in p.classes])
print("  factorization around 3:", cyclic_factorization(w, 2))
