"""
Partial gamma expansions
========================

Slice the trivariate polynomial by powers of z; each slice expands in the
basis (xy)^j (x+y)^(K+1-i-2j) with nonnegative integer coefficients, and
those coefficients count trees with no double cyclic descents.
"""

from qstirling.gamma import compute_polynomial, gamma_from_trees, gamma_table, slice_by_z
from qstirling.words import Multiset

m = Multiset.of(2, 2, 1)
for family in ("quasi", "stirling"):
    p = compute_polynomial(m, family)
    print(f"{family} {m}: {p}")
    for i, s in slice_by_z(p):
        print(f"  z^{i}: {s}")
    table = gamma_table(m, family)
    print(table.to_text())
    counted = gamma_from_trees(m, {"quasi": "trees", "stirling": "itrees"}[family])
    print("  matches tree count:", counted == table)

###############################################################################
# The quasi-Stirling polynomial only depends on K and n.

collapsed = m.collapsed()
print(f"\n{m} vs {collapsed}:", compute_polynomial(m, "quasi") == compute_polynomial(collapsed, "quasi"))
