"""Statistic polynomials and their partial gamma expansions.

Families:

* ``quasi``    quasi-Stirling words, x^asc y^des z^plat
* ``stirling`` Stirling words, same weight
* ``trees``    all ordered labeled trees, x^casc y^cdes z^eleaf
* ``itrees``   weakly increasing trees, same weight
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .poly import Poly, xy_basis
from .trees import Tree, TreeStats, enumerate_trees, is_weakly_increasing, tree_stats
from .words import Multiset, Word, enumerate_words, is_quasi_stirling, is_stirling, linear_stats

FAMILIES = ("quasi", "stirling", "trees", "itrees")


class GammaExpansionError(ValueError):
    def __init__(self, slice_index: int, reason: str):
        super().__init__(f"slice z^{slice_index}: {reason}")
        self.slice_index = slice_index
        self.reason = reason


def family_words(m: Multiset, family: str) -> Iterator[Word]:
    pred = {"quasi": is_quasi_stirling, "stirling": is_stirling}[family]
    for w in enumerate_words(m):
        # every Stirling word is quasi-Stirling; the cheap test filters first
        if is_quasi_stirling(w) and pred(w):
            yield w


def family_trees(m: Multiset, family: str) -> Iterator[Tree]:
    if family not in ("trees", "itrees"):
        raise ValueError(f"not a tree family: {family!r}")
    for t in enumerate_trees(m):
        if family == "trees" or is_weakly_increasing(t):
            yield t


def word_polynomial(words: Iterable[Word]) -> Poly:
    """Sum of x^asc y^des z^plat."""
    counts: Counter[tuple[int, int, int]] = Counter()
    for w in words:
        s = linear_stats(w)
        counts[(s.asc, s.des, s.plat)] += 1
    return Poly(counts, nvars=3)


def tree_polynomial(stats: Iterable[TreeStats]) -> Poly:
    """Sum of x^casc y^cdes z^eleaf over precomputed tree statistics."""
    counts = Counter((s.casc, s.cdes, s.eleaf) for s in stats)
    return Poly(counts, nvars=3)


def compute_polynomial(m: Multiset, family: str) -> Poly:
    if family in ("quasi", "stirling"):
        return word_polynomial(family_words(m, family))
    if family in ("trees", "itrees"):
        return tree_polynomial(tree_stats(t) for t in family_trees(m, family))
    raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")


def slice_by_z(p: Poly) -> list[tuple[int, Poly]]:
    """Nonzero coefficients s_i(x, y) of z^i, by increasing i."""
    slices: dict[int, dict[tuple[int, int], int]] = {}
    for (a, b, c), coeff in p.terms.items():
        slices.setdefault(c, {})[(a, b)] = coeff
    return [(i, Poly(slices[i], nvars=2)) for i in sorted(slices)]


@dataclass
class GammaExpansion:
    """Coefficients of s in the basis (xy)^j (x+y)^(d-2j).

    ``failure`` is None on success and otherwise says which condition broke;
    ``gammas`` then holds whatever the elimination produced.
    """

    degree: int | None
    gammas: dict[int, int] = field(default_factory=dict)
    failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None


def gamma_expand(s: Poly) -> GammaExpansion:
    if not s:
        return GammaExpansion(None)
    if not s.is_homogeneous():
        return GammaExpansion(None, failure=f"non-homogeneous: degrees {sorted(s.degrees())}")
    (d,) = s.degrees()
    for (a, b), c in s.terms.items():
        if s.coeff((b, a)) != c:
            return GammaExpansion(d, failure=f"asymmetric: x^{a}y^{b} has {c}, x^{b}y^{a} has {s.coeff((b, a))}")
    residual = s
    gammas: dict[int, int] = {}
    # the basis element for j has lowest x-power j with coefficient 1
    for j in range(d // 2 + 1):
        g = residual.coeff((j, d - j))
        if g:
            gammas[j] = g
            residual = residual - g * xy_basis(j, d)
    if residual:
        return GammaExpansion(d, gammas, failure=f"nonzero residual {residual}")
    negative = {j: g for j, g in gammas.items() if g < 0}
    if negative:
        j = min(negative)
        return GammaExpansion(d, gammas, failure=f"negative gamma_{j} = {negative[j]}")
    return GammaExpansion(d, gammas)


@dataclass
class GammaTable:
    """Nonzero gamma_{i,j}: coefficient of z^i (xy)^j (x+y)^(K+1-i-2j)."""

    K: int
    entries: dict[tuple[int, int], int]
    multiset: Multiset | None = None
    family: str | None = None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GammaTable):
            return NotImplemented
        return self.K == other.K and self.entries == other.entries

    def total(self) -> int:
        return sum(self.entries.values())

    def to_poly(self) -> Poly:
        x2z = Poly.zero(3)
        for (i, j), g in sorted(self.entries.items()):
            base = xy_basis(j, self.K + 1 - i)
            x2z = x2z + Poly({(a, b, i): c * g for (a, b), c in base.terms.items()}, nvars=3)
        return x2z

    def rows(self) -> list[tuple[int, int, int]]:
        return [(i, j, g) for (i, j), g in sorted(self.entries.items())]

    def to_json(self) -> str:
        obj = {
            "multiset": list(self.multiset.multiplicities) if self.multiset else None,
            "family": self.family,
            "K": self.K,
            "gamma": [{"i": i, "j": j, "value": g} for i, j, g in self.rows()],
        }
        return json.dumps(obj)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "j", "value"])
        w.writerows(self.rows())
        return buf.getvalue()

    def to_text(self) -> str:
        by_i: dict[int, list[str]] = {}
        for i, j, g in self.rows():
            e = self.K + 1 - i - 2 * j
            term = f"{g}" + (f"(xy)^{j}" if j else "") + (f"(x+y)^{e}" if e else "")
            by_i.setdefault(i, []).append(term)
        lines = [f"z^{i}: " + " + ".join(terms) for i, terms in sorted(by_i.items())]
        return "\n".join(lines) if lines else "0"


def partial_gamma(p: Poly, K: int) -> GammaTable:
    """Expand every z-slice; slice i must be homogeneous of degree K+1-i.

    Raises GammaExpansionError naming the first slice that fails.
    """
    entries: dict[tuple[int, int], int] = {}
    for i, s in slice_by_z(p):
        ex = gamma_expand(s)
        if ex.failure is not None:
            raise GammaExpansionError(i, ex.failure)
        if ex.degree != K + 1 - i:
            raise GammaExpansionError(i, f"degree {ex.degree}, expected {K + 1 - i}")
        entries.update({(i, j): g for j, g in ex.gammas.items()})
    return GammaTable(K, entries)


def count_gamma(stats: Iterable[TreeStats], K: int) -> GammaTable:
    """Bin trees without double cyclic descents by (eleaf, cdes)."""
    counts = Counter((s.eleaf, s.cdes) for s in stats if s.dcdes == 0)
    return GammaTable(K, dict(counts))


def gamma_from_trees(m: Multiset, family: str = "trees") -> GammaTable:
    """Count trees without double cyclic descents by (eleaf, cdes)."""
    table = count_gamma((tree_stats(t) for t in family_trees(m, family)), m.K)
    table.multiset, table.family = m, family
    return table


def gamma_table(m: Multiset, family: str) -> GammaTable:
    """partial_gamma of the family polynomial, tagged with its origin."""
    table = partial_gamma(compute_polynomial(m, family), m.K)
    table.multiset, table.family = m, family
    return table
