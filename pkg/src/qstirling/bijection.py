"""The encoding of trees as quasi-Stirling words, and its inverse."""

from __future__ import annotations

from typing import Sequence

from .trees import Tree, gadget
from .words import Multiset, Word


def first(t: Tree) -> int:
    """Label of the leftmost child of the root."""
    return t.children[0].label


def _phi_forest(forest: Sequence[Tree]) -> list[int]:
    out: list[int] = []
    for g in forest:
        r = g.label
        out.append(r)
        for even in g.children:
            out.extend(_phi_forest(even.children))
            out.append(r)
    return out


def phi(t: Tree) -> Word:
    """Read the tree as a word.

    A leaf gadget r contributes ``r``; a gadget with even subtrees T_1..T_k
    contributes ``r phi(T_1) r ... r phi(T_k) r``. Gadgets are read left to
    right, so the root label itself never appears.
    """
    return tuple(_phi_forest(t.children))


def _parse_forest(w: Sequence[int], occ: dict[int, list[int]], lo: int, hi: int) -> tuple[Tree, ...]:
    forest: list[Tree] = []
    while lo < hi:
        r = w[lo]
        cuts = occ[r]
        # every copy of r must sit in [lo, hi) with the first one at lo;
        # otherwise some value straddles two copies of another
        if cuts[0] != lo or cuts[-1] >= hi:
            raise ValueError(f"value {r} at position {lo} breaks the nesting; not quasi-Stirling")
        kids = [_parse_forest(w, occ, a + 1, b) for a, b in zip(cuts, cuts[1:])]
        forest.append(gadget(r, kids))
        lo = cuts[-1] + 1
    return tuple(forest)


def phi_inverse(w: Sequence[int], m: Multiset | None = None) -> Tree:
    """The unique tree whose word is ``w``.

    The first letter r and its copies cut ``w`` into enclosed segments (one
    per even child of gadget r) and a trailing remainder (the later siblings).
    """
    w = tuple(w)
    if m is not None and Multiset.from_word(w) != m:
        raise ValueError(f"word {w} is not a permutation of {m}")
    occ: dict[int, list[int]] = {}
    for i, v in enumerate(w):
        occ.setdefault(v, []).append(i)
    return Tree(0, _parse_forest(w, occ, 0, len(w)))
