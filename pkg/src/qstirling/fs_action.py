"""Valley hopping on trees: the involutions psi_u and their orbits.

psi_u only ever reorders the odd children of one even vertex (each child
moving with its whole subtree), so the vertex identities of
:func:`~qstirling.trees.vertex_ids` stay valid across applications.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

from .poly import Poly, xy_basis
from .trees import (
    Path, Tree, VertexClass, VertexId, classify_vertex, node_at, size, tree_stats,
    vertex_ids, vertex_sequence,
)
from .words import CyclicClass, cdes_set, classify_cyclic, cyclic_factorization

TOGGLING = (VertexClass.DOUBLE_ASCENT, VertexClass.DOUBLE_DESCENT)


class VerificationError(AssertionError):
    """An identity that should hold for every tree failed."""


def hop(seq: Sequence[int], pos: int) -> tuple[int, ...]:
    """Move ``seq[pos]`` across its smaller neighbors, keeping ``seq[0]`` first.

    With cyclic factorization W1 . p . W2 . W3 the new cycle is W2 . p . W1 . W3.
    """
    f = cyclic_factorization(seq, pos)
    cycle = (*f.w2, seq[pos], *f.w1, *f.w3)
    start = cycle.index(seq[0])
    return cycle[start:] + cycle[:start]


def _replace_at(t: Tree, path: Path, new: Tree) -> Tree:
    if not path:
        return new
    i = path[0]
    kids = list(t.children)
    kids[i] = _replace_at(kids[i], path[1:], new)
    return Tree(t.label, tuple(kids))


def psi(t: Tree, path: Sequence[int]) -> Tree:
    """The tree FS-action at the vertex addressed by ``path``.

    Even leaves, peaks and valleys (the root is always a valley) are fixed.
    A double cyclic ascent or descent hops within its anchored sequence: the
    parent's sequence for an odd vertex, its own sequence for an even one.
    """
    path = tuple(path)
    cls = classify_vertex(t, path)
    if cls not in TOGGLING:
        return t
    if len(path) % 2:
        anchor, pos = path[:-1], path[-1] + 1
    else:
        anchor, pos = path, 0
    node = node_at(t, anchor)
    seq = vertex_sequence(t, anchor)
    new_seq = hop(seq, pos)

    f = cyclic_factorization(seq, pos)
    target = cdes_set((*f.w2, seq[pos], *f.w1, *f.w3))
    if cdes_set(new_seq) != target:
        raise VerificationError(f"hop of {seq} at {pos} gives CDES {cdes_set(new_seq)}, wanted {target}")
    before = classify_cyclic(seq, pos)
    after = classify_cyclic(new_seq, new_seq.index(seq[pos]))
    if {before, after} != {CyclicClass.DOUBLE_ASCENT, CyclicClass.DOUBLE_DESCENT}:
        raise VerificationError(f"hop of {seq} at {pos} did not toggle: {before} -> {after}")

    by_label = {c.label: c for c in node.children}
    return _replace_at(t, anchor, Tree(node.label, tuple(by_label[v] for v in new_seq[1:])))


def psi_set(t: Tree, vids: Iterable[VertexId]) -> Tree:
    """Compose psi over a set of vertex identities (order does not matter)."""
    for vid in sorted(set(vids)):
        paths = vertex_ids(t)
        if vid not in paths:
            raise KeyError(f"no vertex with identity {vid}")
        t = psi(t, paths[vid])
    return t


def hop_alternatives(seq: Sequence[int], pos: int) -> list[tuple[int, ...]]:
    """Every rearrangement of seq[1:] (seq[0] fixed) with the hopped CDES set.

    The defining condition only pins the cyclic descent set; this brute force
    shows when that leaves more than one arrangement.
    """
    f = cyclic_factorization(seq, pos)
    target = cdes_set((*f.w2, seq[pos], *f.w1, *f.w3))
    return [(seq[0], *p) for p in permutations(seq[1:]) if cdes_set((seq[0], *p)) == target]


def action_table(trees: Iterable[Tree]) -> dict[Tree, dict[VertexId, Tree]]:
    """psi at every vertex of every tree, keyed by vertex identity."""
    return {t: {vid: psi(t, p) for vid, p in vertex_ids(t).items()} for t in trees}


@dataclass(frozen=True)
class Orbit:
    members: tuple[Tree, ...]
    representative: Tree

    def __len__(self) -> int:
        return len(self.members)


def orbit(t: Tree, table: dict[Tree, dict[VertexId, Tree]] | None = None) -> Orbit:
    """Closure of ``t`` under all psi_u, with its unique dcdes = 0 member."""
    seen = {t}
    queue = deque([t])
    while queue:
        s = queue.popleft()
        images = table[s].values() if table is not None else (psi(s, p) for p in vertex_ids(s).values())
        for img in images:
            if img not in seen:
                seen.add(img)
                queue.append(img)
    members = tuple(sorted(seen))
    reps = [s for s in members if tree_stats(s).dcdes == 0]
    if len(reps) != 1:
        raise VerificationError(f"orbit of {t} has {len(reps)} members without double descents")
    return Orbit(members, reps[0])


def orbits(trees: Iterable[Tree], table: dict[Tree, dict[VertexId, Tree]] | None = None) -> list[Orbit]:
    """Partition ``trees`` into orbits, ordered by representative."""
    done: set[Tree] = set()
    out = []
    for t in trees:
        if t not in done:
            o = orbit(t, table)
            done.update(o.members)
            out.append(o)
    return sorted(out, key=lambda o: o.representative)


def orbit_polynomial(o: Orbit) -> Poly:
    """Sum of x^casc y^cdes over the orbit, checked against its closed form.

    Raises VerificationError if the sum is not
    (xy)^cdes(rep) (x+y)^(K+1-eleaf-2cdes(rep)).
    """
    total = Poly.zero(2)
    for s in o.members:
        st = tree_stats(s)
        total = total + Poly.monomial((st.casc, st.cdes))
    rep = tree_stats(o.representative)
    K = size(o.representative) - 1
    expected = xy_basis(rep.cdes, K + 1 - rep.eleaf)
    if total != expected:
        raise VerificationError(f"orbit of {o.representative}: sum {total} != {expected}")
    return total
