"""Ordered labeled trees on {0} + M and their statistics.

Every value i appears as a *gadget*: one odd-level vertex labeled i carrying
k_i - 1 even-level children, all labeled i. Even vertices (the root included)
hold an ordered list of gadgets. A tree is a nested ``Tree(label, children)``
tuple, so trees hash, compare and sort like ordinary tuples.
"""

from __future__ import annotations

import enum
import json
from functools import lru_cache
from itertools import product
from typing import Iterator, NamedTuple, Sequence

from .words import CyclicClass, Multiset, classify_cyclic

Path = tuple[int, ...]
VertexId = tuple[int, int]


class Tree(NamedTuple):
    label: int
    children: tuple["Tree", ...] = ()

    def __str__(self) -> str:
        return to_text(self)


class InvalidPath(IndexError):
    pass


class Violation(NamedTuple):
    clause: str
    path: Path
    detail: str


class VertexClass(enum.Enum):
    EVEN_LEAF = "eleaf"
    DOUBLE_DESCENT = "dcdes"
    DOUBLE_ASCENT = "dcasc"
    PEAK = "cpeak"
    VALLEY = "cval"

    @classmethod
    def from_cyclic(cls, c: CyclicClass) -> VertexClass:
        return cls(c.value)


class TreeStats(NamedTuple):
    casc: int
    cdes: int
    eleaf: int
    dcdes: int
    dcasc: int
    cpeak: int
    cval: int


def node_at(t: Tree, path: Sequence[int]) -> Tree:
    node = t
    for depth, idx in enumerate(path):
        if not 0 <= idx < len(node.children):
            raise InvalidPath(f"index {idx} at depth {depth} of path {tuple(path)}")
        node = node.children[idx]
    return node


def vertex_sequence(t: Tree, path: Sequence[int] = ()) -> tuple[int, ...]:
    """The vertex's own label followed by its children's labels."""
    node = node_at(t, path)
    return (node.label, *(c.label for c in node.children))


def iter_vertices(t: Tree) -> Iterator[tuple[Path, Tree]]:
    """Preorder walk yielding (path, node)."""
    stack: list[tuple[Path, Tree]] = [((), t)]
    while stack:
        path, node = stack.pop()
        yield path, node
        for i in range(len(node.children) - 1, -1, -1):
            stack.append((path + (i,), node.children[i]))


def size(t: Tree) -> int:
    return 1 + sum(size(c) for c in t.children)


def multiset_of(t: Tree) -> Multiset:
    labels = [node.label for _, node in iter_vertices(t)]
    labels.remove(0)
    return Multiset.from_word(labels)


def validate(t: Tree, m: Multiset) -> Violation | None:
    """None when ``t`` belongs to the family for ``m``, else the first violation."""
    if t.label != 0:
        return Violation("root-label", (), f"root is labeled {t.label}, expected 0")
    labels: list[int] = []

    def walk(node: Tree, path: Path, odd: bool) -> Violation | None:
        kids = [c.label for c in node.children]
        if odd:
            v = node.label
            if not 1 <= v <= m.n:
                return Violation("labels", path, f"label {v} outside 1..{m.n}")
            if len(kids) != m.k(v) - 1:
                return Violation("odd-children", path,
                                 f"odd vertex {v} has {len(kids)} children, expected {m.k(v) - 1}")
            if any(c != v for c in kids):
                return Violation("odd-children", path, f"odd vertex {v} has a child with another label")
        elif len(set(kids)) != len(kids) or node.label in kids:
            return Violation("even-children", path, f"even vertex {node.label} has children {kids}")
        labels.extend(kids)
        for i, c in enumerate(node.children):
            bad = walk(c, path + (i,), not odd)
            if bad:
                return bad
        return None

    bad = walk(t, (), False)
    if bad:
        return bad
    want = sorted(m.elements())
    if sorted(labels) != want:
        return Violation("labels", (), f"labels {sorted(labels)} differ from {want}")
    return None


def is_valid(t: Tree, m: Multiset) -> bool:
    return validate(t, m) is None


def classify_vertex(t: Tree, path: Sequence[int]) -> VertexClass:
    path = tuple(path)
    node = node_at(t, path)
    if len(path) % 2 == 0:
        if not node.children:
            return VertexClass.EVEN_LEAF
        seq, pos = vertex_sequence(t, path), 0
    else:
        seq, pos = vertex_sequence(t, path[:-1]), path[-1] + 1
    c = classify_cyclic(seq, pos)
    if c is None:
        raise ValueError(f"vertex {path} sits in a tied sequence {seq}")
    return VertexClass.from_cyclic(c)


def tree_stats(t: Tree) -> TreeStats:
    casc = cdes = eleaf = dcdes = dcasc = cpeak = cval = 0
    stack: list[tuple[Tree, bool]] = [(t, True)]
    while stack:
        node, even = stack.pop()
        if not node.children:
            eleaf += even
            continue
        seq = (node.label, *(c.label for c in node.children))
        L = len(seq)
        # step[i] compares seq[i] with its cyclic successor: +1 descent, -1 ascent
        step = [(a > b) - (a < b) for a, b in zip(seq, seq[1:] + seq[:1])]
        cdes += step.count(1)
        casc += step.count(-1)
        if even:
            # position 0 is this vertex, positions 1.. are its odd children
            for i in range(L):
                before, after = step[i - 1], step[i]
                if before == 0 or after == 0:
                    raise ValueError(f"tied sequence {seq} at an even vertex")
                if before > 0:
                    if after > 0:
                        dcdes += 1
                    else:
                        cval += 1
                elif after > 0:
                    cpeak += 1
                else:
                    dcasc += 1
        stack.extend((c, not even) for c in node.children)
    return TreeStats(casc, cdes, eleaf, dcdes, dcasc, cpeak, cval)


def gadget(value: int, forests: Sequence[tuple[Tree, ...]]) -> Tree:
    """Odd vertex ``value`` whose even children carry the given forests."""
    return Tree(value, tuple(Tree(value, tuple(f)) for f in forests))


def enumerate_trees(m: Multiset) -> Iterator[Tree]:
    """Every tree of the family for ``m`` exactly once, in a deterministic order.

    A forest on a value set S is empty, or a leftmost gadget v in S whose
    k_v - 1 even children receive forests on disjoint parts of S - {v},
    followed by a forest on whatever is left.
    """

    @lru_cache(maxsize=None)
    def forests(values: tuple[int, ...]) -> tuple[tuple[Tree, ...], ...]:
        if not values:
            return ((),)
        out = []
        for v in values:
            rest = tuple(u for u in values if u != v)
            nbins = m.k(v)  # k_v - 1 child bins, then the sibling remainder
            for assign in product(range(nbins), repeat=len(rest)):
                parts = [tuple(u for u, b in zip(rest, assign) if b == i) for i in range(nbins)]
                for combo in product(*(forests(p) for p in parts)):
                    out.append((gadget(v, combo[:-1]),) + combo[-1])
        return tuple(out)

    for f in forests(tuple(range(1, m.n + 1))):
        yield Tree(0, f)


def is_weakly_increasing(t: Tree) -> bool:
    return all(c.label >= t.label and is_weakly_increasing(c) for c in t.children)


def vertex_ids(t: Tree) -> dict[VertexId, Path]:
    """Map rearrangement-stable identities to current paths.

    The root is (0, 0), the odd vertex of value i is (i, 0) and its j-th even
    child is (i, j). Sibling reordering never moves even children relative to
    each other, so these identities survive the FS-action.
    """
    ids: dict[VertexId, Path] = {}
    for path, node in iter_vertices(t):
        if not path:
            ids[(0, 0)] = path
        elif len(path) % 2:
            ids[(node.label, 0)] = path
        else:
            ids[(node.label, path[-1] + 1)] = path
    return ids


def to_text(t: Tree) -> str:
    if not t.children:
        return str(t.label)
    return f"{t.label}(" + ",".join(to_text(c) for c in t.children) + ")"


def from_text(text: str) -> Tree:
    """Parse ``label(child,child,...)``; whitespace is ignored."""
    s = "".join(text.split())
    pos = 0

    def parse() -> Tree:
        nonlocal pos
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if start == pos:
            raise ValueError(f"expected a label at offset {start} of {text!r}")
        label = int(s[start:pos])
        kids = []
        if pos < len(s) and s[pos] == "(":
            pos += 1
            kids.append(parse())
            while s[pos] == ",":
                pos += 1
                kids.append(parse())
            if s[pos] != ")":
                raise ValueError(f"expected ')' at offset {pos} of {text!r}")
            pos += 1
        return Tree(label, tuple(kids))

    try:
        t = parse()
    except IndexError:
        raise ValueError(f"unterminated tree text {text!r}") from None
    if pos != len(s):
        raise ValueError(f"trailing characters in {text!r}")
    return t


def to_json_obj(t: Tree) -> dict:
    return {"label": t.label, "children": [to_json_obj(c) for c in t.children]}


def from_json_obj(obj: dict) -> Tree:
    return Tree(int(obj["label"]), tuple(from_json_obj(c) for c in obj.get("children", [])))


def to_json(t: Tree) -> str:
    return json.dumps(to_json_obj(t), separators=(",", ":"))


def from_json(text: str) -> Tree:
    return from_json_obj(json.loads(text))
