from itertools import combinations, permutations

import pytest

from qstirling.bijection import phi_inverse
from qstirling.trees import (
    InvalidPath, Tree, TreeStats, VertexClass, classify_vertex, enumerate_trees, from_json,
    from_text, is_valid, is_weakly_increasing, iter_vertices, multiset_of, size, to_json,
    to_text, tree_stats, validate, vertex_ids, vertex_sequence,
)
from qstirling.words import Multiset, is_stirling, multisets_up_to, parse_word

EXAMPLE_WORD = parse_word("2773516455")
EXAMPLE_M = Multiset.of(1, 1, 1, 1, 3, 1, 2)


@pytest.fixture
def big_example():
    return phi_inverse(EXAMPLE_WORD)


def T(text):
    return from_text(text)


def brute_quasi_count(m):
    def ok(w):
        return not any(w[i] == w[k] and w[j] == w[l] and w[i] != w[j]
                       for i, j, k, l in combinations(range(len(w)), 4))
    return sum(ok(w) for w in set(permutations(m.elements())))


def test_big_example_reconstruction(big_example):
    assert to_text(big_example) == "0(2,7(7),3,5(5(1,6,4),5))"
    assert validate(big_example, EXAMPLE_M) is None


def test_validate_examples():
    assert validate(T("0(1)"), Multiset.of(1)) is None
    v = validate(T("5(1)"), Multiset.of(1))
    assert v.clause == "root-label" and v.path == ()
    v = validate(T("0(2(2),1(1))"), Multiset.of(1, 2))
    assert v.clause == "odd-children" and v.path == (1,)
    v = validate(T("0(1,2)"), Multiset.of(1, 1, 1))
    assert v.clause == "labels"
    v = validate(T("0(1,1)"), Multiset.of(2))
    assert v.clause == "even-children"
    # value 1 repeated as a second gadget under an even copy of itself
    v = validate(T("0(1(1(1)))"), Multiset.of(2))
    assert v.clause in ("odd-children", "even-children")


def test_vertex_sequence(big_example):
    assert vertex_sequence(T("0(1,2)")) == (0, 1, 2)
    assert vertex_sequence(big_example, (3,)) == (5, 5, 5)
    assert vertex_sequence(big_example, (0,)) == (2,)
    with pytest.raises(InvalidPath):
        vertex_sequence(big_example, (9,))


def test_classify_vertex(big_example):
    t = T("0(1,2)")
    assert classify_vertex(t, ()) is VertexClass.VALLEY
    assert classify_vertex(t, (0,)) is VertexClass.DOUBLE_ASCENT
    assert classify_vertex(t, (1,)) is VertexClass.PEAK
    classes = [classify_vertex(big_example, p) for p, _ in iter_vertices(big_example)]
    assert classes.count(VertexClass.EVEN_LEAF) == 2
    with pytest.raises(InvalidPath):
        classify_vertex(t, (2,))


@pytest.mark.parametrize("text, stats", [
    ("0(1,2)", TreeStats(casc=2, cdes=1, eleaf=0, dcdes=0, dcasc=1, cpeak=1, cval=1)),
    ("0(2,1)", TreeStats(casc=1, cdes=2, eleaf=0, dcdes=1, dcasc=0, cpeak=1, cval=1)),
])
def test_tree_stats_small(text, stats):
    assert tree_stats(T(text)) == stats


def test_tree_stats_big_example(big_example):
    assert tree_stats(big_example) == TreeStats(casc=5, cdes=4, eleaf=2, dcdes=0, dcasc=1, cpeak=4, cval=4)


def test_tree_stats_agrees_with_classify(big_example):
    counts = {c: 0 for c in VertexClass}
    for p, _ in iter_vertices(big_example):
        counts[classify_vertex(big_example, p)] += 1
    s = tree_stats(big_example)
    assert (s.eleaf, s.dcdes, s.dcasc, s.cpeak, s.cval) == tuple(counts[c] for c in VertexClass)


@pytest.mark.parametrize("ks, expected", [
    ((1, 1), ["0(1,2)", "0(2,1)"]),
    ((1,), ["0(1)"]),
])
def test_enumerate_trees_examples(ks, expected):
    assert [to_text(t) for t in enumerate_trees(Multiset(ks))] == expected


def test_enumerate_trees_22(m22):
    trees = list(enumerate_trees(m22))
    assert len(trees) == 4 == len(set(trees))


@pytest.mark.parametrize("m", list(multisets_up_to(6)), ids=str)
def test_enumerate_trees_count_and_validity(m):
    trees = list(enumerate_trees(m))
    assert len(trees) == len(set(trees)) == brute_quasi_count(m)
    for t in trees:
        assert is_valid(t, m)
        assert size(t) == m.K + 1
        assert multiset_of(t) == m
        assert len(vertex_ids(t)) == m.K + 1
        assert from_text(to_text(t)) == t
        assert from_json(to_json(t)) == t


def test_weakly_increasing_examples():
    assert is_weakly_increasing(T("0(2,1)"))
    assert not is_weakly_increasing(T("0(2(2(1)))"))
    # a Stirling word of a multiset with a repeated gadget maps into the weakly increasing family
    w = parse_word("1 1 2 3 5 6 5 7 5 4")
    assert is_stirling(w)
    t = phi_inverse(w)
    assert validate(t, Multiset.of(2, 1, 1, 1, 3, 1, 1)) is None
    assert is_weakly_increasing(t)


def test_text_and_json_forms():
    t = T("0( 1 , 2(2) )")
    assert to_text(t) == "0(1,2(2))"
    assert to_json(t) == '{"label":0,"children":[{"label":1,"children":[]},{"label":2,"children":[{"label":2,"children":[]}]}]}'
    for bad in ["0(1", "0(1,)", "0)", "(1)", "0(1)x"]:
        with pytest.raises(ValueError):
            from_text(bad)


def test_vertex_ids(big_example):
    ids = vertex_ids(big_example)
    assert ids[(0, 0)] == ()
    assert ids[(5, 0)] == (3,)
    assert ids[(5, 1)] == (3, 0)
    assert ids[(5, 2)] == (3, 1)
    assert ids[(1, 0)] == (3, 0, 0)
