"""Exit criteria. Each test prints one PASS/FAIL line, repeated in the summary.

Run alone with ``pytest tests/test_acceptance.py -s``.
"""

import time
from contextlib import contextmanager
from math import prod

import pytest

from conftest import ACCEPTANCE_LINES
from qstirling.bijection import phi_inverse
from qstirling.gamma import compute_polynomial
from qstirling.poly import var
from qstirling.trees import TreeStats, tree_stats
from qstirling.verify import run_verify
from qstirling.words import (
    Multiset, enumerate_words, is_quasi_stirling, is_stirling, linear_stats,
    parse_word,
)

x, y, z = var(0), var(1), var(2)


@contextmanager
def criterion(number, name):
    ok = False
    start = time.perf_counter()
    try:
        yield
        ok = True
    finally:
        line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {name} ({time.perf_counter() - start:.2f}s)"
        ACCEPTANCE_LINES.append(line)
        print(line)


def best_of(fn, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def assert_clean(report, max_seconds=None):
    assert report.failures == [], report.to_text()
    assert report.checks > 0
    if max_seconds is not None:
        assert report.millis <= max_seconds * 1000, f"{report.millis} ms"


@pytest.fixture(scope="module")
def bijection_report():
    return run_verify("bijection", "K<=8")


def test_criterion_1_set_reproduction():
    with criterion(1, "quasi-Stirling and Stirling sets of {1^2 2^2}"):
        m = Multiset.of(2, 2)

        def sets():
            words = list(enumerate_words(m))
            return ({w for w in words if is_quasi_stirling(w)}, {w for w in words if is_stirling(w)})

        quasi, stirling = sets()
        assert quasi == {parse_word(w) for w in ("1221", "2112", "1122", "2211")}
        assert stirling == {parse_word(w) for w in ("1221", "2211", "1122")}
        assert best_of(sets) < 1e-3


def test_criterion_2_worked_example():
    with criterion(2, "statistics of 2773516455 and its tree"):
        w = parse_word("2773516455")

        def stats():
            return linear_stats(w), tree_stats(phi_inverse(w))

        ls, ts = stats()
        assert ls[:3] == (5, 4, 2)
        assert ts == TreeStats(casc=5, cdes=4, eleaf=2, dcdes=0, dcasc=1, cpeak=4, cval=4)
        assert best_of(stats) < 1e-3


def test_criterion_3_bijection(bijection_report):
    seconds = bijection_report.millis / 1000
    with criterion(3, f"bijection, round trips, statistic transport, Stirling restriction, K<=8, sweep {seconds:.1f}s"):
        assert_clean(bijection_report, max_seconds=60)
        for check in ("phi-injective", "phi-onto-quasi", "round-trip-tree", "round-trip-word",
                      "transport(cdes,casc,eleaf)=(des,asc,plat)", "stirling<=>weakly-increasing"):
            assert bijection_report.check_counts[check] > 0


def test_criterion_4_observation():
    with criterion(4, "vertex-class identities on every tree, K<=8"):
        assert_clean(run_verify("observation", "K<=8"))


def test_criterion_5_fs_action():
    with criterion(5, "FS-action involution/commutation/invariance/orbits, K<=7"):
        report = run_verify("fs", "K<=7")
        assert_clean(report, max_seconds=120)
        for check in ("involution", "commute", "invariant(eleaf,cpeak,cval)", "toggle", "closure",
                      "weakly-increasing-preserved", "orbit-polynomial", "orbit-partition"):
            assert report.check_counts[check] > 0


def test_criterion_6_partial_gamma():
    with criterion(6, "partial gamma tables and tree-count interpretation, K<=8"):
        report = run_verify("gamma", "K<=8")
        assert_clean(report)
        assert not any(k.startswith("gamma_i0") for k in report.notes)


def test_criterion_7_collapsed_multiset():
    with criterion(7, "Q-bar(M) = Q-bar(M') = Q(M'), K<=8"):
        assert_clean(run_verify("mprime", "K<=8"))
        expected = 2 * x**2 * y**2 * z + x**2 * y * z**2 + x * y**2 * z**2
        assert compute_polynomial(Multiset.of(2, 2), "quasi") == expected
        assert compute_polynomial(Multiset.of(3, 1), "quasi") == expected


def test_criterion_8_equidistribution():
    with criterion(8, "asc, des, plat equidistributed on Stirling words of {1^2..n^2}, n<=4"):
        report = run_verify("equidist", "n<=4")
        assert_clean(report)
        counts = [sum(1 for w in enumerate_words(Multiset((2,) * n)) if is_stirling(w)) for n in range(1, 5)]
        assert counts == [prod(range(1, 2 * n, 2)) for n in range(1, 5)] == [1, 3, 15, 105]


def test_criterion_9_two_oracle_trees(bijection_report):
    with criterion(9, "enumerate_trees equals phi_inverse of quasi words, K<=8"):
        assert bijection_report.check_counts["two-oracle-trees"] == 255
        assert "two-oracle-trees" not in bijection_report.failure_counts
