"""Named verification suites that sweep the identities over many multisets.

Each suite runs one multiset at a time and records, per check id, how many
times it ran and the first failing witness. Multisets are processed in
canonical order (K, then multiplicities), so the first witness is the
smallest one.
"""

from __future__ import annotations

import json
import re
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import prod
from typing import Callable

from .bijection import phi, phi_inverse
from .fs_action import (
    TOGGLING, VerificationError, action_table, hop_alternatives, orbit_polynomial, orbits,
)
from .gamma import (
    GammaExpansionError, compute_polynomial, count_gamma, family_words, partial_gamma,
    tree_polynomial, word_polynomial,
)
from .poly import Poly
from .trees import (
    classify_vertex, enumerate_trees, from_json, from_text, is_weakly_increasing,
    to_json, to_text, tree_stats, validate, vertex_ids, vertex_sequence,
)
from .words import (
    Multiset, enumerate_words, format_word, is_quasi_stirling, is_stirling, linear_stats,
    multisets_up_to,
)

DEFAULT_CEILING = 9
DEFAULT_RANGES = {"fs": "K<=7", "equidist": "n<=4"}
FALLBACK_RANGE = "K<=8"
# brute-force alternative arrangements only while sibling lists stay short
AMBIGUITY_SWEEP_MAX_K = 6
SERIALIZATION_SWEEP_MAX_K = 6


@dataclass
class Failure:
    id: str
    multiset: Multiset | None
    witness: str


@dataclass
class Partial:
    checks: Counter = field(default_factory=Counter)
    failures: dict[str, Failure] = field(default_factory=dict)
    failure_counts: Counter = field(default_factory=Counter)
    notes: Counter = field(default_factory=Counter)

    def check(self, check_id: str, ok: bool, m: Multiset | None, witness: Callable[[], str] | str = "") -> bool:
        self.checks[check_id] += 1
        if not ok:
            self.failure_counts[check_id] += 1
            if check_id not in self.failures:
                w = witness() if callable(witness) else witness
                self.failures[check_id] = Failure(check_id, m, w)
        return ok

    def merge(self, other: Partial) -> None:
        self.checks.update(other.checks)
        self.failure_counts.update(other.failure_counts)
        self.notes.update(other.notes)
        for k, f in other.failures.items():
            self.failures.setdefault(k, f)


@dataclass
class VerifyReport:
    suite: str
    range: str
    multisets: list[Multiset]
    checks: int
    failures: list[Failure]
    failure_counts: dict[str, int]
    notes: dict[str, int]
    millis: int
    check_counts: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        return json.dumps({
            "suite": self.suite,
            "range": self.range,
            "checks": self.checks,
            "failures": [
                {"id": f.id, "multiset": list(f.multiset.multiplicities) if f.multiset else None,
                 "witness": f.witness, "count": self.failure_counts[f.id]}
                for f in self.failures
            ],
            "notes": self.notes,
            "millis": self.millis,
        })

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{self.suite} [{self.range}]: {status}, {self.checks} checks over "
                 f"{len(self.multisets)} multisets, {sum(self.failure_counts.values())} failures"]
        for f in self.failures:
            lines.append(f"  FAIL {f.id} ({self.failure_counts[f.id]}x) first at {f.multiset}: {f.witness}")
        for k, v in sorted(self.notes.items()):
            lines.append(f"  note {k}: {v}")
        return "\n".join(lines)


# -- suites -----------------------------------------------------------------

def suite_stats(m: Multiset, out: Partial) -> None:
    words = list(enumerate_words(m))
    out.check("count-words", len(words) == len(set(words)) == m.count_words(), m,
              lambda: f"{len(words)} words, expected {m.count_words()}")
    for w in words:
        s = linear_stats(w)
        out.check("asc+des+plat=K+1", s.asc + s.des + s.plat == m.K + 1, m, lambda: format_word(w))
        out.check("ddes<=des", s.ddes <= s.des, m, lambda: format_word(w))
        out.check("stirling=>quasi", not is_stirling(w) or is_quasi_stirling(w), m, lambda: format_word(w))


def suite_bijection(m: Multiset, out: Partial) -> None:
    trees = list(enumerate_trees(m))
    quasi = [w for w in enumerate_words(m) if is_quasi_stirling(w)]
    images = [phi(t) for t in trees]
    out.check("phi-injective", len(set(images)) == len(images), m, "repeated image")
    out.check("phi-onto-quasi", set(images) == set(quasi), m,
              lambda: f"{len(set(images) ^ set(quasi))} words in symmetric difference")
    parsed = {w: phi_inverse(w) for w in quasi}
    out.check("two-oracle-trees", sorted(parsed.values()) == sorted(trees), m,
              "enumerate_trees and phi_inverse disagree")
    for t, w in zip(trees, images):
        out.check("tree-valid", validate(t, m) is None, m, lambda: f"{to_text(t)}: {validate(t, m)}")
        out.check("round-trip-tree", parsed.get(w) == t, m, lambda: to_text(t))
        if m.K <= SERIALIZATION_SWEEP_MAX_K:
            out.check("round-trip-text", from_text(to_text(t)) == t and from_json(to_json(t)) == t, m,
                      lambda: to_text(t))
        ts, ls = tree_stats(t), linear_stats(w)
        out.check("transport(cdes,casc,eleaf)=(des,asc,plat)",
                  (ts.cdes, ts.casc, ts.eleaf) == (ls.des, ls.asc, ls.plat), m,
                  lambda: f"{to_text(t)} -> {format_word(w)}")
        out.check("stirling<=>weakly-increasing", is_stirling(w) == is_weakly_increasing(t), m,
                  lambda: f"{to_text(t)} -> {format_word(w)}")
    for w, t in parsed.items():
        out.check("round-trip-word", phi(t) == w, m, lambda: format_word(w))


def suite_observation(m: Multiset, out: Partial) -> None:
    for t in enumerate_trees(m):
        s = tree_stats(t)
        out.check("classes:eleaf+dcdes+dcasc+cpeak+cval=K+1",
                  s.eleaf + s.dcdes + s.dcasc + s.cpeak + s.cval == m.K + 1, m, lambda: to_text(t))
        out.check("classes:cpeak=cval", s.cpeak == s.cval, m, lambda: to_text(t))
        out.check("classes:cdes=cval+dcdes", s.cdes == s.cval + s.dcdes, m, lambda: to_text(t))
        out.check("classes:casc=cpeak+dcasc", s.casc == s.cpeak + s.dcasc, m, lambda: to_text(t))


def suite_fs(m: Multiset, out: Partial) -> None:
    trees = list(enumerate_trees(m))
    tree_set = set(trees)
    try:
        table = action_table(trees)
    except VerificationError as exc:
        out.check("psi-postcondition", False, m, str(exc))
        return
    stats = {t: tree_stats(t) for t in trees}
    for t in trees:
        acts = table[t]
        paths = vertex_ids(t)
        st = stats[t]
        for u, a in acts.items():
            wit = lambda: f"{to_text(t)} at {u}"
            if not out.check("closure", a in tree_set, m, wit):
                continue
            out.check("involution", table[a][u] == t, m, wit)
            sa = stats[a]
            out.check("invariant(eleaf,cpeak,cval)",
                      (st.eleaf, st.cpeak, st.cval) == (sa.eleaf, sa.cpeak, sa.cval), m, wit)
            before = classify_vertex(t, paths[u])
            after = classify_vertex(a, vertex_ids(a)[u])
            if before in TOGGLING:
                out.check("toggle", {before, after} == set(TOGGLING), m, wit)
            else:
                out.check("fixed", a == t, m, wit)
            out.check("weakly-increasing-preserved",
                      is_weakly_increasing(a) == is_weakly_increasing(t), m, wit)
            for w, b in acts.items():
                out.check("commute", table[a][w] == table[b][u], m,
                          lambda: f"{to_text(t)} at {u},{w}")
            if before in TOGGLING and m.K <= AMBIGUITY_SWEEP_MAX_K:
                p = paths[u]
                anchor, pos = (p[:-1], p[-1] + 1) if len(p) % 2 else (p, 0)
                alts = hop_alternatives(vertex_sequence(t, anchor), pos)
                out.notes["hops"] += 1
                if len(alts) > 1:
                    out.notes["hops-with-other-CDES-arrangements"] += 1
    try:
        orbs = orbits(trees, table)
    except VerificationError as exc:
        out.check("unique-representative", False, m, str(exc))
        return
    members = [t for o in orbs for t in o.members]
    out.check("orbit-partition", sorted(members) == sorted(trees), m, "orbits overlap or miss trees")
    out.check("orbits=dcdes0-trees", len(orbs) == sum(1 for s in stats.values() if s.dcdes == 0), m,
              lambda: f"{len(orbs)} orbits")
    total = Poly.zero(3)
    for o in orbs:
        out.check("orbit-size-divides", (1 << (m.K + 1)) % len(o) == 0, m, lambda: to_text(o.representative))
        try:
            p = orbit_polynomial(o)
        except VerificationError as exc:
            out.check("orbit-polynomial", False, m, str(exc))
            continue
        out.check("orbit-polynomial", True, m)
        e = stats[o.representative].eleaf
        total = total + Poly({(a, b, e): c for (a, b), c in p.terms.items()}, nvars=3)
    out.check("orbit-sum=T_M", total == compute_polynomial(m, "trees"), m, lambda: str(total))


def suite_gamma(m: Multiset, out: Partial) -> None:
    quasi_words = [w for w in enumerate_words(m) if is_quasi_stirling(w)]
    trees = list(enumerate_trees(m))
    stats = [tree_stats(t) for t in trees]
    inc_stats = [s for t, s in zip(trees, stats) if is_weakly_increasing(t)]
    polys = {
        "quasi": word_polynomial(quasi_words),
        "stirling": word_polynomial(w for w in quasi_words if is_stirling(w)),
        "trees": tree_polynomial(stats),
        "itrees": tree_polynomial(inc_stats),
    }
    out.check("bridge:quasi=trees", polys["quasi"] == polys["trees"], m,
              lambda: f"{polys['quasi']} vs {polys['trees']}")
    out.check("bridge:stirling=itrees", polys["stirling"] == polys["itrees"], m,
              lambda: f"{polys['stirling']} vs {polys['itrees']}")
    tables = {}
    for f, p in polys.items():
        try:
            tables[f] = partial_gamma(p, m.K)
        except GammaExpansionError as exc:
            out.check(f"partial-gamma:{f}", False, m, str(exc))
            continue
        t = tables[f]
        out.check(f"partial-gamma:{f}", all(g > 0 for g in t.entries.values()), m, str(t.entries))
        out.check(f"reconstruct:{f}", t.to_poly() == p, m, str(p))
        if any(j == 0 for _, j in t.entries):
            out.notes[f"gamma_i0-nonzero:{f}"] += 1
    counted = {"quasi": count_gamma(stats, m.K), "stirling": count_gamma(inc_stats, m.K)}
    counted["trees"], counted["itrees"] = counted["quasi"], counted["stirling"]
    for f, t in tables.items():
        out.check(f"interpretation:{f}", t == counted[f], m,
                  lambda: f"{t.rows()} vs {counted[f].rows()}")


@lru_cache(maxsize=None)
def _collapsed_polys(mp: Multiset) -> tuple[Poly, Poly]:
    return compute_polynomial(mp, "quasi"), compute_polynomial(mp, "stirling")


def suite_mprime(m: Multiset, out: Partial) -> None:
    mp = m.collapsed()
    q = compute_polynomial(m, "quasi")
    qp, sp = _collapsed_polys(mp)
    out.check("quasi(M)=quasi(M')", q == qp, m, lambda: f"{q} vs {qp} for M'={mp}")
    out.check("quasi(M')=stirling(M')", qp == sp, m, lambda: f"{qp} vs {sp} for M'={mp}")


def suite_equidist(m: Multiset, out: Partial) -> None:
    if set(m.multiplicities) != {2}:
        return
    words = list(family_words(m, "stirling"))
    double_factorial = prod(range(1, 2 * m.n, 2))
    out.check("count=(2n-1)!!", len(words) == double_factorial, m, lambda: f"{len(words)}")
    stats = [linear_stats(w) for w in words]
    hists = {k: Counter(getattr(s, k) for s in stats) for k in ("asc", "des", "plat")}
    out.check("asc~des", hists["asc"] == hists["des"], m, lambda: str(hists))
    out.check("asc~plat", hists["asc"] == hists["plat"], m, lambda: str(hists))


SUITES: dict[str, Callable[[Multiset, Partial], None]] = {
    "stats": suite_stats,
    "bijection": suite_bijection,
    "fs": suite_fs,
    "observation": suite_observation,
    "gamma": suite_gamma,
    "mprime": suite_mprime,
    "equidist": suite_equidist,
}


# -- ranges -----------------------------------------------------------------

def parse_multiset(text: str) -> Multiset:
    """Caret form ``1^2 2^2 3`` (braces and commas allowed) or comma form ``2,2,1``.

    The comma form lists multiplicities k_1, ..., k_n.
    """
    s = text.strip().strip("{}").strip()
    if not s:
        raise ValueError("empty multiset")
    if "^" not in s and "," in s:
        try:
            return Multiset(tuple(int(t) for t in s.split(",")))
        except ValueError as exc:
            raise ValueError(f"malformed multiplicity list {text!r}: {exc}") from None
    counts: Counter[int] = Counter()
    for tok in re.split(r"[\s,]+", s):
        m = re.fullmatch(r"(\d+)(?:\^(-?\d+))?", tok)
        if not m:
            raise ValueError(f"malformed token {tok!r} in {text!r}")
        value, k = int(m.group(1)), int(m.group(2) or 1)
        if k < 1:
            raise ValueError(f"multiplicity of {value} must be >= 1, got {k}")
        counts[value] += k
    n = max(counts)
    missing = [v for v in range(1, n + 1) if v not in counts]
    if missing or 0 in counts:
        raise ValueError(f"values must be exactly 1..{n}; problem with {missing or [0]}")
    return Multiset(tuple(counts[v] for v in range(1, n + 1)))


def parse_range(spec: str) -> list[Multiset]:
    """``K<=b`` (all multisets with K <= b), ``n<=b`` ({1^2..m^2}, m <= b), or one multiset."""
    s = spec.replace(" ", "")
    m = re.fullmatch(r"([Kn])(<=|<)(\d+)", s)
    if not m:
        return [parse_multiset(spec)]
    bound = int(m.group(3)) - (m.group(2) == "<")
    if m.group(1) == "K":
        return list(multisets_up_to(bound))
    return [Multiset((2,) * k) for k in range(1, bound + 1)]


def _run_one(args: tuple[str, Multiset]) -> Partial:
    suite, m = args
    out = Partial()
    SUITES[suite](m, out)
    return out


def run_verify(suite: str, range_spec: str | None = None, *, ceiling: int = DEFAULT_CEILING,
               jobs: int = 1) -> VerifyReport:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)} or 'all'")
    range_spec = range_spec or DEFAULT_RANGES.get(suite, FALLBACK_RANGE)
    multisets = sorted(parse_range(range_spec), key=lambda x: (x.K, x.multiplicities))
    too_big = [x for x in multisets if x.K > ceiling]
    if too_big:
        raise ValueError(f"{too_big[0]} has K={too_big[0].K} above the ceiling {ceiling}")
    start = time.perf_counter()
    total = Partial()
    work = [(suite, x) for x in multisets]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            for part in pool.map(_run_one, work, chunksize=4):
                total.merge(part)
    else:
        for item in work:
            total.merge(_run_one(item))
    millis = int((time.perf_counter() - start) * 1000)
    return VerifyReport(
        suite=suite,
        range=range_spec,
        multisets=multisets,
        checks=sum(total.checks.values()),
        failures=list(total.failures.values()),
        failure_counts=dict(total.failure_counts),
        notes=dict(total.notes),
        millis=millis,
        check_counts=dict(total.checks),
    )
