"""Multisets, their permutations, and statistics on sequences.

A word is a plain tuple of positive integers. Linear statistics read the word
padded with a 0 on both ends; cyclic statistics read it around a circle.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from math import factorial, prod
from typing import Iterator, NamedTuple, Sequence

from sympy.utilities.iterables import multiset_permutations

Word = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Multiset:
    """The multiset {1^k_1, 2^k_2, ..., n^k_n} given by its multiplicities."""

    multiplicities: tuple[int, ...]

    def __post_init__(self):
        ks = tuple(int(k) for k in self.multiplicities)
        if not ks:
            raise ValueError("a multiset needs at least one value")
        if any(k < 1 for k in ks):
            raise ValueError(f"multiplicities must be >= 1, got {ks}")
        object.__setattr__(self, "multiplicities", ks)

    @classmethod
    def of(cls, *ks: int) -> Multiset:
        return cls(tuple(ks))

    @classmethod
    def from_word(cls, w: Sequence[int]) -> Multiset:
        counts = Counter(w)
        n = max(counts) if counts else 0
        return cls(tuple(counts.get(v, 0) for v in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.multiplicities)

    @property
    def K(self) -> int:
        return sum(self.multiplicities)

    def k(self, value: int) -> int:
        return self.multiplicities[value - 1]

    def elements(self) -> Word:
        """All elements in weakly increasing order."""
        return tuple(v for v, k in enumerate(self.multiplicities, 1) for _ in range(k))

    def count_words(self) -> int:
        return factorial(self.K) // prod(factorial(k) for k in self.multiplicities)

    def collapsed(self) -> Multiset:
        """{1^(K-n+1), 2, ..., n}: same quasi-Stirling polynomial as ``self``."""
        return Multiset((self.K - self.n + 1,) + (1,) * (self.n - 1))

    def __str__(self) -> str:
        parts = [str(v) if k == 1 else f"{v}^{k}" for v, k in enumerate(self.multiplicities, 1)]
        return "{" + " ".join(parts) + "}"


def compositions(total: int) -> Iterator[tuple[int, ...]]:
    """All compositions of ``total`` in lexicographic order."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            yield (first,) + rest


def multisets_up_to(max_K: int, min_K: int = 1) -> Iterator[Multiset]:
    """Every multiset with min_K <= K <= max_K, ordered by K then multiplicities."""
    for K in range(min_K, max_K + 1):
        for c in compositions(K):
            yield Multiset(c)


def enumerate_words(m: Multiset) -> Iterator[Word]:
    """Every distinct permutation of ``m`` once, in lexicographic order."""
    for p in multiset_permutations(list(m.elements())):
        yield tuple(p)


def is_quasi_stirling(w: Sequence[int]) -> bool:
    """No a...b...a...b with a != b.

    Equivalently the partition of positions by value is non-crossing, which a
    single stack pass decides.
    """
    remaining = Counter(w)
    stack: list[int] = []
    seen: set[int] = set()
    for v in w:
        remaining[v] -= 1
        if v in seen:
            if stack[-1] != v:
                return False
            if remaining[v] == 0:
                stack.pop()
        else:
            seen.add(v)
            if remaining[v]:
                stack.append(v)
    return True


def is_stirling(w: Sequence[int]) -> bool:
    """Every entry between two copies of a value is at least that value."""
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for i, v in enumerate(w):
        first.setdefault(v, i)
        last[v] = i
    return all(min(w[first[v]:last[v] + 1]) >= v for v in first if last[v] > first[v])


def first(w: Sequence[int]) -> int:
    return w[0]


class LinearStats(NamedTuple):
    asc: int
    des: int
    plat: int
    ddes: int


def linear_stats(w: Sequence[int]) -> LinearStats:
    padded = (0, *w, 0)
    asc = des = plat = ddes = 0
    for a, b in zip(padded, padded[1:]):
        if a < b:
            asc += 1
        elif a > b:
            des += 1
        else:
            plat += 1
    for a, b, c in zip(padded, padded[1:], padded[2:]):
        if a > b > c:
            ddes += 1
    return LinearStats(asc, des, plat, ddes)


class CyclicClass(enum.Enum):
    DOUBLE_DESCENT = "dcdes"
    DOUBLE_ASCENT = "dcasc"
    PEAK = "cpeak"
    VALLEY = "cval"


def classify_cyclic(w: Sequence[int], i: int) -> CyclicClass | None:
    """Class of position ``i`` in the cyclic reading; None when a tie is involved."""
    L = len(w)
    prev, cur, nxt = w[i - 1], w[i], w[(i + 1) % L]
    if prev == cur or cur == nxt:
        return None
    if prev > cur:
        return CyclicClass.DOUBLE_DESCENT if cur > nxt else CyclicClass.VALLEY
    return CyclicClass.PEAK if cur > nxt else CyclicClass.DOUBLE_ASCENT


@dataclass(frozen=True)
class CyclicProfile:
    cdes: int
    casc: int
    dcdes: int
    dcasc: int
    cpeak: int
    cval: int
    classes: tuple[CyclicClass | None, ...]
    cdes_entries: frozenset[int]


def cdes_set(w: Sequence[int]) -> frozenset[int]:
    """Entries that are cyclic descents."""
    L = len(w)
    return frozenset(w[i] for i in range(L) if w[i] > w[(i + 1) % L])


def cyclic_profile(w: Sequence[int]) -> CyclicProfile:
    if not w:
        raise ValueError("cyclic profile of the empty word")
    L = len(w)
    cdes = sum(1 for i in range(L) if w[i] > w[(i + 1) % L])
    casc = sum(1 for i in range(L) if w[i] < w[(i + 1) % L])
    classes = tuple(classify_cyclic(w, i) for i in range(L))
    tally = Counter(classes)
    return CyclicProfile(
        cdes=cdes,
        casc=casc,
        dcdes=tally[CyclicClass.DOUBLE_DESCENT],
        dcasc=tally[CyclicClass.DOUBLE_ASCENT],
        cpeak=tally[CyclicClass.PEAK],
        cval=tally[CyclicClass.VALLEY],
        classes=classes,
        cdes_entries=cdes_set(w),
    )


class CyclicFactorization(NamedTuple):
    w1: Word
    w2: Word
    w3: Word


def cyclic_factorization(w: Sequence[int], pos: int) -> CyclicFactorization:
    """Split the cycle around ``w[pos]`` as W1 . pivot . W2 . W3.

    W1 and W2 are the maximal runs of entries smaller than the pivot directly
    left and right of it. The pivot must be a double cyclic ascent or descent.
    """
    cls = classify_cyclic(w, pos)
    if cls not in (CyclicClass.DOUBLE_ASCENT, CyclicClass.DOUBLE_DESCENT):
        raise ValueError(f"position {pos} of {tuple(w)} is {cls}, not a double ascent/descent")
    L = len(w)
    pivot = w[pos]
    left = 0
    while w[(pos - left - 1) % L] < pivot:
        left += 1
    right = 0
    while w[(pos + right + 1) % L] < pivot:
        right += 1
    w1 = tuple(w[(pos - left + t) % L] for t in range(left))
    w2 = tuple(w[(pos + 1 + t) % L] for t in range(right))
    w3 = tuple(w[(pos + 1 + right + t) % L] for t in range(L - 1 - left - right))
    return CyclicFactorization(w1, w2, w3)


def format_word(w: Sequence[int]) -> str:
    return " ".join(map(str, w))


def parse_word(text: str) -> Word:
    """Space separated values, or a bare digit string such as ``2112``."""
    text = text.strip()
    if not text:
        return ()
    if " " in text or "," in text:
        return tuple(int(t) for t in text.replace(",", " ").split())
    if not text.isdigit():
        raise ValueError(f"malformed word {text!r}")
    return tuple(int(c) for c in text)


__all__ = [
    "Word", "Multiset", "compositions", "multisets_up_to", "enumerate_words",
    "is_quasi_stirling", "is_stirling", "first", "LinearStats", "linear_stats",
    "CyclicClass", "classify_cyclic", "CyclicProfile", "cyclic_profile", "cdes_set",
    "CyclicFactorization", "cyclic_factorization", "format_word", "parse_word",
]
