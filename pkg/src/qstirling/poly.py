"""Exact sparse polynomials with integer coefficients.

Terms live in a dict from exponent tuples to nonzero ints. Python ints never
overflow, so every coefficient is exact at any size.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping

Exponent = tuple[int, ...]


class Poly:
    __slots__ = ("nvars", "_terms", "names")

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = (),
                 nvars: int = 3, names: str | None = None):
        acc: dict[Exponent, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, c in items:
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            acc[tuple(exp)] += int(c)
        self.nvars = nvars
        self._terms = {e: c for e, c in acc.items() if c}
        self.names = names or "xyzuvw"[:nvars]

    @classmethod
    def monomial(cls, exp: Exponent, coeff: int = 1, names: str | None = None) -> Poly:
        return cls({tuple(exp): coeff}, nvars=len(exp), names=names)

    @classmethod
    def zero(cls, nvars: int = 3) -> Poly:
        return cls({}, nvars=nvars)

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def coeff(self, exp: Exponent) -> int:
        return self._terms.get(tuple(exp), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def _check(self, other: Poly) -> None:
        if other.nvars != self.nvars:
            raise ValueError(f"mixing {self.nvars}- and {other.nvars}-variable polynomials")

    def __add__(self, other: Poly) -> Poly:
        if other == 0:
            return self
        self._check(other)
        return Poly([*self._terms.items(), *other._terms.items()], self.nvars, self.names)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly({e: -c for e, c in self._terms.items()}, self.nvars, self.names)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            return Poly({e: c * other for e, c in self._terms.items()}, self.nvars, self.names)
        self._check(other)
        out: dict[Exponent, int] = defaultdict(int)
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return Poly(out, self.nvars, self.names)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power")
        result = Poly.monomial((0,) * self.nvars, names=self.names)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._terms == ({(0,) * self.nvars: other} if other else {})
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def total(self) -> int:
        """Sum of coefficients, i.e. the value at all-ones."""
        return sum(self._terms.values())

    def degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """Graded lexicographic order, highest first."""
        return sorted(self._terms.items(), key=lambda t: (-sum(t[0]), [-a for a in t[0]]))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for exp, c in self.sorted_terms():
            mono = "".join(n if a == 1 else f"{n}^{a}" for n, a in zip(self.names, exp) if a)
            mag = abs(c)
            body = mono if mono and mag == 1 else f"{mag}{mono}"
            sign = "-" if c < 0 else "+"
            out.append(("-" if c < 0 else "") + body if not out else f" {sign} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"Poly({self}, nvars={self.nvars})"


def var(i: int, nvars: int = 3) -> Poly:
    exp = [0] * nvars
    exp[i] = 1
    return Poly.monomial(tuple(exp))


def xy_basis(j: int, d: int) -> Poly:
    """(xy)^j (x+y)^(d-2j) as a two-variable polynomial."""
    x, y = var(0, 2), var(1, 2)
    return (x * y) ** j * (x + y) ** (d - 2 * j)
