"""Ground-truth engines: direct iteration, brute-force monomial enumeration and
symbolic expansion of the canonical recurrence.

Nothing here imports the R-sum or grid solvers, so these stay usable as
independent checks on them.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

from .core import (CoefficientSequence, GeneralRecurrence, IndexTuple, InvalidParams, Scalar,
                   TooLarge)

SYMBOLIC_MAX_N = 24


def iterate_canonical(seq: CoefficientSequence, n: int, a0: Scalar = Fraction(1),
                      a1: Scalar = Fraction(1)) -> list[Scalar]:
    """Return ``[a(0), ..., a(n+1)]`` for a(m+1) = a(m) + d(m) a(m-1)."""
    if n < 0:
        raise InvalidParams(f"n must be >= 0, got {n}")
    seq.require(1, n)
    out = [a0, a1]
    for m in range(1, n + 1):
        out.append(out[m] + seq.at(m) * out[m - 1])
    return out


def iterate_general(gen: GeneralRecurrence, n: int) -> list[Scalar]:
    """Return ``[W(0), ..., W(n+1)]`` by direct application of the general recurrence."""
    if n < 0:
        raise InvalidParams(f"n must be >= 0, got {n}")
    gen.A.require(1, n)
    gen.B.require(1, n)
    out = [gen.C0, gen.C1]
    for m in range(1, n + 1):
        out.append(gen.A.at(m) * out[m] + gen.B.at(m) * out[m - 1])
    return out


def enumerate_monomials(n: int, p: int) -> list[IndexTuple]:
    """All tuples 1 <= i1, i(m) >= i(m-1) + 2, ip <= n, in lexicographic order.

    Brute force: every p-subset of 1..n, filtered by the gap rule. Counts
    follow C(n-p+1, p) (stars and bars on gap-2 tuples).
    """
    if n < 1 or not 1 <= p <= (n + 1) // 2:
        raise InvalidParams(f"need n >= 1 and 1 <= p <= {(n + 1) // 2}, got n={n}, p={p}")
    return [t for t in combinations(range(1, n + 1), p)
            if all(b - a >= 2 for a, b in zip(t, t[1:]))]


@dataclass(frozen=True)
class SparsePolynomial:
    """A sum of d-monomials, stored as ``{index tuple: coefficient}``.

    ``()`` is the constant monomial. Terms are kept sorted by power, then
    lexicographically.
    """

    terms: tuple[tuple[IndexTuple, int], ...]

    @classmethod
    def from_mapping(cls, coeffs: Mapping[IndexTuple, int]) -> "SparsePolynomial":
        items = [(tuple(t), c) for t, c in coeffs.items() if c != 0]
        items.sort(key=lambda tc: (len(tc[0]), tc[0]))
        return cls(tuple(items))

    @property
    def monomials(self) -> list[IndexTuple]:
        return [t for t, _ in self.terms]

    def __len__(self) -> int:
        return len(self.terms)

    def evaluate(self, seq: CoefficientSequence) -> Scalar:
        total: Scalar = Fraction(0)
        for t, c in self.terms:
            prod: Scalar = Fraction(c)
            for i in t:
                prod = prod * seq.at(i)
            total = total + prod
        return total

    def render(self) -> str:
        parts = []
        for t, c in self.terms:
            body = "*".join(f"d{i}" for i in t) if t else "1"
            if c != 1:
                body = f"{c}*{body}" if t else str(c)
            parts.append(body)
        return " + ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.render()


def _shift_mul(poly: Counter, index: int) -> Counter:
    out: Counter = Counter()
    for t, c in poly.items():
        out[t + (index,)] += c
    return out


def symbolic_solve(n: int) -> SparsePolynomial:
    """Expand a(n+1) of the canonical recurrence as a polynomial in d1..dn.

    Built by running the recurrence on polynomials (each step appends the
    new index to every monomial of a(m-1)), not from the monomial
    enumeration, so the two can be compared.
    """
    if n < 0:
        raise InvalidParams(f"n must be >= 0, got {n}")
    if n > SYMBOLIC_MAX_N:
        raise TooLarge(f"symbolic expansion limited to n <= {SYMBOLIC_MAX_N} (got {n})")
    prev, cur = Counter({(): 1}), Counter({(): 1})
    for m in range(1, n + 1):
        nxt = cur.copy()
        nxt.update(_shift_mul(prev, m))
        prev, cur = cur, nxt
    return SparsePolynomial.from_mapping(cur)


def evaluate_monomials(seq: CoefficientSequence, monomials: Iterable[IndexTuple]) -> Scalar:
    total: Scalar = Fraction(0)
    for t in monomials:
        prod: Scalar = Fraction(1)
        for i in t:
            prod = prod * seq.at(i)
        total = total + prod
    return total
