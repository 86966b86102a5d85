"""Reduction of W(n+1) = A(n) W(n) + B(n) W(n-1) to the canonical form
a(n+1) = a(n) + d(n) a(n-1), and reconstruction of W from a.

With prefix products P(n) = A(1) ... A(n) (P(0) = 1) the substitution is
W(n+1) = a(n+1) P(n), which gives d(n) = B(n) / (A(n) A(n-1)) with the
convention A(0) = 1, so d(1) = B(1) / A(1).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .core import (CoefficientSequence, GeneralRecurrence, InvalidParams, Scalar, Table, ZeroPivot,
                   div, to_mode)
from .oracle import iterate_canonical

# (d, n) -> a(n+1) of the canonical recurrence with a(0) = a(1) = 1
CanonicalEngine = Callable[[CoefficientSequence, int], Scalar]


def iterative_engine(seq: CoefficientSequence, n: int) -> Scalar:
    return iterate_canonical(seq, n)[-1]


@dataclass(frozen=True)
class CanonicalProblem:
    d: CoefficientSequence
    a0: int = 1
    a1: int = 1

    def __post_init__(self):
        if self.a0 != 1 or self.a1 != 1:
            raise InvalidParams("the canonical problem always starts from a0 = a1 = 1")

    def solve(self, n: int, engine: CanonicalEngine = iterative_engine) -> Scalar:
        return engine(self.d, n)


@dataclass(frozen=True)
class CanonicalizationResult:
    d: CoefficientSequence
    prefix_products: tuple
    C0: Scalar
    C1: Scalar

    @property
    def n_max(self) -> int:
        return len(self.prefix_products) - 1


def to_canonical(gen: GeneralRecurrence, n_max: int) -> CanonicalizationResult:
    if n_max < 0:
        raise InvalidParams(f"n_max must be >= 0, got {n_max}")
    gen.A.require(1, n_max)
    gen.B.require(1, n_max)
    prefix = [to_mode(1, gen.A.scalar)]
    d = []
    prev_a = prefix[0]
    for i in range(1, n_max + 1):
        a = gen.A.at(i)
        if a == 0:
            raise ZeroPivot(i)
        d.append(div(gen.B.at(i), a * prev_a))
        prefix.append(prefix[-1] * a)
        prev_a = a
    seq = CoefficientSequence(Table(tuple(d), 1), 1, n_max, gen.A.scalar)
    return CanonicalizationResult(seq, tuple(prefix), gen.C0, gen.C1)


def reconstruct_general(a_values: Sequence[Scalar], result: CanonicalizationResult) -> list[Scalar]:
    """W(0) = a(0) and W(k) = a(k) P(k-1) for k >= 1."""
    if len(a_values) > result.n_max + 2:
        raise InvalidParams(f"{len(a_values)} canonical values but prefix products only reach "
                            f"P({result.n_max})")
    return [a if k == 0 else a * result.prefix_products[k - 1] for k, a in enumerate(a_values)]


def _canonical_term(engine: CanonicalEngine, seq: CoefficientSequence, m: int) -> Scalar:
    """a(m) for the (1, 1)-started canonical recurrence."""
    return to_mode(1, seq.scalar) if m == 0 else engine(seq, m - 1)


def solve_general(gen: GeneralRecurrence, n: int, engine: CanonicalEngine = iterative_engine) -> Scalar:
    """W(n) through the canonical form and any canonical solver.

    General initial values use linearity: the canonical solution started
    from (C0, C1) is C1 a'(n-1) + C0 d(1) a''(n-2), where a' and a'' solve
    the (1, 1)-started problem for d shifted by one and by two.
    """
    if n < 0:
        raise InvalidParams(f"n must be >= 0, got {n}")
    if n == 0:
        return gen.C0
    if n == 1:
        return gen.C1
    res = to_canonical(gen, n - 1)
    d = res.d
    if gen.C0 == gen.C1:
        a_n = gen.C1 * _canonical_term(engine, d, n)
    else:
        a_n = gen.C1 * _canonical_term(engine, d.shifted(1), n - 1)
        if gen.C0 != 0:
            a_n = a_n + gen.C0 * d.at(1) * _canonical_term(engine, d.shifted(2), n - 2)
    return a_n * res.prefix_products[n - 1]


def solve_general_sequence(gen: GeneralRecurrence, n: int) -> list[Scalar]:
    """[W(0), ..., W(n+1)] by canonicalizing, iterating from (C0, C1) and reconstructing."""
    res = to_canonical(gen, n)
    a = iterate_canonical(res.d, n, gen.C0, gen.C1)
    return reconstruct_general(a, res)
