"""General and reduced R-sums, the power-class function S(n, p), and the
finite R-sum solver of the canonical recurrence.

A general R-sum is the nested sum

    R(N, k, D, D0) = sum_{i1=D0+D}^{N+D} d(i1) sum_{i2=i1+D}^{N+2D} d(i2) ... sum_{ik=i(k-1)+D}^{N+kD} d(ik)

and the reduced R-sum is R~(N, k) = R(N, k, 2, -1). Sums whose upper bound
is below the lower bound contribute zero.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass

from .core import CoefficientSequence, InvalidParams, Scalar, to_mode

MAX_N = 10_000


@dataclass(frozen=True)
class RSumParams:
    N: int
    k: int
    delta: int
    delta0: int

    def __post_init__(self):
        if self.k < 1:
            raise InvalidParams(f"R-sum power k must be >= 1, got {self.k}")
        if self.N < self.delta0:
            raise InvalidParams(f"R-sum needs N >= delta0, got N={self.N}, delta0={self.delta0}")
        if self.delta < 1:
            # negative or zero shifts can index unboundedly far below the start
            raise InvalidParams(f"only recursive shifts delta >= 1 are supported, got {self.delta}")


def _nested_sum(seq: CoefficientSequence, N: int, k: int, delta: int, delta0: int) -> tuple[Scalar, int]:
    """Depth-first evaluation; returns (value, number of monomials visited)."""
    zero = to_mode(0, seq.scalar)
    # level m only ever reads indices D0 + mD .. N + mD, and reads all of them
    base = [delta0 + m * delta for m in range(k + 1)]
    vals = [None] + [seq.values(base[m], N + m * delta) for m in range(1, k + 1)]
    count = 0

    def level(m: int, lower: int) -> Scalar:
        nonlocal count
        row = vals[m]
        first = lower - base[m]
        if m == k:
            count += max(0, len(row) - first)
            return sum(row[first:], zero)
        total = zero
        for j in range(first, len(row)):
            total = total + row[j] * level(m + 1, base[m] + j + delta)
        return total

    limit = sys.getrecursionlimit()
    if k + 100 > limit:
        sys.setrecursionlimit(k + 100)
    try:
        value = level(1, base[1])
    finally:
        sys.setrecursionlimit(limit)
    return value, count


def rsum_general(seq: CoefficientSequence, params: RSumParams) -> Scalar:
    return _nested_sum(seq, params.N, params.k, params.delta, params.delta0)[0]


def R(seq: CoefficientSequence, N: int, k: int, delta: int, delta0: int) -> Scalar:
    """Shorthand for ``rsum_general(seq, RSumParams(N, k, delta, delta0))``."""
    return rsum_general(seq, RSumParams(N, k, delta, delta0))


def rsum_reduced(seq: CoefficientSequence, N: int, k: int) -> Scalar:
    """R~(N, k): gap-2 index tuples starting at 1, the m-th index capped at N + 2m."""
    if N < -1:
        raise InvalidParams(f"reduced R-sum needs N >= -1, got {N}")
    return rsum_general(seq, RSumParams(N, k, 2, -1))


def _check_class(n: int, p: int) -> None:
    if not 1 <= p <= (n + 1) // 2:
        raise InvalidParams(f"power class p={p} outside [1, {(n + 1) // 2}] for n={n}")


def s_power_class(seq: CoefficientSequence, n: int, p: int) -> Scalar:
    """S(n, p) = R~(n - 2p, p), the power-p part of a(n+1)."""
    _check_class(n, p)
    return rsum_reduced(seq, n - 2 * p, p)


def solve_via_rsum_counted(seq: CoefficientSequence, n: int) -> tuple[Scalar, int]:
    if n < 0:
        raise InvalidParams(f"n must be >= 0, got {n}")
    if n > MAX_N:
        raise InvalidParams(f"n={n} exceeds the recursion guard {MAX_N}")
    seq.require(1, n)
    total = to_mode(1, seq.scalar)
    terms = 0
    for p in range(1, (n + 1) // 2 + 1):
        value, count = _nested_sum(seq, n - 2 * p, p, 2, -1)
        total = total + value
        terms += count
    return total, terms


def solve_via_rsum(seq: CoefficientSequence, n: int) -> Scalar:
    """a(n+1) = 1 + sum_{p=1}^{floor((n+1)/2)} S(n, p)."""
    return solve_via_rsum_counted(seq, n)[0]
