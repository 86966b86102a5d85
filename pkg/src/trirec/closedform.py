"""Non-recursive evaluation of the canonical recurrence:

    a(n+1) = 1 + sum_{p=1}^{floor((n+1)/2)} sum_{q=1}^{M(n,p)} G(n, p, q)

where M(n, p) = prod_{l=0}^{p-1} (n - 2l), G is a product of coefficients at
the addresses g(m, n, p, q) times Heaviside gap factors, and g is the
row-major decoding of q over the box (n-2p+2, n-2p+4, ..., n).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .convolve import DEFAULT_MAX_GRID, heaviside
from .core import CoefficientSequence, GridTooLarge, InvalidParams, Scalar, to_mode

BLOCK = 1 << 20


def _check_class(n: int, p: int) -> None:
    if not 1 <= p <= (n + 1) // 2:
        raise InvalidParams(f"power class p={p} outside [1, {(n + 1) // 2}] for n={n}")


def class_dims(n: int, p: int) -> tuple[int, ...]:
    _check_class(n, p)
    return tuple(n - 2 * p + 2 * j for j in range(1, p + 1))


def capital_m(n: int, p: int) -> int:
    """M(n, p) = n (n-2) ... (n-2p+2), the grid size of power class p."""
    _check_class(n, p)
    return math.prod(n - 2 * l for l in range(p))


def total_grid_points(n: int) -> int:
    return sum(capital_m(n, p) for p in range(1, (n + 1) // 2 + 1))


@dataclass(frozen=True)
class ClosedFormTermAddress:
    n: int
    p: int
    q: int

    def __post_init__(self):
        m = capital_m(self.n, self.p)
        if not 1 <= self.q <= m:
            raise InvalidParams(f"q={self.q} outside [1, {m}] for n={self.n}, p={self.p}")

    def indices(self) -> tuple[int, ...]:
        return tuple(g_index(m, self.n, self.p, self.q) for m in range(1, self.p + 1))


def g_index(m: int, n: int, p: int, q: int) -> int:
    """Coefficient index of the m-th factor of grid point q (integer div/mod)."""
    dims = class_dims(n, p)
    if not 1 <= m <= p:
        raise InvalidParams(f"factor position m={m} outside [1, {p}]")
    if not 1 <= q <= math.prod(dims):
        raise InvalidParams(f"q={q} outside [1, {math.prod(dims)}]")
    below = math.prod(dims[: m - 1])
    return 1 + ((q - 1) % (below * dims[m - 1])) // below


def g_index_literal(m: int, n: int, p: int, q: int) -> int:
    """The same index written with floors of exact rationals, term for term."""
    _check_class(n, p)
    q1 = Fraction(q - 1)
    if m == 1:
        width = n - 2 * p + 2
        return q - width * math.floor(q1 / width)
    lower = math.prod(n - 2 * p + 2 * j for j in range(1, m))
    upper = lower * (n - 2 * p + 2 * m)
    return 1 + math.floor(q1 / lower) - (n - 2 * p + 2 * m) * math.floor(q1 / upper)


def g_term(seq: CoefficientSequence, n: int, p: int, q: int) -> Scalar:
    """G(n, p, q) = d(g1) prod_{m=2}^{p} [d(gm) H(gm - g(m-1) - 2)]."""
    g = [g_index(m, n, p, q) for m in range(1, p + 1)]
    value = seq.at(g[0])
    for m in range(1, p):
        value = value * seq.at(g[m]) * heaviside(g[m] - g[m - 1] - 2)
    return value


def _surviving_addresses(n: int, p: int, start: int, stop: int) -> np.ndarray:
    """Index tuples (rows, ascending q) of the grid points start..stop-1 with all gap factors 1.

    The indices are the mixed-radix digits of q - 1, peeled off one
    dimension at a time, which equals the g formula digit for digit. Factors
    are evaluated left to right; once a Heaviside factor is 0 the product is
    0 and the remaining factors of that point are not needed.
    """
    dims = class_dims(n, p)
    dtype = np.int32 if stop < 2**31 else np.int64
    offset = np.arange(start - 1, stop - 1, dtype=dtype)
    rest, prev = offset, None
    for m, width in enumerate(dims):
        if m == p - 1:
            quo, col = rest, rest + 1
        else:
            quo = rest // width
            col = rest - quo * width + 1
        if m:
            keep = np.flatnonzero(col - prev >= 2)
            quo, col, offset = quo[keep], col[keep], offset[keep]
        rest, prev = quo, col
    # the few survivors get all their digits back from q - 1
    cols = []
    for width in dims:
        cols.append(offset % width + 1)
        offset = offset // width
    return np.stack(cols, axis=1) if cols else np.empty((0, 0), dtype=dtype)


def class_sum_counted(seq: CoefficientSequence, n: int, p: int) -> tuple[Scalar, int]:
    """sum_q G(n, p, q) in ascending q; returns (value, nonzero-mask terms)."""
    M = capital_m(n, p)
    if M >= 2**62:
        raise GridTooLarge(M, 2**62)
    d = [None] + seq.values(1, n)
    total = to_mode(0, seq.scalar)
    terms = 0
    for start in range(1, M + 1, BLOCK):
        rows = _surviving_addresses(n, p, start, min(start + BLOCK, M + 1))
        terms += len(rows)
        for row in rows.tolist():
            value = d[row[0]]
            for i in row[1:]:
                value = value * d[i]
            total = total + value
    return total, terms


def class_sum_scalar(seq: CoefficientSequence, n: int, p: int) -> Scalar:
    """Reference loop: calls :func:`g_term` at every grid point."""
    total = to_mode(0, seq.scalar)
    for q in range(1, capital_m(n, p) + 1):
        total = total + g_term(seq, n, p, q)
    return total


def solve_closed_form_counted(seq: CoefficientSequence, n: int,
                              max_grid: int = DEFAULT_MAX_GRID) -> tuple[Scalar, int, int]:
    """Returns (a(n+1), nonzero-mask terms, grid points)."""
    if n < 0:
        raise InvalidParams(f"n must be >= 0, got {n}")
    seq.require(1, n)
    points = total_grid_points(n)
    if points > max_grid:
        raise GridTooLarge(points, max_grid)
    total = to_mode(1, seq.scalar)
    terms = 0
    for p in range(1, (n + 1) // 2 + 1):
        value, t = class_sum_counted(seq, n, p)
        total = total + value
        terms += t
    return total, terms, points


def solve_closed_form(seq: CoefficientSequence, n: int, max_grid: int = DEFAULT_MAX_GRID) -> Scalar:
    return solve_closed_form_counted(seq, n, max_grid)[0]
