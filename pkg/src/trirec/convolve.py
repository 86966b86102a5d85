"""Flattening of k nested index loops into one global index q.

With dims (N1, ..., Nk) the global index is

    q = i1 + N1 (i2 - 1) + N1 N2 (i3 - 1) + ... + (N1 ... N(k-1)) (ik - 1)

ranging over 1..N1*...*Nk. Ordering constraints between indices are turned
into Heaviside factors so every loop runs from 1 to its own bound. All index
arithmetic is exact integer div/mod.
"""
from __future__ import annotations

from math import prod
from typing import Callable, Sequence

from .core import CoefficientSequence, GridTooLarge, InvalidParams, Scalar, TrirecError, to_mode

DEFAULT_MAX_GRID = 10**8


class IndexOutOfRange(TrirecError, ValueError):
    kind = "index_out_of_range"

    def __init__(self, r: int, value: int, bound: int):
        self.r = r
        super().__init__(f"index i{r} = {value} outside [1, {bound}]")


class QOutOfRange(TrirecError, ValueError):
    kind = "q_out_of_range"


def heaviside(x: int) -> int:
    return 1 if x >= 0 else 0


def check_dims(dims: Sequence[int]) -> tuple[int, ...]:
    dims = tuple(dims)
    if not dims:
        raise InvalidParams("dimension vector must be non-empty")
    for j, n in enumerate(dims, 1):
        if not isinstance(n, int) or n < 1:
            raise InvalidParams(f"dimension N{j} must be a positive integer, got {n!r}")
    return dims


def strides(dims: Sequence[int]) -> list[int]:
    """Partial products [1, N1, N1 N2, ..., N1 ... Nk]."""
    out = [1]
    for n in dims:
        out.append(out[-1] * n)
    return out


def encode(indices: Sequence[int], dims: Sequence[int]) -> int:
    dims = check_dims(dims)
    if len(indices) != len(dims):
        raise InvalidParams(f"{len(indices)} indices for {len(dims)} dimensions")
    q = 1
    stride = 1
    for r, (i, n) in enumerate(zip(indices, dims), 1):
        if not 1 <= i <= n:
            raise IndexOutOfRange(r, i, n)
        q += stride * (i - 1)
        stride *= n
    return q


def decode(q: int, dims: Sequence[int]) -> list[int]:
    """Inverse of :func:`encode`: i_r = 1 + ((q - 1) mod P_r) // P_(r-1)."""
    dims = check_dims(dims)
    ps = strides(dims)
    if not 1 <= q <= ps[-1]:
        raise QOutOfRange(f"q = {q} outside [1, {ps[-1]}]")
    return [1 + ((q - 1) % ps[r]) // ps[r - 1] for r in range(1, len(dims) + 1)]


def flat_sum(F: Callable[..., Scalar], dims: Sequence[int], zero: Scalar = 0) -> Scalar:
    """Sum F(i1, ..., ik) over the full box by a single ascending q loop."""
    total = zero
    for q in range(1, prod(check_dims(dims)) + 1):
        total = total + F(*decode(q, dims))
    return total


def reduced_dims(N: int, k: int) -> tuple[int, ...]:
    """Box bounds N_j = N + 2j for the reduced R-sum R~(N, k)."""
    if N < -1 or k < 1:
        raise InvalidParams(f"reduced R-sum needs N >= -1 and k >= 1, got N={N}, k={k}")
    return tuple(N + 2 * j for j in range(1, k + 1))


def gap_mask(indices: Sequence[int]) -> int:
    """prod_{m>=2} H(im - i(m-1) - 2)."""
    mask = 1
    for a, b in zip(indices, indices[1:]):
        mask *= heaviside(b - a - 2)
    return mask


def masked_summand(seq: CoefficientSequence, indices: Sequence[int]) -> Scalar:
    """d(i1) * prod_{m>=2} d(im) H(im - i(m-1) - 2)."""
    if not gap_mask(indices):
        return to_mode(0, seq.scalar)
    value = seq.at(indices[0])
    for i in indices[1:]:
        value = value * seq.at(i)
    return value


def rsum_reduced_flat_counted(seq: CoefficientSequence, N: int, k: int,
                              max_grid: int = DEFAULT_MAX_GRID) -> tuple[Scalar, int, int]:
    """Returns (value, unmasked terms, grid points)."""
    dims = reduced_dims(N, k)
    points = prod(dims)
    if points > max_grid:
        raise GridTooLarge(points, max_grid)
    seq.require(1, N + 2 * k)
    ps = strides(dims)
    total = to_mode(0, seq.scalar)
    terms = 0
    for q in range(1, points + 1):
        idx = [1 + ((q - 1) % ps[r]) // ps[r - 1] for r in range(1, k + 1)]
        if not gap_mask(idx):
            continue
        term = seq.at(idx[0])
        for i in idx[1:]:
            term = term * seq.at(i)
        terms += 1
        total = total + term
    return total, terms, points


def rsum_reduced_flat(seq: CoefficientSequence, N: int, k: int,
                      max_grid: int = DEFAULT_MAX_GRID) -> Scalar:
    """R~(N, k) evaluated over the full box prod(N + 2j) with the Heaviside mask."""
    return rsum_reduced_flat_counted(seq, N, k, max_grid)[0]


def solve_flat_counted(seq: CoefficientSequence, n: int,
                       max_grid: int = DEFAULT_MAX_GRID) -> tuple[Scalar, int, int]:
    if n < 0:
        raise InvalidParams(f"n must be >= 0, got {n}")
    seq.require(1, n)
    classes = range(1, (n + 1) // 2 + 1)
    total_points = sum(prod(reduced_dims(n - 2 * p, p)) for p in classes)
    if total_points > max_grid:
        raise GridTooLarge(total_points, max_grid)
    total = to_mode(1, seq.scalar)
    terms = 0
    for p in classes:
        value, t, _ = rsum_reduced_flat_counted(seq, n - 2 * p, p, max_grid)
        total = total + value
        terms += t
    return total, terms, total_points


def solve_flat(seq: CoefficientSequence, n: int, max_grid: int = DEFAULT_MAX_GRID) -> Scalar:
    """a(n+1) = 1 + sum_p R~(n - 2p, p), each class evaluated on its flat grid."""
    return solve_flat_counted(seq, n, max_grid)[0]
