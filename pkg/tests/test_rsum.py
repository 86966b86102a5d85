import random
from itertools import combinations
from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import fib, random_table, rational_tables
from trirec.core import IndexOutOfDomain, InvalidParams, constant, table
from trirec.oracle import iterate_canonical
from trirec.rsum import R, RSumParams, rsum_general, rsum_reduced, s_power_class, solve_via_rsum

SYM = table([Fraction(p) for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)])  # distinct primes


def d(i):
    return SYM.at(i)


def test_rsum_general_examples():
    # N = D0 collapses each sum to a single term
    assert R(SYM, 2, 2, 2, 2) == d(4) * d(6)
    assert R(SYM, 1, 1, 1, 0) == d(1) + d(2)
    assert R(SYM, -1, 2, 2, -1) == d(1) * d(3)


def test_rsum_general_params_dataclass():
    assert rsum_general(SYM, RSumParams(2, 2, 2, 2)) == d(4) * d(6)


@pytest.mark.parametrize("args", [(0, 2, 2, 1), (3, 0, 1, 0), (3, 2, 0, 0), (3, 2, -1, 0)])
def test_rsum_invalid_params(args):
    with pytest.raises(InvalidParams):
        RSumParams(*args)


def test_rsum_reduced_examples():
    assert rsum_reduced(SYM, 0, 2) == d(1) * (d(3) + d(4)) + d(2) * d(4)
    assert rsum_reduced(SYM, -1, 3) == d(1) * d(3) * d(5)
    assert rsum_reduced(SYM, 2, 1) == d(1) + d(2) + d(3) + d(4)


def test_rsum_reduced_domain_error():
    with pytest.raises(IndexOutOfDomain):
        rsum_reduced(table([1, 2, 3]), 0, 2)


def test_s_power_class_examples():
    assert s_power_class(SYM, 4, 2) == d(1) * d(3) + d(1) * d(4) + d(2) * d(4)
    assert s_power_class(constant(1), 5, 2) == 6
    assert s_power_class(SYM, 3, 2) == d(1) * d(3)
    with pytest.raises(InvalidParams):
        s_power_class(SYM, 4, 3)


def test_solve_via_rsum_examples():
    assert solve_via_rsum(table([2, 3, 5]), 3) == 21
    assert solve_via_rsum(table([2, 3, 5]), 0) == 1
    assert solve_via_rsum(constant(1), 9) == 89


def _random_params(rng, k_max=5):
    delta = rng.choice([1, 2, 3])
    k = rng.randint(1, k_max)
    delta0 = rng.randint(-3, 3)
    N = delta0 + rng.randint(0, 4)
    return N, k, delta, delta0


def _seq_for(rng, lo, hi):
    return random_table(rng, hi - lo + 1, start=lo)


def test_product_when_n_equals_d0():
    rng = random.Random(1)
    for _ in range(500):
        N, k, delta, _ = _random_params(rng)
        seq = _seq_for(rng, N + delta, N + k * delta)
        assert R(seq, N, k, delta, N) == prod((seq.at(N + j * delta) for j in range(1, k + 1)), start=Fraction(1))


def test_peel_first_sum():
    rng = random.Random(2)
    for _ in range(500):
        N, k, delta, delta0 = _random_params(rng, 4)
        seq = _seq_for(rng, delta0 + delta, N + (k + 2) * delta)
        rhs = sum(seq.at(j) * R(seq, N + delta, k, delta, j) for j in range(delta0 + delta, N + delta + 1))
        assert R(seq, N, k + 1, delta, delta0) == rhs


def test_raise_initial_shift():
    rng = random.Random(3)
    for _ in range(500):
        N, k, delta, delta0 = _random_params(rng)
        k = max(k, 2)
        N = max(N, delta0 + 1)
        seq = _seq_for(rng, delta0 + delta, N + (k + 1) * delta)
        rhs = (R(seq, N, k, delta, delta0)
               - seq.at(delta0 + delta) * R(seq, N + delta, k - 1, delta, delta0 + delta))
        assert R(seq, N, k, delta, delta0 + 1) == rhs


def test_n_step_recurrence():
    rng = random.Random(4)
    for _ in range(500):
        N, k, delta, delta0 = _random_params(rng, 4)
        N = max(N, delta0 + 1)
        seq = _seq_for(rng, delta0 + delta, N + (k + 1) * delta)
        rhs = R(seq, N - 1, k + 1, delta, delta0) + seq.at(N + (k + 1) * delta) * R(seq, N, k, delta, delta0)
        assert R(seq, N, k + 1, delta, delta0) == rhs


def S_or_zero(seq, n, p):
    # above the top power class the reduced R-sum is an empty sum
    return s_power_class(seq, n, p) if p <= (n + 1) // 2 else 0


def test_s_recurrence_all_classes(rng):
    seq = random_table(rng, 20)
    for n in range(1, 19):
        for p in range(1, (n + 1) // 2 + 1):
            lhs = s_power_class(seq, n + 2, p + 1)
            assert lhs == S_or_zero(seq, n + 1, p + 1) + seq.at(n + 2) * s_power_class(seq, n, p)


def test_induction_identity(rng):
    seq = random_table(rng, 20)
    a = [Fraction(1)] + [solve_via_rsum(seq, m) for m in range(0, 21)]
    for n in range(1, 21):
        assert a[n] + seq.at(n) * a[n - 1] == a[n + 1]


def test_power_bound():
    ones = constant(1)
    for n in range(1, 22):
        top = (n + 1) // 2
        assert top == max(n // 2, 1 + (n - 1) // 2)
        assert s_power_class(ones, n, top) > 0
        # no gap-2 tuple of power top + 1 fits in 1..n
        assert not any(all(b - a >= 2 for a, b in zip(t, t[1:]))
                       for t in combinations(range(1, n + 1), top + 1))


def test_fibonacci_up_to_30():
    for n in range(0, 31):
        assert solve_via_rsum(constant(1), n) == fib(n + 2)


@settings(max_examples=80)
@given(rational_tables(min_size=1, max_size=16), st.data())
def test_rsum_matches_iteration(d, data):
    n = data.draw(st.integers(0, d.hi))
    assert solve_via_rsum(d, n) == iterate_canonical(d, n)[-1]


def test_float_mode_close_to_exact(rng):
    d = random_table(rng, 14)
    exact = solve_via_rsum(d, 14)
    approx = solve_via_rsum(d.with_scalar("float64"), 14)
    assert isinstance(approx, float)
    assert abs(approx - float(exact)) <= 1e-9 * max(1.0, abs(float(exact)))
    assert solve_via_rsum(d.with_scalar("float64"), 0) == 1.0
