from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import fib, random_table, rational_tables
from trirec.core import GeneralRecurrence, IndexOutOfDomain, InvalidParams, TooLarge, constant, table
from trirec.oracle import (enumerate_monomials, evaluate_monomials, iterate_canonical, iterate_general,
                           symbolic_solve)
from trirec.rsum import s_power_class


def test_iterate_canonical_examples():
    assert iterate_canonical(table([2, 3, 5]), 3) == [1, 1, 3, 6, 21]
    assert iterate_canonical(constant(1), 4) == [1, 1, 2, 3, 5, 8]
    assert iterate_canonical(table([2]), 0, Fraction(4), Fraction(9)) == [4, 9]


def test_iterate_canonical_needs_coefficients():
    with pytest.raises(IndexOutOfDomain):
        iterate_canonical(table([2, 3]), 3)


def test_iterate_general_examples():
    gen = GeneralRecurrence(constant(2), constant(4), Fraction(1), Fraction(1))
    assert iterate_general(gen, 3) == [1, 1, 6, 16, 56]
    fibo = iterate_general(GeneralRecurrence(constant(1), constant(1)), 6)
    assert fibo == [1, 1, 2, 3, 5, 8, 13, 21]
    tail = iterate_general(GeneralRecurrence(constant(1), constant(0), Fraction(5), Fraction(3)), 5)
    assert tail == [5, 3, 3, 3, 3, 3, 3]


@pytest.mark.parametrize("n, p, expected", [
    (4, 2, [(1, 3), (1, 4), (2, 4)]),
    (3, 2, [(1, 3)]),
    (5, 3, [(1, 3, 5)]),
    (3, 1, [(1,), (2,), (3,)]),
])
def test_enumerate_monomials(n, p, expected):
    assert enumerate_monomials(n, p) == expected


@pytest.mark.parametrize("n, p", [(0, 1), (4, 3), (5, 0)])
def test_enumerate_monomials_rejects(n, p):
    with pytest.raises(InvalidParams):
        enumerate_monomials(n, p)


def test_monomial_census():
    for n in range(1, 21):
        for p in range(1, (n + 1) // 2 + 1):
            assert len(enumerate_monomials(n, p)) == comb(n - p + 1, p)
    for n in range(0, 21):
        assert len(symbolic_solve(n)) == fib(n + 2)


def test_symbolic_solve_examples():
    assert symbolic_solve(0).monomials == [()]
    assert symbolic_solve(2).monomials == [(), (1,), (2,)]
    assert symbolic_solve(4).render() == "1 + d1 + d2 + d3 + d4 + d1*d3 + d1*d4 + d2*d4"


def test_symbolic_solve_matches_enumeration_with_unit_coefficients():
    for n in range(1, 16):
        poly = symbolic_solve(n)
        assert all(c == 1 for _, c in poly.terms)
        expected = [()] + [t for p in range(1, (n + 1) // 2 + 1) for t in enumerate_monomials(n, p)]
        assert poly.monomials == expected


def test_symbolic_guard():
    with pytest.raises(TooLarge):
        symbolic_solve(25)


def test_substitution_coherence(rng):
    for n in range(0, 21):
        d = random_table(rng, max(n, 1))
        assert symbolic_solve(n).evaluate(d) == iterate_canonical(d, n)[-1]


@settings(max_examples=60)
@given(rational_tables(min_size=1, max_size=14), st.data())
def test_power_class_partition(d, data):
    n = data.draw(st.integers(1, d.hi))
    p = data.draw(st.integers(1, (n + 1) // 2))
    assert evaluate_monomials(d, enumerate_monomials(n, p)) == s_power_class(d, n, p)
