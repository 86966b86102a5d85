import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from trirec.core import table

ACCEPTANCE_RESULTS = []


def random_rational(rng: random.Random, bound: int = 9, nonzero: bool = False) -> Fraction:
    while True:
        x = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if x or not nonzero:
            return x


def random_table(rng: random.Random, length: int, start: int = 1, nonzero: bool = False, bound: int = 9):
    return table([random_rational(rng, bound, nonzero) for _ in range(length)], start)


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def rational_tables(draw, min_size=1, max_size=24, start=1):
    values = draw(st.lists(rationals, min_size=min_size, max_size=max_size))
    return table(values, start)


def fib(k: int) -> int:
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


@pytest.fixture
def rng():
    return random.Random(20261016)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] {number}. {title}: {detail}")
