import random
from fractions import Fraction

import pytest

from conftest import fib, random_rational, random_table
from trirec.closedform import total_grid_points
from trirec.core import METHODS, GridTooLarge, InvalidParams, constant, table
from trirec.engines import BENCH_CAPS, bench, compare, evaluate
from trirec.oracle import iterate_canonical


@pytest.mark.parametrize("method", METHODS)
def test_evaluate_fibonacci(method):
    rep = evaluate(constant(1), 9, method)
    assert rep.value == 89
    assert rep.method == method and rep.n == 9
    assert rep.wall_time_ns >= 0


def test_evaluate_counters():
    assert evaluate(constant(1), 9, "iterative").terms_evaluated == 9
    assert evaluate(constant(1), 9, "iterative").grid_points is None
    rsum = evaluate(constant(1), 9, "rsum")
    assert rsum.terms_evaluated == fib(11) - 1 and rsum.grid_points is None
    closed = evaluate(constant(1), 9, "closed")
    assert closed.terms_evaluated == fib(11) - 1
    assert closed.grid_points == total_grid_points(9) == 2277
    assert evaluate(constant(1), 9, "flat").grid_points == 9 + 63 + 315 + 945 + 945


def test_evaluate_unknown_method():
    with pytest.raises(InvalidParams):
        evaluate(constant(1), 3, "magic")


@pytest.mark.parametrize("method", METHODS)
def test_evaluate_with_seeds(method):
    rng = random.Random(METHODS.index(method) + 40)
    for _ in range(20):
        n = rng.randint(0, 10)
        d = random_table(rng, max(n, 1))
        a0, a1 = random_rational(rng), random_rational(rng)
        assert evaluate(d, n, method, a0=a0, a1=a1).value == iterate_canonical(d, n, a0, a1)[-1]


def test_evaluate_grid_guard():
    with pytest.raises(GridTooLarge):
        evaluate(constant(1), 14, "closed", max_grid=1000)


def test_evaluate_float_mode():
    d = table([Fraction(1, 3), Fraction(-2, 7), Fraction(5, 2)], scalar="float64")
    values = {m: evaluate(d, 3, m).value for m in METHODS}
    assert all(isinstance(v, float) for v in values.values())
    assert max(values.values()) - min(values.values()) < 1e-12


def test_compare_all_equal():
    rep = compare(random_table(random.Random(41), 10), 10)
    assert rep["all_equal"]
    assert [row["n"] for row in rep["rows"]] == list(range(11))
    assert set(rep["rows"][3]["values"]) == set(METHODS)


def test_bench_rows_and_caps():
    rep = bench(constant(1), 5, repeat=2, caps={"flat": 3})
    keys = [(r["n"], r["method"]) for r in rep["rows"]]
    assert ("flat", 4) not in [(m, n) for n, m in keys]
    assert ("closed", 5) in [(m, n) for n, m in keys]
    assert len(keys) == 5 * 4 - 2
    for row in rep["rows"]:
        if row["method"] == "closed":
            assert row["grid_points"] == total_grid_points(row["n"])
    assert BENCH_CAPS["closed"] == 16
