"""Method dispatch and timing: one :class:`EvalReport` per (method, n)."""
from __future__ import annotations

import time
from typing import Callable, Optional

from .closedform import solve_closed_form, solve_closed_form_counted
from .convolve import DEFAULT_MAX_GRID, solve_flat, solve_flat_counted
from .core import METHODS, CoefficientSequence, EvalReport, InvalidParams, Scalar, to_mode
from .oracle import iterate_canonical
from .rsum import solve_via_rsum, solve_via_rsum_counted


def _iterative(seq, n, a0, a1):
    return iterate_canonical(seq, n, a0, a1)[-1], n, None


def evaluate(seq: CoefficientSequence, n: int, method: str = "iterative", *,
             a0: Optional[Scalar] = None, a1: Optional[Scalar] = None,
             max_grid: int = DEFAULT_MAX_GRID) -> EvalReport:
    """a(n+1) of the canonical recurrence by ``method``.

    Non-default seeds (a0, a1) are handled by the iterative method directly
    and by the other methods through the shifted-sequence decomposition.
    """
    if method not in METHODS:
        raise InvalidParams(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    one = to_mode(1, seq.scalar)
    a0 = one if a0 is None else to_mode(a0, seq.scalar)
    a1 = one if a1 is None else to_mode(a1, seq.scalar)
    t0 = time.perf_counter_ns()
    if method == "iterative":
        value, terms, grid = _iterative(seq, n, a0, a1)
    elif a0 == 1 and a1 == 1:
        value, terms, grid = _run(method, seq, n, max_grid)
    else:
        value, terms, grid = _seeded(method, seq, n, a0, a1, max_grid)
    elapsed = time.perf_counter_ns() - t0
    return EvalReport(method, value, terms, grid, elapsed, n)


def _run(method, seq, n, max_grid):
    if method == "rsum":
        value, terms = solve_via_rsum_counted(seq, n)
        return value, terms, None
    if method == "flat":
        return solve_flat_counted(seq, n, max_grid)
    return solve_closed_form_counted(seq, n, max_grid)


def _seeded(method, seq, n, a0, a1, max_grid):
    # a(n+1) from (a0, a1) = a1 * a'(n) + a0 * d(1) * a''(n-1) with a', a'' on shifted d
    if n == 0:
        return a1, 0, (0 if method in ("flat", "closed") else None)
    seq.require(1, n)
    v1, t1, g1 = _run(method, seq.shifted(1), n - 1, max_grid)
    value, terms, grid = a1 * v1, t1, g1
    if a0 != 0:
        if n == 1:
            v2, t2, g2 = to_mode(1, seq.scalar), 0, 0
        else:
            v2, t2, g2 = _run(method, seq.shifted(2), n - 2, max_grid)
        value = value + a0 * seq.at(1) * v2
        terms += t2
        grid = None if grid is None else grid + g2
    return value, terms, grid


ENGINES: dict[str, Callable[[CoefficientSequence, int], Scalar]] = {
    "iterative": lambda seq, n: iterate_canonical(seq, n)[-1],
    "rsum": solve_via_rsum,
    "flat": solve_flat,
    "closed": solve_closed_form,
}


def compare(seq: CoefficientSequence, n_max: int, methods=METHODS,
            max_grid: int = DEFAULT_MAX_GRID) -> dict:
    rows = []
    all_equal = True
    for n in range(0, n_max + 1):
        reports = {m: evaluate(seq, n, m, max_grid=max_grid) for m in methods}
        values = [r.value for r in reports.values()]
        equal = all(v == values[0] for v in values)
        all_equal &= equal
        rows.append({"n": n, "equal": equal,
                     "values": {m: r.to_dict()["value"] for m, r in reports.items()}})
    return {"command": "compare", "n_max": n_max, "methods": list(methods),
            "all_equal": all_equal, "rows": rows}


# largest n each method is benchmarked at; the grid methods grow super-exponentially
BENCH_CAPS = {"iterative": None, "rsum": 30, "flat": 12, "closed": 16}


def bench(seq: CoefficientSequence, n_max: int, repeat: int = 3, methods=METHODS,
          max_grid: int = DEFAULT_MAX_GRID, caps: Optional[dict] = None) -> dict:
    """Best-of-``repeat`` timing rows, one per (n, method)."""
    caps = {**BENCH_CAPS, **(caps or {})}
    rows = []
    for n in range(1, n_max + 1):
        for method in methods:
            cap = caps.get(method)
            if cap is not None and n > cap:
                continue
            best = None
            for _ in range(max(1, repeat)):
                rep = evaluate(seq, n, method, max_grid=max_grid)
                if best is None or rep.wall_time_ns < best.wall_time_ns:
                    best = rep
            rows.append(best.to_dict())
    return {"command": "bench", "n_max": n_max, "repeat": repeat, "scalar": seq.scalar,
            "caps": caps, "rows": rows}

