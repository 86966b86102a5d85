"""Continued-fraction convergents and finite-difference ODE integration, both
expressed as general three-term recurrences and solved through the
canonical machinery.
"""
from __future__ import annotations

from typing import Callable, Optional, Union

from .canonical import CanonicalEngine, solve_general, solve_general_sequence
from .core import (CoefficientSequence, GeneralRecurrence, InvalidParams, Scalar, Table, ZeroPivot,
                   as_scalar, constant, div, to_mode)


def _run(gen: GeneralRecurrence, n: int, engine: Optional[CanonicalEngine]) -> list[Scalar]:
    """[W(0), ..., W(n+1)]."""
    if engine is None:
        return solve_general_sequence(gen, n)
    return [solve_general(gen, m, engine) for m in range(n + 2)]


def cf_convergents(b0: Scalar, partial_num: CoefficientSequence, partial_den: CoefficientSequence,
                   k: int, engine: Optional[CanonicalEngine] = None) -> list[tuple[Scalar, Scalar]]:
    """Numerator/denominator pairs (h_i, k_i), i = 0..k, of b0 + a1/(b1 + a2/(b2 + ...)).

    Euler's recurrences h_i = b_i h_(i-1) + a_i h_(i-2) are the general
    recurrence with A = partial denominators, B = partial numerators and
    W(i) = h_(i-1); the seeds h_(-1) = 1, h_0 = b0 and k_(-1) = 0, k_0 = 1
    become (C0, C1).
    """
    if k < 1:
        raise InvalidParams(f"need at least one level, got k={k}")
    for i in range(1, k + 1):
        if partial_den.at(i) == 0:
            raise ZeroPivot(i, "partial denominator")
    mode = partial_den.scalar
    b0 = to_mode(as_scalar(b0), mode)
    one, zero = to_mode(1, mode), to_mode(0, mode)
    h = _run(GeneralRecurrence(partial_den, partial_num, one, b0), k, engine)
    q = _run(GeneralRecurrence(partial_den, partial_num, zero, one), k, engine)
    return list(zip(h[1:], q[1:]))


def convergent_values(pairs: list[tuple[Scalar, Scalar]]) -> list[Scalar]:
    return [div(h, k) for h, k in pairs]


Potential = Union[CoefficientSequence, Callable[[Scalar], Scalar]]


def stencil_coefficients(U: Potential, x0: Scalar, h: Scalar,
                         steps: int) -> tuple[CoefficientSequence, CoefficientSequence]:
    """A(n) = 2 + h^2 U(x_n), B(n) = -1 for f'' - U f = 0 on x_n = x0 + n h.

    ``U`` is either a sequence indexed by node number n or a function of x.
    """
    if steps < 1:
        raise InvalidParams(f"steps must be >= 1, got {steps}")
    if not h > 0:
        raise InvalidParams(f"step size must be positive, got {h}")
    A = []
    for n in range(1, steps + 1):
        u = U.at(n) if isinstance(U, CoefficientSequence) else U(x0 + n * h)
        a = 2 + h * h * u
        if a == 0:
            raise ZeroPivot(n, "2 + h^2 U at node")
        A.append(a)
    mode = "float64" if any(isinstance(a, float) for a in A) else "rational"
    A_seq = CoefficientSequence(Table(tuple(A), 1), 1, steps, mode)
    B_seq = constant(-1, 1, steps, mode)
    return A_seq, B_seq


def ode_solve(U: Potential, x0: Scalar, h: Scalar, f0: Scalar, f1: Scalar, steps: int,
              engine: Optional[CanonicalEngine] = None) -> list[Scalar]:
    """Values of f at x0 + i h, i = 0..steps+1, from the central-difference stencil.

    f(x_(n+1)) = (2 + h^2 U(x_n)) f(x_n) - f(x_(n-1)).
    """
    A, B = stencil_coefficients(U, x0, h, steps)
    return _run(GeneralRecurrence(A, B, f0, f1), steps, engine)
