"""Scalars, coefficient sequences and the shared records used by every solver.

Two scalar modes exist. ``rational`` (the default) uses :class:`fractions.Fraction`,
which is always reduced with a positive denominator. ``float64`` converts every
coefficient to a binary64 ``float`` on access and is meant for benchmarking.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Sequence, Union

# exact values are Fraction or int (both numbers.Rational); float64 values are float
Scalar = Union[Fraction, int, float]
IndexTuple = tuple[int, ...]

SCALAR_MODES = ("rational", "float64")
METHODS = ("iterative", "rsum", "flat", "closed")


class TrirecError(Exception):
    """Base class; ``to_dict`` gives the structured form used in CLI error reports."""

    kind = "error"

    def to_dict(self) -> dict:
        return {"error": self.kind, "message": str(self)}


class IndexOutOfDomain(TrirecError, IndexError):
    kind = "index_out_of_domain"

    def __init__(self, i: int, lo: int, hi: Optional[int]):
        self.i, self.lo, self.hi = i, lo, hi
        top = "inf" if hi is None else hi
        super().__init__(f"coefficient index {i} outside domain [{lo}, {top}]")

    def to_dict(self) -> dict:
        return {**super().to_dict(), "index": self.i, "lo": self.lo, "hi": self.hi}


class ParseError(TrirecError, ValueError):
    kind = "parse_error"

    def __init__(self, message: str, position: Any = None):
        self.position = position
        where = "" if position is None else f" (at {position})"
        super().__init__(message + where)

    def to_dict(self) -> dict:
        return {**super().to_dict(), "position": self.position}


class ZeroDenominator(TrirecError, ZeroDivisionError):
    kind = "zero_denominator"


class ZeroPivot(TrirecError, ZeroDivisionError):
    kind = "zero_pivot"

    def __init__(self, i: int, what: str = "A"):
        self.i = i
        super().__init__(f"{what}({i}) = 0; the recurrence cannot be canonicalized at index {i}")

    def to_dict(self) -> dict:
        return {**super().to_dict(), "index": self.i}


class InvalidParams(TrirecError, ValueError):
    kind = "invalid_params"


class GridTooLarge(TrirecError):
    kind = "grid_too_large"

    def __init__(self, points: int, limit: int):
        self.points, self.limit = points, limit
        super().__init__(f"grid of {points} points exceeds the guard of {limit}")

    def to_dict(self) -> dict:
        return {**super().to_dict(), "grid_points": self.points, "max_grid": self.limit}


class TooLarge(TrirecError):
    kind = "too_large"


# --------------------------------------------------------------------------
# Exact rationals
# --------------------------------------------------------------------------

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*")


def parse_rational(text: Union[str, int, Fraction], position: Any = None) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` exactly. Integers and Fractions pass through."""
    if isinstance(text, bool):
        raise ParseError(f"expected a rational, got {text!r}", position)
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"expected a rational string, got {type(text).__name__}", position)
    m = _RATIONAL_RE.fullmatch(text)
    if m is None:
        raise ParseError(f"malformed rational {text!r}", position)
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}", position)
    return Fraction(num, den)


def render_rational(x: Scalar) -> str:
    if isinstance(x, float):
        return repr(x)
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def exact(x: Union[int, Fraction]) -> Union[int, Fraction]:
    """Integral values become ``int`` (exact and much faster); the rest stay ``Fraction``."""
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def as_scalar(x: Any) -> Scalar:
    """Coerce user input to a scalar; floats stay floats, everything else is exact."""
    if isinstance(x, float):
        return x
    if isinstance(x, str):
        return exact(parse_rational(x))
    return exact(x)


def div(a: Scalar, b: Scalar) -> Scalar:
    """a / b, exact unless either operand is a float."""
    if isinstance(a, float) or isinstance(b, float):
        return a / b
    return exact(Fraction(a) / b)


def to_mode(x: Scalar, mode: str) -> Scalar:
    if mode == "float64":
        return float(x)
    if mode == "rational":
        return x if isinstance(x, float) else exact(x)
    raise InvalidParams(f"unknown scalar mode {mode!r}")


# --------------------------------------------------------------------------
# Coefficient sources
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Table:
    values: tuple
    start: int = 1

    def __call__(self, i: int) -> Scalar:
        return self.values[i - self.start]


@dataclass(frozen=True)
class Constant:
    value: Scalar

    def __call__(self, i: int) -> Scalar:
        return self.value


def _horner(coeffs: Sequence[Scalar], x: int) -> Scalar:
    acc: Scalar = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class RationalFunction:
    """num(n)/den(n), both as ascending-degree coefficient tuples."""

    num: tuple
    den: tuple

    def __call__(self, i: int) -> Scalar:
        return div(_horner(self.num, i), _horner(self.den, i))


@dataclass(frozen=True)
class Shifted:
    base: "CoefficientSequence"
    offset: int

    def __call__(self, i: int) -> Scalar:
        return self.base.at(i + self.offset)


def _integer_roots(coeffs: Sequence[Scalar], lo: int, hi: Optional[int]) -> list[int]:
    """Integer zeros of a polynomial inside [lo, hi], found within the Cauchy bound."""
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        raise ZeroDenominator("denominator polynomial is identically zero")
    if len(cs) == 1:
        return []
    lead = cs[-1]
    bound = 1 + max(abs(c / lead) for c in cs[:-1])
    b = math.ceil(bound)
    first = max(lo, -b)
    last = b if hi is None else min(hi, b)
    return [i for i in range(first, last + 1) if _horner(cs, i) == 0]


@dataclass(frozen=True)
class CoefficientSequence:
    """A map ``i -> d(i)`` over the integer interval ``[lo, hi]`` (``hi=None`` is unbounded).

    Access outside the domain raises :class:`IndexOutOfDomain`; there is no
    default value.
    """

    source: Any
    lo: int = 1
    hi: Optional[int] = None
    scalar: str = "rational"

    def __post_init__(self):
        if self.scalar not in SCALAR_MODES:
            raise InvalidParams(f"unknown scalar mode {self.scalar!r}")
        if self.hi is not None and self.hi < self.lo - 1:
            raise InvalidParams(f"malformed domain [{self.lo}, {self.hi}]")
        if isinstance(self.source, RationalFunction):
            roots = _integer_roots(self.source.den, self.lo, self.hi)
            if roots:
                raise ZeroDenominator(f"denominator vanishes at n = {roots[0]} inside the domain")

    def contains(self, i: int) -> bool:
        return self.lo <= i and (self.hi is None or i <= self.hi)

    def at(self, i: int) -> Scalar:
        if not self.contains(i):
            raise IndexOutOfDomain(i, self.lo, self.hi)
        v = self.source(i)
        return float(v) if self.scalar == "float64" else v

    __call__ = at

    def require(self, first: int, last: int) -> None:
        """Raise unless every index in ``[first, last]`` is in the domain (no-op if empty)."""
        if last < first:
            return
        for i in (first, last):
            if not self.contains(i):
                raise IndexOutOfDomain(i, self.lo, self.hi)

    def values(self, first: int, last: int) -> list[Scalar]:
        self.require(first, last)
        return [self.at(i) for i in range(first, last + 1)]

    def shifted(self, k: int) -> "CoefficientSequence":
        """The sequence ``m -> d(m + k)``."""
        hi = None if self.hi is None else self.hi - k
        return CoefficientSequence(Shifted(self, k), self.lo - k, hi, self.scalar)

    def with_scalar(self, mode: str) -> "CoefficientSequence":
        return CoefficientSequence(self.source, self.lo, self.hi, mode)


def coeff_at(seq: CoefficientSequence, i: int) -> Scalar:
    return seq.at(i)


def table(values: Sequence[Any], start: int = 1, scalar: str = "rational") -> CoefficientSequence:
    vals = tuple(as_scalar(v) for v in values)
    if not vals:
        raise InvalidParams("a coefficient table needs at least one value")
    return CoefficientSequence(Table(vals, start), start, start + len(vals) - 1, scalar)


def constant(value: Any, lo: int = 1, hi: Optional[int] = None, scalar: str = "rational") -> CoefficientSequence:
    return CoefficientSequence(Constant(as_scalar(value)), lo, hi, scalar)


def rational_function(num: Sequence[Any], den: Sequence[Any], lo: int = 1, hi: Optional[int] = None,
                      scalar: str = "rational") -> CoefficientSequence:
    src = RationalFunction(tuple(as_scalar(c) for c in num), tuple(as_scalar(c) for c in den))
    return CoefficientSequence(src, lo, hi, scalar)


# --------------------------------------------------------------------------
# Coefficient spec documents (JSON)
# --------------------------------------------------------------------------

def _domain(doc: dict, default_lo: int) -> tuple[int, Optional[int]]:
    dom = doc.get("domain")
    if dom is None:
        return default_lo, None
    if (not isinstance(dom, list) or len(dom) != 2 or not isinstance(dom[0], int)
            or not (dom[1] is None or isinstance(dom[1], int))):
        raise ParseError("domain must be [lo, hi] with integer lo and integer-or-null hi", "domain")
    return dom[0], dom[1]


def parse_coefficient_spec(text: str, scalar: str = "rational") -> CoefficientSequence:
    """Build a sequence from a JSON coefficient spec.

    Accepted documents::

        {"type": "table", "values": ["2", "3/4"], "start_index": 1}
        {"type": "constant", "value": "1", "domain": [1, null]}
        {"type": "rational_function", "num": ["0", "1"], "den": ["1"]}

    ``domain`` is optional for the constant and rational-function forms and
    defaults to ``[1, null]`` (unbounded above).
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
    if not isinstance(doc, dict):
        raise ParseError("coefficient spec must be a JSON object", 0)
    kind = doc.get("type")
    if kind == "table":
        values = doc.get("values")
        if not isinstance(values, list) or not values:
            raise ParseError("table needs a non-empty 'values' list", "values")
        start = doc.get("start_index", 1)
        if not isinstance(start, int) or isinstance(start, bool):
            raise ParseError("start_index must be an integer", "start_index")
        vals = [parse_rational(v, f"values[{j}]") for j, v in enumerate(values)]
        return table(vals, start, scalar)
    if kind == "constant":
        if "value" not in doc:
            raise ParseError("constant needs 'value'", "value")
        lo, hi = _domain(doc, 1)
        return constant(parse_rational(doc["value"], "value"), lo, hi, scalar)
    if kind == "rational_function":
        parts = {}
        for key in ("num", "den"):
            cs = doc.get(key)
            if not isinstance(cs, list) or not cs:
                raise ParseError(f"rational_function needs a non-empty '{key}' list", key)
            parts[key] = [parse_rational(c, f"{key}[{j}]") for j, c in enumerate(cs)]
        lo, hi = _domain(doc, 1)
        return rational_function(parts["num"], parts["den"], lo, hi, scalar)
    raise ParseError(f"unknown coefficient spec type {kind!r}", "type")


def load_coefficient_spec(path, scalar: str = "rational") -> CoefficientSequence:
    with open(path, encoding="utf-8") as fh:
        return parse_coefficient_spec(fh.read(), scalar)


def dump_table_spec(values: Sequence[Scalar], start: int = 1) -> str:
    return json.dumps({"type": "table", "values": [render_rational(v) for v in values],
                       "start_index": start})


# --------------------------------------------------------------------------
# Records
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class GeneralRecurrence:
    """W(n+1) = A(n) W(n) + B(n) W(n-1) with W(0) = C0, W(1) = C1."""

    A: CoefficientSequence
    B: CoefficientSequence
    C0: Scalar = Fraction(1)
    C1: Scalar = Fraction(1)

    def __post_init__(self):
        if self.C0 == 0 and self.C1 == 0:
            raise InvalidParams("C0 = C1 = 0 gives the trivial solution W = 0")

    def check_pivots(self, n_max: int) -> None:
        for i in range(1, n_max + 1):
            if self.A.at(i) == 0:
                raise ZeroPivot(i)


def is_gap_tuple(indices: Sequence[int], gap: int = 2) -> bool:
    """True for strictly increasing positive tuples with consecutive gaps >= ``gap``."""
    if any(i < 1 for i in indices):
        return False
    return all(b - a >= gap for a, b in zip(indices, indices[1:]))


@dataclass
class EvalReport:
    method: str
    value: Scalar
    terms_evaluated: int
    grid_points: Optional[int] = None
    wall_time_ns: int = 0
    n: Optional[int] = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.method not in METHODS:
            raise InvalidParams(f"unknown method {self.method!r}")
        if self.grid_points is not None and self.terms_evaluated > self.grid_points:
            raise InvalidParams("terms_evaluated cannot exceed grid_points")

    def to_dict(self) -> dict:
        out = {
            "method": self.method,
            "n": self.n,
            "value": render_rational(self.value),
            "terms_evaluated": self.terms_evaluated,
            "grid_points": self.grid_points,
            "wall_time_ns": self.wall_time_ns,
        }
        out.update(self.extra)
        return out
