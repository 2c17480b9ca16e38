"""Exact evaluators for the packing-or-cover gap bounds.

Both bound formulas are evaluated in exact integer arithmetic. The only
irrational ingredients are log2(2k) for non-power-of-two k and the square
root introduced by an odd half-power exponent; those are handled with
directed rounding so the returned value never undershoots the true bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_CEILING, ROUND_FLOOR, Decimal, localcontext
from math import isqrt

from .errors import ParameterError


@dataclass(frozen=True)
class BoundParams:
    """Parameter bundle for the gap bounds: packing target k, pattern
    vertex count r, and the clique-forcing constant c (at most 648)."""

    k: int
    r: int
    c: int = 648

    def __post_init__(self) -> None:
        if self.k < 1 or self.r < 1:
            raise ParameterError("k and r must be at least 1")
        if self.c > 648:
            raise ParameterError("c must not exceed 648")


def bound_th2(k: int, r: int) -> int:
    """20 k^2 r^2 - 8 k^2 r + 2r - 1, exactly."""
    if k < 1 or r < 1:
        raise ParameterError("k and r must be at least 1")
    return 20 * k * k * r * r - 8 * k * k * r + 2 * r - 1


def _half_power(e: int) -> tuple[int, int]:
    """(floor, ceil) of 2^(e/2) as integers; exact and equal for even e."""
    if e % 2 == 0:
        x = 1 << (e // 2)
        return x, x
    lo = isqrt(1 << e)
    return lo, lo + 1


@dataclass(frozen=True)
class ThOneBound:
    """Value coefficient * log2(log_argument) + offset, kept symbolic.

    int() returns the exact value when log_argument is a power of two and
    the ceiling otherwise; the bound must never round down.
    """

    coefficient: int
    log_argument: int
    offset: int

    @property
    def log_exact(self) -> bool:
        a = self.log_argument
        return a & (a - 1) == 0

    def __int__(self) -> int:
        if self.log_exact:
            return self.coefficient * (self.log_argument.bit_length() - 1) + self.offset
        with localcontext() as ctx:
            ctx.prec = 60
            log2 = Decimal(self.log_argument).ln() / Decimal(2).ln()
            prod = log2 * self.coefficient
            frac = prod - prod.to_integral_value(rounding=ROUND_FLOOR)
            # With 60 digits the error is far below this band; a product
            # this close to an integer would make the ceiling unreliable.
            assert Decimal("1e-20") < frac < 1 - Decimal("1e-20")
            return int(prod.to_integral_value(rounding=ROUND_CEILING)) + self.offset

    def __str__(self) -> str:
        return (
            f"{self.coefficient} * log2({self.log_argument}) + {self.offset}"
        )


def bound_th1(k: int, r: int) -> ThOneBound:
    """k^2 log2(2k) (180 * 2^(r(r-2)) - 24 * 2^(r(r-2)/2))
    + 6 * 2^(r(r-2)/2) - 1, requiring r at least 6.

    For odd r(r-2) the subtracted half-power is floored and the added one
    is ceiled, so the result stays an upper bound. The log2 factor stays
    symbolic inside the returned object; int() collapses it.
    """
    if k < 1:
        raise ParameterError("k must be at least 1")
    if r <= 5:
        raise ParameterError(f"r must exceed 5, got {r}")
    e = r * (r - 2)
    half_lo, half_hi = _half_power(e)
    coeff = k * k * (180 * (1 << e) - 24 * half_lo)
    offset = 6 * half_hi - 1
    return ThOneBound(coeff, 2 * k, offset)


def kostochka_threshold(t: int) -> float:
    """648 t sqrt(log2 t): the documented average-degree threshold forcing
    a complete minor on t vertices. Evaluation only."""
    if t < 1:
        raise ParameterError("t must be at least 1")
    return 648.0 * t * math.sqrt(math.log2(t))
