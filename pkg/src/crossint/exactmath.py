"""Exact combinatorial arithmetic and the binary-entropy (Shannon) function.

Every cardinality in this package is an exact Python int; floating point
appears only when comparing counts against analytic bounds, and then always
on the natural-log scale (the bounds overflow a linear double already around
n = 700).  `LogValue` is the carrier for that log-scale arithmetic, with an
explicit flag for log(0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "binomial",
    "shannon_h",
    "LogValue",
    "log_of_count",
]


def binomial(n: int, k: int) -> int:
    """C(n, k) as an exact integer, with C(n, k) = 0 for k < 0 or k > n.

    The out-of-range convention keeps parameter sweeps free of case splits:
    vanishing terms simply contribute 0.  Negative n is a usage error.
    """
    if n < 0:
        raise ValueError(f"binomial: n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def shannon_h(x: float) -> float:
    """Binary entropy in nats: x*ln(1/x) + (1-x)*ln(1/(1-x)).

    Defined on [0, 1], extended to the endpoints by continuity (value 0).
    """
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"shannon_h: argument must lie in [0, 1], got {x}")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -(x * math.log(x) + (1.0 - x) * math.log1p(-x))


@dataclass(frozen=True)
class LogValue:
    """A nonnegative quantity stored as its natural log, or an exact zero."""

    ln_value: float
    is_zero: bool = False

    def leq(self, other: "LogValue", tol: float = 1e-9) -> bool:
        """self <= other up to `tol` slack in log scale (relative in linear)."""
        if self.is_zero:
            return True
        if other.is_zero:
            return False
        return self.ln_value <= other.ln_value + tol

    def geq(self, other: "LogValue", tol: float = 1e-9) -> bool:
        return other.leq(self, tol)


def log_of_count(c: int) -> LogValue:
    """Natural log of an exact count; 0 maps to the is_zero sentinel.

    math.log on a Python int goes through an exact frexp decomposition, so
    the result is correct to a unit in the last place even for counts far
    beyond float range.
    """
    if c < 0:
        raise ValueError(f"log_of_count: counts are nonnegative, got {c}")
    if c == 0:
        return LogValue(0.0, is_zero=True)
    return LogValue(math.log(c))
