"""The relaxed-constraint quantity M, its sandwich, and two analytic bounds.

M relaxes the prefix-pair constraint to u + v >= s + t and scores a triple
by the exact-intersection product

    C(s,u) C(n-s, a-u) * C(s,v) C(n-s, b-v),

the size product of {|F n [s]| = u} x {|G n [s]| = v}, which is a cross-t
pair under the relaxed constraint.  Hence M <= N <= n^3 M (there are at
most n^3 triples).  Two closed-form upper bounds on N follow for
a + b < n + t:

    (a)  n^3 * exp(2 h((a+b-2t)/(2n)) n)           [entropy bound]
    (b)  8 n^4 * exp(-(min(t, n-a-b+t))^2
              / (8 (min(a,n-a) + min(b,n-b)))) * C(n,a) C(n,b)

Both are evaluated only in natural-log scale; they overflow linear doubles
long before interesting n.  When a + b >= n + t every pair of full layers
is cross-t-intersecting and N = C(n,a) C(n,b) exactly (the trivial regime).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exactmath import LogValue, binomial, log_of_count, shannon_h
from .setfam import InstanceParams

__all__ = [
    "compute_M",
    "entropy_bound",
    "concentration_bound",
    "sandwich_check",
    "BoundsReport",
    "bounds_report",
    "is_trivial_regime",
]


def is_trivial_regime(params: InstanceParams) -> bool:
    return params.a + params.b >= params.n + params.t


def compute_M(params: InstanceParams) -> tuple[int, tuple[tuple[int, int, int], ...]]:
    """Exact max of the relaxed exact-intersection product over u+v >= s+t.

    Triples with a vanishing binomial are swept (value 0), not pre-filtered,
    so the argmax list is complete even for degenerate instances.  Lexicographic
    argmax order by (s, u, v).
    """
    n, a, b, t = params.n, params.a, params.b, params.t
    best = -1
    argmax: list[tuple[int, int, int]] = []
    for s in range(1, n + 1):
        for u in range(1, n + 1):
            fu = binomial(s, u) * binomial(n - s, a - u)
            if fu == 0 and best > 0:
                continue
            for v in range(max(1, s + t - u), n + 1):
                val = fu * binomial(s, v) * binomial(n - s, b - v)
                if val > best:
                    best = val
                    argmax = [(s, u, v)]
                elif val == best:
                    argmax.append((s, u, v))
    return best, tuple(argmax)


def _require_bound_hypothesis(params: InstanceParams) -> None:
    n, a, b, t = params.n, params.a, params.b, params.t
    if a + b >= n + t:
        raise ValueError(
            f"a+b >= n+t is the trivial regime (optimum C({n},{a})*C({n},{b}) "
            "exactly); the analytic bounds require a+b < n+t"
        )
    if t > min(a, b):
        raise ValueError(
            f"the analytic bounds need t <= min(a,b), got t={t}, a={a}, b={b}"
        )


def entropy_bound(params: InstanceParams) -> LogValue:
    """ln of n^3 * exp(2 h((a+b-2t)/(2n)) n); requires a + b < n + t."""
    _require_bound_hypothesis(params)
    n, a, b, t = params.n, params.a, params.b, params.t
    x = (a + b - 2 * t) / (2 * n)
    return LogValue(3 * math.log(n) + 2 * shannon_h(x) * n)


def concentration_bound(params: InstanceParams) -> LogValue:
    """ln of 8 n^4 exp(-min(t, n-a-b+t)^2 / (8 (min(a,n-a)+min(b,n-b))))
    * C(n,a) C(n,b); requires a + b < n + t."""
    _require_bound_hypothesis(params)
    n, a, b, t = params.n, params.a, params.b, params.t
    margin = min(t, n - a - b + t)
    denom = 8 * (min(a, n - a) + min(b, n - b))
    ln = (
        math.log(8)
        + 4 * math.log(n)
        - margin * margin / denom
        + log_of_count(binomial(n, a)).ln_value
        + log_of_count(binomial(n, b)).ln_value
    )
    return LogValue(ln)


def sandwich_check(params: InstanceParams, exact: int) -> bool:
    """M <= exact <= n^3 * M, all comparisons exact big-integer."""
    m, _ = compute_M(params)
    return m <= exact <= params.n**3 * m


@dataclass(frozen=True)
class BoundsReport:
    params: InstanceParams
    regime: str  # "normal" | "trivial"
    m_value: int
    m_argmax: tuple[tuple[int, int, int], ...]
    sandwich_hi: int  # n^3 * M
    trivial_bound_ln: LogValue  # ln(C(n,a) * C(n,b))
    entropy_bound_ln: LogValue | None  # None in the trivial regime
    concentration_bound_ln: LogValue | None
    trivial_exact: int | None  # C(n,a)*C(n,b) when regime == "trivial"


def bounds_report(params: InstanceParams) -> BoundsReport:
    n, a, b = params.n, params.a, params.b
    m_value, m_argmax = compute_M(params)
    product = binomial(n, a) * binomial(n, b)
    if is_trivial_regime(params):
        return BoundsReport(
            params=params,
            regime="trivial",
            m_value=m_value,
            m_argmax=m_argmax,
            sandwich_hi=n**3 * m_value,
            trivial_bound_ln=log_of_count(product),
            entropy_bound_ln=None,
            concentration_bound_ln=None,
            trivial_exact=product,
        )
    return BoundsReport(
        params=params,
        regime="normal",
        m_value=m_value,
        m_argmax=m_argmax,
        sandwich_hi=n**3 * m_value,
        trivial_bound_ln=log_of_count(product),
        entropy_bound_ln=entropy_bound(params),
        concentration_bound_ln=concentration_bound(params),
        trivial_exact=None,
    )
