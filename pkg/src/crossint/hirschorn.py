"""The conjectured optimum: exact counting over prefix-threshold pairs.

A candidate pair is parametrized by (s, u, v) with u + v = s + t and
u, v, s in [n]:

    F = {X in C([n], a) : |X n [s]| >= u},
    G = {Y in C([n], b) : |Y n [s]| >= v}.

Any such pair is cross-t-intersecting (two members meet in at least
u + v - s = t elements inside [s]).  The conjectured optimum over the
product (or sum) of the two sizes is an O(n^2) exact big-integer sweep;
triples with an empty side evaluate to 0 (product) or a one-sided sum and
are kept so the argmax ledger is complete.  s = 0 is excluded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from . import kernels
from .exactmath import binomial
from .setfam import Family, InstanceParams, full_layer

__all__ = [
    "count_prefix_threshold",
    "HirschornPair",
    "HirschornOptimum",
    "pair_sizes",
    "explicit_pair",
    "hirschorn_optimum",
    "hirschorn_product_value",
]

Functional = Literal["product", "sum"]


def count_prefix_threshold(n: int, m: int, s: int, u: int) -> int:
    """|{X in C([n], m) : |X n [s]| >= u}| = sum_{i>=u} C(s,i) C(n-s, m-i)."""
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    if not 1 <= s <= n:
        raise ValueError(f"need 1 <= s <= n, got s={s}")
    if u < 0:
        raise ValueError(f"need u >= 0, got u={u}")
    return sum(binomial(s, i) * binomial(n - s, m - i) for i in range(u, min(s, m) + 1))


def _threshold_table(n: int, m: int, s: int) -> list[int]:
    """T[u] = count_prefix_threshold(n, m, s, u) for u = 0..min(s,m), else 0."""
    top = min(s, m)
    table = [0] * (top + 2)
    acc = 0
    for i in range(top, -1, -1):
        acc += binomial(s, i) * binomial(n - s, m - i)
        table[i] = acc
    return table


@dataclass(frozen=True)
class HirschornPair:
    """One (s, u, v) prefix-threshold pair for a given instance."""

    params: InstanceParams
    s: int
    u: int
    v: int

    def __post_init__(self) -> None:
        n = self.params.n
        for name, val in (("s", self.s), ("u", self.u), ("v", self.v)):
            if not 1 <= val <= n:
                raise ValueError(f"{name} must lie in [1, {n}], got {val}")
        if self.u + self.v != self.s + self.params.t:
            raise ValueError(
                f"need u + v = s + t, got {self.u}+{self.v} != {self.s}+{self.params.t}"
            )


def pair_sizes(pair: HirschornPair) -> tuple[int, int]:
    """Exact (|F|, |G|) for the pair's two threshold families."""
    p = pair.params
    return (
        count_prefix_threshold(p.n, p.a, pair.s, pair.u),
        count_prefix_threshold(p.n, p.b, pair.s, pair.v),
    )


def explicit_pair(pair: HirschornPair) -> tuple[Family, Family]:
    """Materialize both families (n <= 32); used by tests and verification."""
    p = pair.params
    fa = full_layer(p.n, p.a)
    gb = full_layer(p.n, p.b)
    smask = (1 << pair.s) - 1
    f = Family.from_masks(
        p.n, p.a, (x for x in fa.members if (x & smask).bit_count() >= pair.u)
    )
    g = Family.from_masks(
        p.n, p.b, (y for y in gb.members if (y & smask).bit_count() >= pair.v)
    )
    return f, g


@dataclass(frozen=True)
class HirschornOptimum:
    """Exact optimum over all candidate triples, with the full argmax list."""

    value: int
    argmax: tuple[tuple[int, int, int], ...]  # (s, u, v), lexicographic
    functional: Functional = "product"


def hirschorn_optimum(
    params: InstanceParams, functional: Functional = "product"
) -> HirschornOptimum:
    """Sweep all (s, u, v) with u + v = s + t; exact value plus argmax.

    The loops run s then u ascending (v is determined), so the argmax list
    comes out lexicographic by (s, u, v) with no post-sorting.
    """
    if functional not in ("product", "sum"):
        raise ValueError(f"unknown functional {functional!r}")
    n, a, b, t = params.n, params.a, params.b, params.t
    best = -1
    argmax: list[tuple[int, int, int]] = []
    for s in range(1, n + 1):
        ta = _threshold_table(n, a, s)
        tb = _threshold_table(n, b, s)
        for u in range(1, n + 1):
            v = s + t - u
            if not 1 <= v <= n:
                continue
            fa = ta[u] if u < len(ta) else 0
            gb = tb[v] if v < len(tb) else 0
            val = fa * gb if functional == "product" else fa + gb
            if val > best:
                best = val
                argmax = [(s, u, v)]
            elif val == best:
                argmax.append((s, u, v))
    return HirschornOptimum(best, tuple(argmax), functional)


def hirschorn_product_value(params: InstanceParams) -> int:
    """Value-only product optimum via the kernel backend (no argmax).

    Exact; the compiled path covers n <= 64, larger n falls back to the
    pure sweep.  Cross-checked against hirschorn_optimum in the tests.
    """
    return kernels.hirschorn_product_max(params.n, params.a, params.b, params.t)
