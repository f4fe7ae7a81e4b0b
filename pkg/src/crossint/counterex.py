"""The two counterexample machines.

1. Parameters (n, 2, n-2, 1).  A 2-set and an (n-2)-set intersect unless
   they are complements, so the true optimum is reached by splitting
   C([n], 2) in half and replacing one half by its complements, giving
   (C(n,2)/2)^2 whenever C(n,2) is even.  A nontrivial prefix-threshold
   pair here always has |F| + |G| = C(n,2), so it can only match the split
   when |F| = |G|, i.e. when

       2s^2 - (4n - 2)s + n^2 - n = 0

   has an integer root s in [n] (case 1 sizes; case 2 is the s -> n-s
   substitution).  For n = 8 (mod 12) we have n = 2 (mod 3), the equation
   reduces to s^2 = 2 (mod 3) which has no solution, and the conjectured
   optimum is strictly below the split product.

2. Parameters n = 4k+3, a = 2k+1, b = 2k+2, t = 2.  The double-threshold
   families A_k (conjunctive) and B_k (disjunctive) beat every
   prefix-threshold pair for 3 <= k <= 50.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .exactmath import binomial
from .hirschorn import hirschorn_optimum
from .setfam import Family, InstanceParams, complement, elements, full_layer, set_of

__all__ = [
    "case1_sizes",
    "case2_sizes",
    "quadratic_roots",
    "quadratic_roots_closed_form",
    "mod3_certificate",
    "Prop4Report",
    "prop4_scan",
    "count_two_prefix",
    "AkBkReport",
    "akbk_report",
    "akbk_params",
    "build_akbk_families",
    "is_cross_t_by_violators",
    "PAPER_VERIFIED_K_RANGE",
]

PAPER_VERIFIED_K_RANGE = range(3, 51)


def case1_sizes(n: int, s: int) -> tuple[int, int]:
    """Sizes of the (u=1, v=s) pair: |F| = s(n-s) + C(s,2), |G| = C(n-s,2)."""
    return s * (n - s) + binomial(s, 2), binomial(n - s, 2)


def case2_sizes(n: int, s: int) -> tuple[int, int]:
    """Sizes of the (u=2, v=s-1) pair: |F| = C(s,2), |G| = s(n-s) + C(n-s,2)."""
    return binomial(s, 2), s * (n - s) + binomial(n - s, 2)


def quadratic_roots(n: int) -> list[int]:
    """Integer roots in [n] of 2s^2 - (4n-2)s + n^2 - n = 0, by direct scan."""
    return [
        s for s in range(1, n + 1) if 2 * s * s - (4 * n - 2) * s + n * n - n == 0
    ]


def quadratic_roots_closed_form(n: int) -> list[int]:
    """Same roots via the discriminant; O(1) per n, cross-checked in tests.

    s = ((2n - 1) +- q) / 2 with q^2 = 2n^2 - 2n + 1; the discriminant is
    odd, so q (when it exists) is odd and both candidates are integers.
    """
    d = 2 * n * n - 2 * n + 1
    q = math.isqrt(d)
    if q * q != d:
        return []
    roots = {(2 * n - 1 - q) // 2, (2 * n - 1 + q) // 2}
    return sorted(s for s in roots if 1 <= s <= n)


def mod3_certificate(n: int) -> bool:
    """True iff n = 2 (mod 3), which forces the quadratic to have no integer
    root (it reduces to s^2 = 2 mod 3).  False does not imply a root exists."""
    return n % 3 == 2


@dataclass(frozen=True)
class Prop4Report:
    n: int
    binom_half: int  # C(n,2) / 2
    split_product: int  # (C(n,2) / 2)^2
    hirschorn_max: int
    hirschorn_argmax: tuple[tuple[int, int, int], ...]
    quadratic_roots: tuple[int, ...]

    @property
    def in_series(self) -> bool:
        return self.n % 12 == 8

    @property
    def strictly_below_split(self) -> bool:
        return self.hirschorn_max < self.split_product


def prop4_scan(n: int) -> Prop4Report:
    """Full report for the (n, 2, n-2, 1) instance.

    Accepts any n >= 4 with C(n,2) even; asserting the counterexample
    inequality is left to the caller (only the n = 8 mod 12 series carries
    a claim).
    """
    if n < 4:
        raise ValueError(f"prop4_scan needs n >= 4, got {n}")
    pairs = binomial(n, 2)
    if pairs % 2 != 0:
        raise ValueError(
            f"the split construction needs C(n,2) even; C({n},2) = {pairs}"
        )
    half = pairs // 2
    opt = hirschorn_optimum(InstanceParams(n, 2, n - 2, 1), "product")
    return Prop4Report(
        n=n,
        binom_half=half,
        split_product=half * half,
        hirschorn_max=opt.value,
        hirschorn_argmax=opt.argmax,
        quadratic_roots=tuple(quadratic_roots(n)),
    )


def count_two_prefix(
    n: int,
    m: int,
    s1: int,
    s2: int,
    predicate: Callable[[int, int], bool],
) -> int:
    """|{X in C([n], m) : predicate(|X n [s1]|, |X n [s2]|)}| for s1 < s2.

    Sums C(s1, i) * C(s2-s1, j) * C(n-s2, m-i-j) over the prefix profile
    (i, j); the predicate receives (|X n [s1]|, |X n [s2]|) = (i, i + j).
    """
    if not 1 <= s1 < s2 <= n:
        raise ValueError(f"need 1 <= s1 < s2 <= n, got s1={s1}, s2={s2}, n={n}")
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m}")
    total = 0
    for i in range(min(s1, m) + 1):
        ci = binomial(s1, i)
        for j in range(min(s2 - s1, m - i) + 1):
            if predicate(i, i + j):
                total += ci * binomial(s2 - s1, j) * binomial(n - s2, m - i - j)
    return total


def akbk_params(k: int) -> InstanceParams:
    return InstanceParams(4 * k + 3, 2 * k + 1, 2 * k + 2, 2)


@dataclass(frozen=True)
class AkBkReport:
    k: int
    n: int
    a: int
    b: int
    size_a: int
    size_b: int
    product: int
    hirschorn_max: int
    hirschorn_argmax: tuple[tuple[int, int, int], ...]
    # the source text states the b parameter of the conjectured optimum both
    # ways (2k+2 and 2k+3); the corrected value 2k+2 = |B_k| members' size is
    # primary, the literal 2k+3 evaluation is kept for transparency
    hirschorn_max_literal_b: int

    @property
    def in_paper_range(self) -> bool:
        return self.k in PAPER_VERIFIED_K_RANGE

    @property
    def beats_hirschorn(self) -> bool:
        return self.product > self.hirschorn_max

    @property
    def expected_triple(self) -> tuple[int, int, int]:
        return (2 * self.k, self.k + 1, self.k + 1)


def akbk_report(k: int) -> AkBkReport:
    """Exact sizes of A_k, B_k and the conjectured optimum they beat.

    A_k = {|A n [2k+1]| >= k+1 and |A n [2k+3]| >= k+2} inside C([n], 2k+1),
    B_k = {|B n [2k+1]| >= k+2 or  |B n [2k+3]| >= k+3} inside C([n], 2k+2),
    with n = 4k+3; the pair is cross-2-intersecting.
    """
    if k < 3:
        raise ValueError(f"the construction needs k >= 3, got {k}")
    params = akbk_params(k)
    n, a, b = params.n, params.a, params.b
    s1, s2 = 2 * k + 1, 2 * k + 3
    size_a = count_two_prefix(n, a, s1, s2, lambda c1, c2: c1 >= k + 1 and c2 >= k + 2)
    size_b = count_two_prefix(n, b, s1, s2, lambda c1, c2: c1 >= k + 2 or c2 >= k + 3)
    opt = hirschorn_optimum(params, "product")
    literal = hirschorn_optimum(InstanceParams(n, a, 2 * k + 3, 2), "product")
    return AkBkReport(
        k=k,
        n=n,
        a=a,
        b=b,
        size_a=size_a,
        size_b=size_b,
        product=size_a * size_b,
        hirschorn_max=opt.value,
        hirschorn_argmax=opt.argmax,
        hirschorn_max_literal_b=literal.value,
    )


def build_akbk_families(k: int) -> tuple[Family, Family]:
    """Materialize A_k and B_k by bitmask enumeration (needs 4k+3 <= 32)."""
    params = akbk_params(k)
    n, a, b = params.n, params.a, params.b
    m1 = (1 << (2 * k + 1)) - 1
    m2 = (1 << (2 * k + 3)) - 1
    fam_a = Family.from_masks(
        n,
        a,
        (
            x
            for x in full_layer(n, a).members
            if (x & m1).bit_count() >= k + 1 and (x & m2).bit_count() >= k + 2
        ),
    )
    fam_b = Family.from_masks(
        n,
        b,
        (
            y
            for y in full_layer(n, b).members
            if (y & m1).bit_count() >= k + 2 or (y & m2).bit_count() >= k + 3
        ),
    )
    return fam_a, fam_b


def is_cross_t_by_violators(f: Family, g: Family, t: int) -> bool:
    """Cross-t check that never walks |F| x |G| pairs.

    For each A in F it enumerates every b-set B with |A n B| < t (choose
    c < t elements inside A and b-c outside) and tests membership in G.
    Equivalent to the pairwise check; preferable when the families are large
    but near-complementary, where few low-intersection partners exist.
    """
    if f.n != g.n:
        raise ValueError("families live over different ground sets")
    gset = set(g.members)
    b = g.size
    for a_mask in f.members:
        inside = elements(a_mask)
        outside = elements(complement(a_mask, f.n))
        for c in range(min(t, len(inside) + 1)):
            if b - c > len(outside):
                continue
            for ins in combinations(inside, c):
                base = set_of(ins)
                for outs in combinations(outside, b - c):
                    if (base | set_of(outs)) in gset:
                        return False
    return True
