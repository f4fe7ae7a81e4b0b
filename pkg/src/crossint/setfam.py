"""Explicit set families over [n] = {1..n} and the left-compression machinery.

Conventions
-----------
A subset X of [n] is a plain int bitmask: bit i-1 set  <=>  element i in X.
Explicit families are limited to n <= 32 so a set always fits one machine
word; the counting modules have no such limit.  `Family.members` is kept
duplicate-free in ascending bitmask order, which makes family equality
structural and (because the dominance order refines numeric order on equal
popcounts) doubles as a linear extension for the ideal enumeration in the
oracle module.

The compression delta_ij (i < j) replaces j by i in a set when j is present
and i absent; its family lift Delta_ij moves delta_ij(X) into the family
unless the image is already there, preserving the family size.  A family
closed under every left compression is "left compressed".
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

__all__ = [
    "SetMask",
    "set_of",
    "elements",
    "complement",
    "mth_element",
    "weight",
    "family_weight",
    "delta_compress",
    "dominance_leq",
    "Family",
    "full_layer",
    "InstanceParams",
    "family_compress",
    "is_left_compressed",
    "is_cross_t_intersecting",
    "condition_a",
    "condition_b",
    "compress_pair_trace",
    "compress_pair_to_fixpoint",
    "family_to_text",
    "family_from_text",
]

SetMask = int

MAX_EXPLICIT_N = 32


def set_of(elems: Iterable[int]) -> SetMask:
    """Bitmask of a collection of elements from [n] (1-based)."""
    m = 0
    for e in elems:
        if e < 1:
            raise ValueError(f"elements are 1-based, got {e}")
        m |= 1 << (e - 1)
    return m


def elements(mask: SetMask) -> list[int]:
    """Elements of a mask in increasing order."""
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return out


def complement(mask: SetMask, n: int) -> SetMask:
    return ~mask & ((1 << n) - 1)


def mth_element(mask: SetMask, i: int) -> int:
    """The i-th element of the set in increasing order, 1 <= i <= |X|."""
    if i < 1:
        raise ValueError(f"mth_element: index must be >= 1, got {i}")
    seen = 0
    e = 1
    while mask:
        if mask & 1:
            seen += 1
            if seen == i:
                return e
        mask >>= 1
        e += 1
    raise ValueError(f"mth_element: index {i} exceeds set size {seen}")


def weight(mask: SetMask) -> int:
    """Sum of the elements of the set (0 for the empty set)."""
    w = 0
    e = 1
    while mask:
        if mask & 1:
            w += e
        mask >>= 1
        e += 1
    return w


def delta_compress(mask: SetMask, i: int, j: int) -> SetMask:
    """delta_ij: replace j by i when j is in the set and i is not.

    Requires i < j (left compression); preserves cardinality.
    """
    if not 1 <= i < j:
        raise ValueError(f"delta_compress: need 1 <= i < j, got i={i}, j={j}")
    bi = 1 << (i - 1)
    bj = 1 << (j - 1)
    if mask & bj and not mask & bi:
        return (mask ^ bj) | bi
    return mask


def dominance_leq(a: SetMask, b: SetMask) -> bool:
    """a <= b in the dominance order on equal-size sets.

    Componentwise comparison of the sorted element sequences; its down-sets
    are exactly the left-compressed families.
    """
    ea, eb = elements(a), elements(b)
    if len(ea) != len(eb):
        raise ValueError("dominance order compares equal-size sets only")
    return all(x <= y for x, y in zip(ea, eb))


@dataclass(frozen=True)
class Family:
    """A uniform family: `members` are distinct size-`size` subsets of [n]."""

    n: int
    size: int
    members: tuple[SetMask, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_EXPLICIT_N:
            raise ValueError(f"explicit families need 1 <= n <= {MAX_EXPLICIT_N}")
        if not 0 <= self.size <= self.n:
            raise ValueError(f"member size {self.size} out of range for n={self.n}")
        univ = (1 << self.n) - 1
        prev = -1
        for m in self.members:
            if m <= prev:
                raise ValueError("members must be strictly ascending (no duplicates)")
            if m & ~univ:
                raise ValueError(f"member {m:#x} has elements outside [{self.n}]")
            if m.bit_count() != self.size:
                raise ValueError(f"member {m:#x} is not {self.size}-uniform")
            prev = m

    @classmethod
    def from_masks(cls, n: int, size: int, masks: Iterable[SetMask]) -> "Family":
        return cls(n, size, tuple(sorted(masks)))

    @classmethod
    def from_element_sets(
        cls, n: int, size: int, sets: Iterable[Iterable[int]]
    ) -> "Family":
        return cls.from_masks(n, size, (set_of(s) for s in sets))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, mask: SetMask) -> bool:
        return mask in set(self.members)


def full_layer(n: int, k: int) -> Family:
    """All k-subsets of [n], in canonical order."""
    masks = sorted(set_of(c) for c in combinations(range(1, n + 1), k))
    return Family(n, k, tuple(masks))


def family_weight(fam: Family) -> int:
    return sum(weight(m) for m in fam.members)


@dataclass(frozen=True)
class InstanceParams:
    """The (n, a, b, t) quadruple of one optimization instance.

    t may exceed min(a, b); such instances are degenerate (no nonempty
    cross-t pair exists) but every sweep evaluates them to 0 rather than
    rejecting them.
    """

    n: int
    a: int
    b: int
    t: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not 1 <= self.a <= self.n:
            raise ValueError(f"need 1 <= a <= n, got a={self.a}, n={self.n}")
        if not 1 <= self.b <= self.n:
            raise ValueError(f"need 1 <= b <= n, got b={self.b}, n={self.n}")
        if not 1 <= self.t <= self.n:
            raise ValueError(f"need 1 <= t <= n, got t={self.t}, n={self.n}")


def family_compress(fam: Family, i: int, j: int) -> Family:
    """Delta_ij lifted to the family; always |Delta_ij(F)| = |F|."""
    present = set(fam.members)
    out = []
    for x in fam.members:
        y = delta_compress(x, i, j)
        if y != x and y not in present:
            out.append(y)
        else:
            out.append(x)
    return Family.from_masks(fam.n, fam.size, out)


def is_left_compressed(fam: Family) -> bool:
    """True iff delta_ij(X) stays in the family for every X and i < j."""
    present = set(fam.members)
    for x in fam.members:
        for j in elements(x):
            for i in range(1, j):
                if not x & (1 << (i - 1)):
                    if ((x ^ (1 << (j - 1))) | (1 << (i - 1))) not in present:
                        return False
    return True


def is_cross_t_intersecting(f: Family, g: Family, t: int) -> bool:
    """|F & G| >= t for every pair; vacuously true if either side is empty."""
    if f.n != g.n:
        raise ValueError(f"families live over different ground sets: {f.n} vs {g.n}")
    for x in f.members:
        for y in g.members:
            if (x & y).bit_count() < t:
                return False
    return True


def condition_a(f: SetMask, g: SetMask, t: int, n: int) -> bool:
    """Some prefix [s], s in [n], has |F n [s]| + |G n [s]| >= s + t."""
    cf = cg = 0
    for s in range(1, n + 1):
        bit = 1 << (s - 1)
        if f & bit:
            cf += 1
        if g & bit:
            cg += 1
        if cf + cg >= s + t:
            return True
    return False


def condition_b(f: SetMask, g: SetMask, t: int, n: int) -> bool:
    """Boundary reformulation: some i in [a-t+1] has m(~G, i) > m(F, t+i-1).

    Requires n > a + b - t (with a = |F|, b = |G|) so that ~G has at least
    a - t + 1 elements and every index below is defined.
    """
    a = f.bit_count()
    b = g.bit_count()
    if n <= a + b - t:
        raise ValueError(
            f"condition_b needs n > a+b-t, got n={n}, a={a}, b={b}, t={t}"
        )
    gbar = elements(complement(g, n))
    fe = elements(f)
    for i in range(1, a - t + 2):
        if gbar[i - 1] > fe[t + i - 2]:
            return True
    return False


def _first_active_compression(fam: Family) -> tuple[int, int] | None:
    """Smallest (i, j) lexicographically with Delta_ij(F) != F, else None."""
    present = set(fam.members)
    for i in range(1, fam.n):
        bi = 1 << (i - 1)
        for j in range(i + 1, fam.n + 1):
            bj = 1 << (j - 1)
            for x in fam.members:
                if x & bj and not x & bi and ((x ^ bj) | bi) not in present:
                    return (i, j)
    return None


def compress_pair_trace(
    f: Family, g: Family, compress_g: bool = False
) -> Iterator[tuple[int, int, Family, Family]]:
    """Drive F to its left-compressed fixpoint, applying each Delta_ij to
    BOTH families; yields (i, j, F', G') after every applied step.

    Each step strictly decreases the weight of F, so the loop terminates.
    With compress_g=True a second phase then drives G the same way (F is
    already closed, so further steps leave it unchanged).
    """
    while (ij := _first_active_compression(f)) is not None:
        i, j = ij
        f = family_compress(f, i, j)
        g = family_compress(g, i, j)
        yield (i, j, f, g)
    if compress_g:
        while (ij := _first_active_compression(g)) is not None:
            i, j = ij
            f = family_compress(f, i, j)
            g = family_compress(g, i, j)
            yield (i, j, f, g)


def compress_pair_to_fixpoint(
    f: Family, g: Family, compress_g: bool = False
) -> tuple[Family, Family, int]:
    """Left-compress the pair; returns (F*, G*, number of applied steps)."""
    steps = 0
    for _, _, f, g in compress_pair_trace(f, g, compress_g=compress_g):
        steps += 1
    return f, g, steps


def family_to_text(fam: Family) -> str:
    """Serialize: header 'n=<n> size=<k>', then one member per line as a
    comma-separated element list."""
    lines = [f"n={fam.n} size={fam.size}"]
    for m in fam.members:
        lines.append(",".join(str(e) for e in elements(m)))
    return "\n".join(lines) + "\n"


def family_from_text(text: str) -> Family:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty family text")
    header = lines[0].split()
    try:
        n = int(header[0].removeprefix("n="))
        size = int(header[1].removeprefix("size="))
    except (IndexError, ValueError) as exc:
        raise ValueError(f"bad family header: {lines[0]!r}") from exc
    masks = []
    for ln in lines[1:]:
        masks.append(set_of(int(tok) for tok in ln.split(",")))
    return Family.from_masks(n, size, masks)
