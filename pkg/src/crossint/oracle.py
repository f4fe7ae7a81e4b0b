"""Exact brute-force optimum N(n, a, b, t) on small instances.

Two independently implemented search modes validate each other:

* exhaustive: sweep every subfamily F of C([n], a) (2^C(n,a) index masks,
  capped at C(n,a) <= 24 by default) with G fixed to the Galois dual of F.
  The dual is the largest b-uniform partner, and both functionals are
  monotone in |G|, so restricting G to the dual is lossless.
* compressed: enumerate only left-compressed candidate families F, i.e. the
  down-sets of the dominance order on the a-layer, by a depth-first ideal
  enumeration with sound pruning.  Restricting to left-compressed F is
  lossless because the family compression Delta_ij preserves sizes and the
  cross-t property, and both functionals depend on sizes only.

Witness determinism: among optima both modes return the F of minimal total
weight, then minimal member-lex; every minimal-weight optimum is provably
left-compressed, so the two modes agree on witnesses, not just values.

Caps are configuration, not hard-coded truth: exceeding one raises
SearchCapExceeded (CLI exit 3), never a silent truncation.  Raise them via
the CROSSINT_CAPS environment variable, e.g. "exhaustive=26,compressed=13".
Within the compressed cap, mid-range a can still make the ideal count
infeasible in practice; the cap guards input size, not guaranteed runtime.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Literal

from . import kernels
from .exactmath import binomial
from .setfam import (
    Family,
    InstanceParams,
    dominance_leq,
    full_layer,
    weight,
)

__all__ = [
    "SearchCapExceeded",
    "Caps",
    "get_caps",
    "OracleResult",
    "dual_family",
    "oracle_exhaustive",
    "oracle_compressed",
    "solve",
    "complement_transfer",
]

Functional = Literal["product", "sum"]


class SearchCapExceeded(Exception):
    """The instance exceeds the configured search caps."""


@dataclass(frozen=True)
class Caps:
    exhaustive_layer: int = 24  # max C(n, a) for the exhaustive sweep
    compressed_n: int = 12  # max ground-set size for the ideal DFS


def get_caps() -> Caps:
    """Default caps, overridable via CROSSINT_CAPS."""
    spec = os.environ.get("CROSSINT_CAPS", "")
    caps = Caps()
    if not spec.strip():
        return caps
    values = {}
    for part in spec.split(","):
        key, _, val = part.partition("=")
        key = key.strip()
        if key not in ("exhaustive", "compressed"):
            raise ValueError(f"CROSSINT_CAPS: unknown cap {key!r}")
        values[key] = int(val)
    return Caps(
        exhaustive_layer=values.get("exhaustive", caps.exhaustive_layer),
        compressed_n=values.get("compressed", caps.compressed_n),
    )


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness_f: Family
    witness_g: Family
    mode: str
    nodes_explored: int

    @property
    def degenerate(self) -> bool:
        """True when one witness side is empty (product 0 / one-sided sum)."""
        return len(self.witness_f) == 0 or len(self.witness_g) == 0


def dual_family(f: Family, b: int, t: int) -> Family:
    """The largest b-uniform family cross-t-intersecting with F.

    The dual of the empty family is all of C([n], b); any cross-t partner
    G of F satisfies G subset-of dual(F).
    """
    members = [
        g
        for g in full_layer(f.n, b).members
        if all((g & x).bit_count() >= t for x in f.members)
    ]
    return Family.from_masks(f.n, b, members)


def _functional_value(functional: Functional, fs: int, gs: int) -> int:
    return fs * gs if functional == "product" else fs + gs


def _layer_and_compat(params: InstanceParams) -> tuple[Family, Family, list[int]]:
    """Layers plus, per a-layer member, the bitmask of compatible partners."""
    la = full_layer(params.n, params.a)
    lb = full_layer(params.n, params.b)
    compat = []
    for x in la.members:
        m = 0
        for gi, y in enumerate(lb.members):
            if (x & y).bit_count() >= params.t:
                m |= 1 << gi
        compat.append(m)
    return la, lb, compat


def _result_from_mask(
    params: InstanceParams,
    functional: Functional,
    la: Family,
    lb: Family,
    fmask: int,
    value: int,
    mode: str,
    nodes: int,
) -> OracleResult:
    members = [la.members[i] for i in range(len(la)) if fmask >> i & 1]
    wf = Family.from_masks(params.n, params.a, members)
    wg = dual_family(wf, params.b, params.t)
    assert _functional_value(functional, len(wf), len(wg)) == value
    return OracleResult(value, wf, wg, mode, nodes)


def _degenerate_result(
    params: InstanceParams, functional: Functional, mode: str
) -> OracleResult:
    """Optimum when t > min(a, b): no nonempty pair is cross-t-intersecting.

    Matches the generic tie-break: for the product every family scores 0 and
    the empty F (weight 0) wins; for the sum the choice is between F empty
    with the full b-layer and F the full a-layer with G empty.
    """
    n, a, b = params.n, params.a, params.b
    ca, cb = binomial(n, a), binomial(n, b)
    empty_f = Family(n, a, ())
    if functional == "product" or cb >= ca:
        wf = empty_f
    else:
        wf = full_layer(n, a)
    wg = dual_family(wf, b, params.t)
    value = _functional_value(functional, len(wf), len(wg))
    return OracleResult(value, wf, wg, mode, 1)


def oracle_exhaustive(
    params: InstanceParams, functional: Functional = "product"
) -> OracleResult:
    """Ground-truth sweep over all F subset-of C([n], a), G = dual(F)."""
    caps = get_caps()
    layer_size = binomial(params.n, params.a)
    if layer_size > caps.exhaustive_layer:
        raise SearchCapExceeded(
            f"exhaustive search needs C(n,a) <= {caps.exhaustive_layer}, "
            f"got C({params.n},{params.a}) = {layer_size}"
        )
    if params.t > min(params.a, params.b):
        return _degenerate_result(params, functional, "exhaustive")
    la, lb, compat = _layer_and_compat(params)
    # invert: per b-layer member, the index mask of compatible a-layer members
    ok_masks = [0] * len(lb)
    for fi, m in enumerate(compat):
        gi = 0
        while m:
            if m & 1:
                ok_masks[gi] |= 1 << fi
            m >>= 1
            gi += 1
    weights = [weight(x) for x in la.members]
    value, fmask, nodes = kernels.exhaustive_scan(
        len(la), ok_masks, weights, functional == "sum"
    )
    return _result_from_mask(
        params, functional, la, lb, fmask, value, "exhaustive", nodes
    )


def oracle_compressed(
    params: InstanceParams, functional: Functional = "product"
) -> OracleResult:
    """Optimum over left-compressed F only, via down-set DFS with pruning."""
    caps = get_caps()
    if params.n > caps.compressed_n:
        raise SearchCapExceeded(
            f"compressed search needs n <= {caps.compressed_n}, got n={params.n}"
        )
    if params.t > min(params.a, params.b):
        return _degenerate_result(params, functional, "compressed")
    la, lb, compat = _layer_and_compat(params)
    preds = []
    for j, x in enumerate(la.members):
        m = 0
        for k, y in enumerate(la.members):
            if k != j and dominance_leq(y, x):
                m |= 1 << k
        preds.append(m)
    weights = [weight(x) for x in la.members]
    value, fmask, nodes = kernels.ideal_scan(
        len(la), preds, compat, len(lb), weights, functional == "sum"
    )
    return _result_from_mask(
        params, functional, la, lb, fmask, value, "compressed", nodes
    )


def solve(
    params: InstanceParams,
    functional: Functional = "product",
    mode: Literal["exhaustive", "compressed"] = "exhaustive",
) -> OracleResult:
    if mode == "exhaustive":
        return oracle_exhaustive(params, functional)
    if mode == "compressed":
        return oracle_compressed(params, functional)
    raise ValueError(f"unknown mode {mode!r}")


def complement_transfer(params: InstanceParams) -> InstanceParams:
    """Complementing every set maps the instance to (n, n-a, n-b, n-a-b+t)
    with the same product optimum.  Requires n - a - b + t >= 1."""
    n, a, b, t = params.n, params.a, params.b, params.t
    if n - a - b + t < 1:
        raise ValueError(
            f"complement transfer needs n-a-b+t >= 1, got {n - a - b + t}"
        )
    return InstanceParams(n, n - a, n - b, n - a - b + t)
