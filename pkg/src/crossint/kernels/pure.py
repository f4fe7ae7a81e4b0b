"""Pure-Python reference kernels for the oracle searches and the conjectured
optimum sweep.

These are the semantics-defining implementations: the compiled extension in
`_fast.pyx` must reproduce them bit for bit (same optima, same witnesses,
same node counts).  `benchmarks/bench_kernels.py` compares the two.

Shared conventions
------------------
* Layer members are indexed 0..L-1 in ascending-bitmask order; an F-family
  is an L-bit index mask.
* Ties are broken by (value desc, total weight asc, member-lex asc), where
  member-lex compares the ascending index sequences like Python tuples
  (a strict prefix sorts first).
* Counts stay within int64 under the oracle caps (layer sizes <= C(24,12)),
  but Python ints make that a non-issue here.
"""

from __future__ import annotations

import sys
from array import array
from typing import Sequence

HIRSCHORN_MAX_N: int | None = None  # no limit for the pure sweep
EXHAUSTIVE_MAX_SETS = 30  # memory guard only; the oracle cap is far lower


def member_lex_less(m1: int, m2: int) -> bool:
    """True iff index mask m1 sorts before m2 in member-lex order."""
    if m1 == m2:
        return False
    low = (m1 ^ m2) & -(m1 ^ m2)
    if m1 & low:
        return m2 >> low.bit_length() != 0
    return m1 >> low.bit_length() == 0


def exhaustive_scan(
    num_sets: int,
    ok_masks: Sequence[int],
    weights: Sequence[int],
    use_sum: bool,
) -> tuple[int, int, int]:
    """Sweep every F-subset of the layer (all 2^num_sets index masks).

    ok_masks[g] is the index mask of layer members compatible with partner
    g; the partner count of F is #{g : F subset-of ok_masks[g]}, obtained
    for all F at once by a superset-sum transform.

    Returns (best value, best index mask, nodes = 2^num_sets).
    """
    if num_sets > EXHAUSTIVE_MAX_SETS:
        raise ValueError(f"exhaustive_scan: layer too large ({num_sets} sets)")
    total = 1 << num_sets
    cnt = array("i", bytes(4 * total))
    for m in ok_masks:
        cnt[m] += 1
    for b in range(num_sets):
        bit = 1 << b
        for m in range(total):
            if not m & bit:
                cnt[m] += cnt[m | bit]

    best_val = -1
    best_mask = 0
    best_w = -1  # computed lazily; -1 means "not yet needed"
    for m in range(total):
        dc = cnt[m]
        sz = m.bit_count()
        val = sz + dc if use_sum else sz * dc
        if val > best_val:
            best_val, best_mask, best_w = val, m, -1
        elif val == best_val:
            if best_w < 0:
                best_w = _mask_weight(best_mask, weights)
            w = _mask_weight(m, weights)
            if w < best_w or (w == best_w and member_lex_less(m, best_mask)):
                best_mask, best_w = m, w
    return best_val, best_mask, total


def _mask_weight(mask: int, weights: Sequence[int]) -> int:
    w = 0
    i = 0
    while mask:
        if mask & 1:
            w += weights[i]
        mask >>= 1
        i += 1
    return w


def ideal_scan(
    num_sets: int,
    preds: Sequence[int],
    compat: Sequence[int],
    num_partners: int,
    weights: Sequence[int],
    use_sum: bool,
) -> tuple[int, int, int]:
    """DFS over the down-sets (order ideals) of the dominance order.

    preds[j] is the index mask of all strict dominance predecessors of
    member j; an ideal may take j exactly when preds[j] is contained in it.
    Members are added in increasing index order, so each ideal is visited
    once.  compat[j] is a bitmask over the partner layer; the running dual
    is intersected incrementally.  Subtrees are pruned only when their value
    upper bound is strictly below the incumbent, which keeps every optimum
    (and therefore the deterministic tie-break) reachable.

    Returns (best value, best index mask, visited node count).
    """
    sys.setrecursionlimit(max(sys.getrecursionlimit(), num_sets + 200))
    full_dual = (1 << num_partners) - 1
    state = [-1, 0, 0, 0]  # best_val, best_mask, best_w, nodes

    def dfs(last: int, ideal: int, dual: int, size: int, dcnt: int, wsum: int) -> None:
        state[3] += 1
        val = size + dcnt if use_sum else size * dcnt
        if val > state[0] or (
            val == state[0]
            and (
                wsum < state[2]
                or (wsum == state[2] and member_lex_less(ideal, state[1]))
            )
        ):
            state[0], state[1], state[2] = val, ideal, wsum
        for j in range(last + 1, num_sets):
            if preds[j] & ~ideal:
                continue
            nd = dual & compat[j]
            c = nd.bit_count()
            reach = size + 1 + (num_sets - 1 - j)
            ub = reach + c if use_sum else reach * c
            if ub < state[0]:
                continue
            dfs(j, ideal | (1 << j), nd, size + 1, c, wsum + weights[j])

    dfs(-1, 0, full_dual, 0, num_partners, 0)
    return state[0], state[1], state[3]


def hirschorn_product_max(n: int, a: int, b: int, t: int) -> int:
    """Exact max over u+v = s+t of |{|X n [s]| >= u}| * |{|Y n [s]| >= v}|.

    Value-only fast path; the full sweep with argmax bookkeeping lives in
    crossint.hirschorn and is cross-checked against this.
    """
    from math import comb

    best = -1
    for s in range(1, n + 1):
        ta = _suffix_threshold_table(n, a, s, comb)
        tb = _suffix_threshold_table(n, b, s, comb)
        for u in range(1, n + 1):
            v = s + t - u
            if not 1 <= v <= n:
                continue
            fa = ta[u] if u < len(ta) else 0
            gb = tb[v] if v < len(tb) else 0
            val = fa * gb
            if val > best:
                best = val
    return best


def _suffix_threshold_table(n: int, m: int, s: int, comb) -> list[int]:
    """T[u] = #{X in C([n], m) : |X n [s]| >= u} for u = 0..min(s,m)+1."""
    top = min(s, m)
    terms = [comb(s, i) * comb(n - s, m - i) for i in range(top + 1)]
    table = [0] * (top + 2)
    acc = 0
    for i in range(top, -1, -1):
        acc += terms[i]
        table[i] = acc
    return table
