# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot search loops.

Mirrors crossint.kernels.pure exactly (values, witnesses, node counts);
see that module for the semantics.  Layer index masks are machine words
here: the exhaustive sweep caps at 26 index bits, the ideal DFS uses
multi-word bitsets, and the conjectured-optimum sweep uses unsigned
128-bit products (hence the n <= 64 limit announced via HIRSCHORN_MAX_N).
"""

from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcpy, memset

cdef extern from *:
    """
    typedef unsigned __int128 cint_u128;
    #define popcnt64(x) __builtin_popcountll(x)
    #define ctz64(x) __builtin_ctzll(x)
    """
    ctypedef unsigned long long cint_u128
    int popcnt64(unsigned long long x) nogil
    int ctz64(unsigned long long x) nogil

ctypedef unsigned long long u64
ctypedef long long i64

HIRSCHORN_MAX_N = 64
EXHAUSTIVE_MAX_SETS = 26


cdef inline bint _lex_less_u64(u64 m1, u64 m2) nogil:
    # member-lex order: ascending index sequences, strict prefix first
    cdef u64 d = m1 ^ m2
    cdef int p
    if d == 0:
        return False
    p = ctz64(d)
    if m1 & ((<u64>1) << p):
        return (m2 >> p >> 1) != 0
    return (m1 >> p >> 1) == 0


def exhaustive_scan(int num_sets, ok_masks, weights, bint use_sum):
    """See kernels.pure.exhaustive_scan."""
    if num_sets > EXHAUSTIVE_MAX_SETS:
        raise ValueError(f"exhaustive_scan: layer too large ({num_sets} sets)")
    cdef Py_ssize_t total = (<Py_ssize_t>1) << num_sets
    cdef int* cnt = <int*>calloc(total, sizeof(int))
    if cnt == NULL:
        raise MemoryError()
    cdef i64* wts = <i64*>malloc(num_sets * sizeof(i64) if num_sets else sizeof(i64))
    if wts == NULL:
        free(cnt)
        raise MemoryError()
    cdef Py_ssize_t i, bit
    cdef int bpos, j
    cdef i64 best_val = -1, best_w = -1, val, w
    cdef u64 best_mask = 0, m
    cdef int sz, dc
    try:
        for j in range(num_sets):
            wts[j] = weights[j]
        for obj in ok_masks:
            cnt[<Py_ssize_t>obj] += 1
        for bpos in range(num_sets):
            bit = (<Py_ssize_t>1) << bpos
            for i in range(total):
                if not (i & bit):
                    cnt[i] += cnt[i | bit]
        for i in range(total):
            dc = cnt[i]
            m = <u64>i
            sz = popcnt64(m)
            val = (sz + dc) if use_sum else (<i64>sz * dc)
            if val > best_val:
                best_val = val
                best_mask = m
                best_w = -1
            elif val == best_val:
                if best_w < 0:
                    best_w = _mask_weight(best_mask, wts)
                w = _mask_weight(m, wts)
                if w < best_w or (w == best_w and _lex_less_u64(m, best_mask)):
                    best_mask = m
                    best_w = w
    finally:
        free(cnt)
        free(wts)
    return int(best_val), int(best_mask), int(total)


cdef i64 _mask_weight(u64 mask, i64* wts) nogil:
    cdef i64 w = 0
    while mask:
        w += wts[ctz64(mask)]
        mask &= mask - 1
    return w


# ---------------------------------------------------------------------------
# Ideal (down-set) DFS over the dominance order, multi-word bitsets.
# ---------------------------------------------------------------------------

ctypedef struct IdealCtx:
    int num_sets
    int wa              # words per layer-index bitset
    int wb              # words per partner bitset
    u64* preds          # num_sets * wa
    u64* compat         # num_sets * wb
    i64* weights
    bint use_sum
    u64* ideal          # wa, mutated in place along the DFS path
    u64* dual           # (num_sets + 1) * wb, one row per depth
    u64* best_mask      # wa
    i64 best_val
    i64 best_w
    i64 nodes


cdef bint _has_bits_above(u64* m, int nwords, int k, int p) nogil:
    if (m[k] >> p >> 1) != 0:
        return True
    cdef int kk
    for kk in range(k + 1, nwords):
        if m[kk]:
            return True
    return False


cdef bint _lex_less_words(u64* m1, u64* m2, int nwords) nogil:
    cdef int k, p
    cdef u64 d
    for k in range(nwords):
        d = m1[k] ^ m2[k]
        if d:
            p = ctz64(d)
            if m1[k] & ((<u64>1) << p):
                return _has_bits_above(m2, nwords, k, p)
            return not _has_bits_above(m1, nwords, k, p)
    return False


cdef void _ideal_dfs(IdealCtx* c, int last, int depth, int size,
                     i64 dcnt, i64 wsum) nogil:
    c.nodes += 1
    cdef i64 val = (size + dcnt) if c.use_sum else (<i64>size * dcnt)
    cdef bint take = False
    if val > c.best_val:
        take = True
    elif val == c.best_val:
        if wsum < c.best_w:
            take = True
        elif wsum == c.best_w and _lex_less_words(c.ideal, c.best_mask, c.wa):
            take = True
    if take:
        c.best_val = val
        c.best_w = wsum
        memcpy(c.best_mask, c.ideal, c.wa * sizeof(u64))

    cdef int j, k
    cdef bint feasible
    cdef u64* p
    cdef u64* cm
    cdef u64* dual_cur = c.dual + depth * c.wb
    cdef u64* dual_next = c.dual + (depth + 1) * c.wb
    cdef i64 cnt2, reach, ub
    for j in range(last + 1, c.num_sets):
        p = c.preds + j * c.wa
        feasible = True
        for k in range(c.wa):
            if p[k] & ~c.ideal[k]:
                feasible = False
                break
        if not feasible:
            continue
        cm = c.compat + j * c.wb
        cnt2 = 0
        for k in range(c.wb):
            dual_next[k] = dual_cur[k] & cm[k]
            cnt2 += popcnt64(dual_next[k])
        reach = size + 1 + (c.num_sets - 1 - j)
        ub = (reach + cnt2) if c.use_sum else (reach * cnt2)
        if ub < c.best_val:
            continue
        c.ideal[j >> 6] |= (<u64>1) << (j & 63)
        _ideal_dfs(c, j, depth + 1, size + 1, cnt2, wsum + c.weights[j])
        c.ideal[j >> 6] &= ~((<u64>1) << (j & 63))


cdef u64* _masks_to_words(masks, int count, int nwords) except NULL:
    cdef u64* buf = <u64*>calloc(max(count * nwords, 1), sizeof(u64))
    if buf == NULL:
        raise MemoryError()
    cdef int i, k
    for i in range(count):
        v = masks[i]
        k = 0
        while v:
            buf[i * nwords + k] = v & 0xFFFFFFFFFFFFFFFF
            v >>= 64
            k += 1
    return buf


cdef object _words_to_int(u64* words, int nwords):
    out = 0
    cdef int k
    for k in range(nwords - 1, -1, -1):
        out = (out << 64) | int(words[k])
    return out


def ideal_scan(int num_sets, preds, compat, int num_partners, weights,
               bint use_sum):
    """See kernels.pure.ideal_scan."""
    cdef int wa = (num_sets + 63) >> 6 if num_sets else 1
    cdef int wb = (num_partners + 63) >> 6 if num_partners else 1
    cdef IdealCtx c
    memset(&c, 0, sizeof(IdealCtx))
    c.num_sets = num_sets
    c.wa = wa
    c.wb = wb
    c.use_sum = use_sum
    c.best_val = -1
    c.best_w = 0
    c.nodes = 0
    cdef int j, k
    try:
        c.preds = _masks_to_words(preds, num_sets, wa)
        c.compat = _masks_to_words(compat, num_sets, wb)
        c.weights = <i64*>malloc(max(num_sets, 1) * sizeof(i64))
        c.ideal = <u64*>calloc(wa, sizeof(u64))
        c.dual = <u64*>calloc((num_sets + 1) * wb, sizeof(u64))
        c.best_mask = <u64*>calloc(wa, sizeof(u64))
        if (c.weights == NULL or c.ideal == NULL or c.dual == NULL
                or c.best_mask == NULL):
            raise MemoryError()
        for j in range(num_sets):
            c.weights[j] = weights[j]
        # depth-0 dual = full partner layer
        for k in range(num_partners):
            c.dual[k >> 6] |= (<u64>1) << (k & 63)
        _ideal_dfs(&c, -1, 0, 0, num_partners, 0)
        return int(c.best_val), _words_to_int(c.best_mask, wa), int(c.nodes)
    finally:
        free(c.preds)
        free(c.compat)
        free(c.weights)
        free(c.ideal)
        free(c.dual)
        free(c.best_mask)


# ---------------------------------------------------------------------------
# Conjectured-optimum sweep (product functional), exact in unsigned 128-bit.
# ---------------------------------------------------------------------------

def hirschorn_product_max(int n, int a, int b, int t):
    """See kernels.pure.hirschorn_product_max.  Requires n <= 64 so that
    suffix counts fit u64 (max C(64,32) < 2^61) and products fit u128."""
    if n > 64:
        raise ValueError(f"hirschorn_product_max (compiled): n <= 64, got {n}")
    cdef int dim = n + 1
    cdef u64* binom = <u64*>calloc(dim * dim, sizeof(u64))
    cdef u64* ta = <u64*>calloc(dim + 1, sizeof(u64))
    cdef u64* tb = <u64*>calloc(dim + 1, sizeof(u64))
    if binom == NULL or ta == NULL or tb == NULL:
        free(binom); free(ta); free(tb)
        raise MemoryError()
    cdef int i, j, s, u, v
    cdef cint_u128 best = 0, val
    cdef bint found = False
    cdef u64 fa, gb
    try:
        for i in range(dim):
            binom[i * dim] = 1
            for j in range(1, i + 1):
                binom[i * dim + j] = (binom[(i - 1) * dim + j - 1]
                                      + (binom[(i - 1) * dim + j] if j <= i - 1 else 0))
        for s in range(1, n + 1):
            _suffix_table(binom, dim, n, a, s, ta)
            _suffix_table(binom, dim, n, b, s, tb)
            for u in range(1, n + 1):
                v = s + t - u
                if v < 1 or v > n:
                    continue
                fa = ta[u] if u <= n else 0
                gb = tb[v] if v <= n else 0
                val = (<cint_u128>fa) * gb
                if not found or val > best:
                    best = val
                    found = True
        hi = int(<u64>(best >> 64))
        lo = int(<u64>best)
        return (hi << 64) | lo
    finally:
        free(binom)
        free(ta)
        free(tb)


cdef void _suffix_table(u64* binom, int dim, int n, int m, int s, u64* out) nogil:
    # out[u] = sum_{i >= u} C(s,i) * C(n-s, m-i); zero beyond min(s, m)
    cdef int top = s if s < m else m
    cdef int i
    cdef u64 acc = 0
    for i in range(n + 2):
        out[i] = 0
    for i in range(top, -1, -1):
        if m - i <= n - s:
            acc += binom[s * dim + i] * binom[(n - s) * dim + (m - i)]
        out[i] = acc
