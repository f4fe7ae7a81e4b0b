"""Prefix-threshold counting against brute enumeration, and the conjectured
optimum sweep on instances with known values."""

from __future__ import annotations

from itertools import combinations

import pytest

from crossint.exactmath import binomial
from crossint.hirschorn import (
    HirschornPair,
    count_prefix_threshold,
    explicit_pair,
    hirschorn_optimum,
    hirschorn_product_value,
    pair_sizes,
)
from crossint.setfam import InstanceParams, full_layer, is_cross_t_intersecting


def test_count_prefix_threshold_examples():
    assert count_prefix_threshold(8, 2, 2, 1) == 13
    assert count_prefix_threshold(8, 6, 2, 2) == 15
    for n, m in ((7, 3), (9, 4)):
        for s in range(1, n + 1):
            assert count_prefix_threshold(n, m, s, 0) == binomial(n, m)
    assert count_prefix_threshold(8, 2, 4, 3) == 0  # u > min(a, s)


def test_count_prefix_threshold_validation():
    with pytest.raises(ValueError):
        count_prefix_threshold(5, 6, 1, 0)
    with pytest.raises(ValueError):
        count_prefix_threshold(5, 2, 0, 0)
    with pytest.raises(ValueError):
        count_prefix_threshold(5, 2, 1, -1)


def test_count_prefix_threshold_vs_enumeration_full():
    # every (n, m, s, u) with n <= 12: bucket the layer by |X n [s]| once,
    # then compare all suffix counts against the formula
    for n in range(1, 13):
        for m in range(0, n + 1):
            layer = [
                sum(1 << (e - 1) for e in c)
                for c in combinations(range(1, n + 1), m)
            ]
            for s in range(1, n + 1):
                smask = (1 << s) - 1
                buckets = [0] * (n + 2)
                for x in layer:
                    buckets[(x & smask).bit_count()] += 1
                suffix = 0
                expected = [0] * (n + 3)
                for u in range(n + 1, -1, -1):
                    suffix += buckets[u] if u <= n + 1 else 0
                    expected[u] = suffix
                for u in range(0, n + 2):
                    assert count_prefix_threshold(n, m, s, u) == expected[u], (
                        n, m, s, u,
                    )


def test_pair_sizes_examples():
    p = HirschornPair(InstanceParams(8, 2, 6, 1), s=1, u=1, v=1)
    assert pair_sizes(p) == (7, 21)
    p = HirschornPair(InstanceParams(6, 2, 2, 1), s=1, u=1, v=1)
    assert pair_sizes(p) == (5, 5)
    p = HirschornPair(InstanceParams(8, 2, 8, 1), s=4, u=3, v=2)
    # u > min(a, s) empties the F side
    assert pair_sizes(p)[0] == 0


def test_hirschorn_pair_validation():
    with pytest.raises(ValueError):
        HirschornPair(InstanceParams(6, 2, 2, 1), s=2, u=1, v=1)  # u+v != s+t
    with pytest.raises(ValueError):
        HirschornPair(InstanceParams(6, 2, 2, 1), s=0, u=1, v=0)


def test_explicit_pair_matches_counts_and_cross_t():
    # counting formula vs materialized families, plus the cross-t certificate
    for n in range(2, 9):
        for a in range(1, n):
            for b in range(1, n):
                for t in range(1, min(a, b) + 1):
                    params = InstanceParams(n, a, b, t)
                    for s in range(1, n + 1):
                        for u in range(1, n + 1):
                            v = s + t - u
                            if not 1 <= v <= n:
                                continue
                            pair = HirschornPair(params, s, u, v)
                            f, g = explicit_pair(pair)
                            fs, gs = pair_sizes(pair)
                            assert (len(f), len(g)) == (fs, gs)
                            assert is_cross_t_intersecting(f, g, t)


def test_optimum_known_instances():
    opt = hirschorn_optimum(InstanceParams(6, 2, 2, 1))
    assert opt.value == 25 and opt.argmax == ((1, 1, 1),)
    opt = hirschorn_optimum(InstanceParams(5, 2, 2, 3))
    assert opt.value == 0
    opt = hirschorn_optimum(InstanceParams(8, 2, 6, 1))
    assert opt.value == 195 and opt.argmax == ((2, 1, 2), (6, 2, 5))


def test_optimum_large_n_matches_closed_form_regime():
    # far from the thresholds the optimum is the double star C(n-1,a-1)C(n-1,b-1)
    opt = hirschorn_optimum(InstanceParams(30, 3, 4, 1))
    assert opt.value == binomial(29, 2) * binomial(29, 3)
    assert (1, 1, 1) in opt.argmax


def test_optimum_product_symmetry_in_a_b():
    for n, a, b, t in [(7, 2, 4, 1), (8, 3, 5, 2), (9, 4, 4, 3), (10, 2, 7, 2)]:
        x = hirschorn_optimum(InstanceParams(n, a, b, t))
        y = hirschorn_optimum(InstanceParams(n, b, a, t))
        assert x.value == y.value
        assert sorted((s, v, u) for s, u, v in x.argmax) == sorted(y.argmax)


def test_sum_functional():
    opt = hirschorn_optimum(InstanceParams(4, 2, 2, 1), "sum")
    assert opt.value == 6
    # one-sided (degenerate) triples are evaluated, not skipped
    assert (4, 4, 1) in opt.argmax
    with pytest.raises(ValueError):
        hirschorn_optimum(InstanceParams(4, 2, 2, 1), "prod")  # must be spelled out


def test_value_fast_path_matches_full_sweep():
    import random

    rng = random.Random(99)
    for _ in range(200):
        n = rng.randint(2, 40)
        params = InstanceParams(
            n, rng.randint(1, n), rng.randint(1, n), rng.randint(1, n)
        )
        assert hirschorn_product_value(params) == hirschorn_optimum(params).value
    # above the compiled kernel's range the pure sweep takes over
    big = InstanceParams(70, 30, 35, 3)
    assert hirschorn_product_value(big) == hirschorn_optimum(big).value


def test_full_layer_triples_cover_argmax(solved_tiny):
    # the conjectured optimum never exceeds the true optimum
    for params, per in solved_tiny.items():
        for functional in ("product", "sum"):
            nhat = hirschorn_optimum(params, functional).value
            exact = per[functional][0].value
            assert nhat <= exact, (params, functional)
