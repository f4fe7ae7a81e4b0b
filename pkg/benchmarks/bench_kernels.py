#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs each kernel on a representative hot instance with both backends,
checks that the results agree exactly, and prints a timing table.

    python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from crossint.kernels import get_backend
from crossint.setfam import InstanceParams, dominance_leq, full_layer, weight


def _oracle_inputs(params: InstanceParams):
    la = full_layer(params.n, params.a)
    lb = full_layer(params.n, params.b)
    compat = []
    for x in la.members:
        m = 0
        for gi, y in enumerate(lb.members):
            if (x & y).bit_count() >= params.t:
                m |= 1 << gi
        compat.append(m)
    ok = [0] * len(lb)
    for fi, m in enumerate(compat):
        gi = 0
        while m:
            if m & 1:
                ok[gi] |= 1 << fi
            m >>= 1
            gi += 1
    preds = []
    for j, x in enumerate(la.members):
        pm = 0
        for k, y in enumerate(la.members):
            if k != j and dominance_leq(y, x):
                pm |= 1 << k
        preds.append(pm)
    wts = [weight(x) for x in la.members]
    return la, lb, ok, preds, compat, wts


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    pure = get_backend("python")
    fast = get_backend("compiled")
    if fast is None:
        print("compiled backend unavailable; nothing to compare")
        return 1

    tasks = []

    p = InstanceParams(6, 3, 3, 1)
    la, lb, ok, preds, compat, wts = _oracle_inputs(p)
    tasks.append((
        f"exhaustive_scan  (n,a,b,t)={tuple(vars(p).values())}  2^{len(la)} masks",
        lambda be: be.exhaustive_scan(len(la), ok, wts, False),
    ))

    p2 = InstanceParams(8, 2, 6, 1)
    la2, lb2, ok2, preds2, compat2, wts2 = _oracle_inputs(p2)
    tasks.append((
        f"ideal_scan       (n,a,b,t)={tuple(vars(p2).values())}  layer {len(la2)}",
        lambda be: be.ideal_scan(len(la2), preds2, compat2, len(lb2), wts2, False),
    ))

    grid = [(n, a, b, t)
            for n in (40, 60)
            for a in range(1, n, 7)
            for b in range(1, n, 7)
            for t in (1, 2)
            if a + b < n + t]
    tasks.append((
        f"hirschorn sweep  {len(grid)}-instance grid (n <= 60)",
        lambda be: [be.hirschorn_product_max(*q) for q in grid],
    ))

    print(f"{'kernel / instance':55s} {'python':>10s} {'compiled':>10s} {'speedup':>8s}")
    for label, run in tasks:
        r_pure = run(pure)
        r_fast = run(fast)
        assert r_pure == r_fast, f"backend mismatch on {label}"
        t_pure = _time(lambda: run(pure), args.repeat)
        t_fast = _time(lambda: run(fast), args.repeat)
        print(f"{label:55s} {t_pure:9.4f}s {t_fast:9.4f}s {t_pure / t_fast:7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
