"""Randomized and exhaustive property verification.

Two suites, both reused by the CLI `verify` subcommand and the test suite:

* compression: sample cross-t-intersecting pairs, drive them to the
  left-compressed fixpoint, and check after every applied step that both
  family sizes and the cross-t property are preserved, that the loop
  terminates, and that at the fixpoint every member pair (F, G) admits a
  prefix [s] with |F n [s]| + |G n [s]| >= s + t (equivalently, lands inside
  some prefix-threshold product with u + v = s + t).
* boundary equivalence: exhaustively compare the prefix condition with its
  order-statistic reformulation over all (F, G) in C([n],a) x C([n],b),
  which is stated for n > a + b - t.

Everything is driven by an explicit random.Random(seed); reports are plain
dicts of counts, bit-identical across reruns with the same config.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .setfam import (
    Family,
    InstanceParams,
    compress_pair_trace,
    condition_a,
    condition_b,
    full_layer,
    is_cross_t_intersecting,
)

__all__ = [
    "random_cross_t_pair",
    "random_nondegenerate_instance",
    "hirschorn_membership_triple",
    "compression_trial",
    "run_compression_suite",
    "lemma6_scan",
    "run_verify",
    "VerifyFailure",
]


class VerifyFailure(AssertionError):
    """A mathematical property the package asserts was violated."""


def random_nondegenerate_instance(rng: random.Random, n_max: int = 10) -> InstanceParams:
    """Random (n, a, b, t) with 1 <= t <= min(a, b) <= max(a, b) <= n-ish."""
    n = rng.randint(2, n_max)
    a = rng.randint(1, n - 1)
    b = rng.randint(1, n - 1)
    t = rng.randint(1, min(a, b))
    return InstanceParams(n, a, b, t)


def random_cross_t_pair(
    rng: random.Random, params: InstanceParams, max_family: int = 8
) -> tuple[Family, Family]:
    """A random cross-t-intersecting pair, built constructively.

    Grows F by random members while its dual stays nonempty, then samples a
    nonempty G from the dual; requires t <= min(a, b) so a single-member F
    always has a nonempty dual.
    """
    n, a, b, t = params.n, params.a, params.b, params.t
    if t > min(a, b):
        raise ValueError("random pairs need t <= min(a, b)")
    la = list(full_layer(n, a).members)
    lb = list(full_layer(n, b).members)
    f_members = {rng.choice(la)}
    dual = [g for g in lb if all((g & x).bit_count() >= t for x in f_members)]
    for _ in range(rng.randint(0, max_family - 1)):
        cand = rng.choice(la)
        if cand in f_members:
            continue
        nd = [g for g in dual if (g & cand).bit_count() >= t]
        if nd:
            f_members.add(cand)
            dual = nd
    g_size = rng.randint(1, min(len(dual), max_family))
    g_members = rng.sample(dual, g_size)
    return (
        Family.from_masks(n, a, f_members),
        Family.from_masks(n, b, g_members),
    )


def hirschorn_membership_triple(
    f: int, g: int, t: int, n: int
) -> tuple[int, int, int] | None:
    """A witness (s, u, v) with u+v = s+t, |F n [s]| >= u, |G n [s]| >= v.

    Derived from the first prefix satisfying the boundary condition; None
    when no prefix works (the pair lies outside every threshold product).
    """
    cf = cg = 0
    for s in range(1, n + 1):
        bit = 1 << (s - 1)
        if f & bit:
            cf += 1
        if g & bit:
            cg += 1
        if cf + cg >= s + t:
            u = cf
            v = s + t - u
            return (s, u, v)
    return None


@dataclass
class CompressionTrialResult:
    steps: int
    size_preserved: bool
    cross_t_preserved: bool
    weight_decreased: bool
    fixpoint_condition_a: bool
    fixpoint_membership: bool

    @property
    def ok(self) -> bool:
        return (
            self.size_preserved
            and self.cross_t_preserved
            and self.weight_decreased
            and self.fixpoint_condition_a
            and self.fixpoint_membership
        )


def compression_trial(f: Family, g: Family, t: int) -> CompressionTrialResult:
    """Compress one pair to the fixpoint, checking invariants at every step."""
    from .setfam import family_weight

    n = f.n
    size_ok = cross_ok = weight_ok = True
    prev_weight = family_weight(f)
    steps = 0
    cur_f, cur_g = f, g
    for _, _, nf, ng in compress_pair_trace(f, g):
        steps += 1
        if len(nf) != len(f) or len(ng) != len(g):
            size_ok = False
        if not is_cross_t_intersecting(nf, ng, t):
            cross_ok = False
        w = family_weight(nf)
        if w >= prev_weight:
            weight_ok = False
        prev_weight = w
        cur_f, cur_g = nf, ng
    cond_ok = all(
        condition_a(x, y, t, n) for x in cur_f.members for y in cur_g.members
    )
    member_ok = all(
        hirschorn_membership_triple(x, y, t, n) is not None
        for x in cur_f.members
        for y in cur_g.members
    )
    return CompressionTrialResult(
        steps=steps,
        size_preserved=size_ok,
        cross_t_preserved=cross_ok,
        weight_decreased=weight_ok,
        fixpoint_condition_a=cond_ok,
        fixpoint_membership=member_ok,
    )


def run_compression_suite(
    seed: int,
    trials: int,
    params: InstanceParams | None = None,
    n_max: int = 10,
) -> dict:
    """Seeded batch of compression trials; fixed params or random instances."""
    rng = random.Random(seed)
    failures = 0
    steps_total = 0
    check_counts = {
        "size_preserved": 0,
        "cross_t_preserved": 0,
        "weight_decreased": 0,
        "fixpoint_condition_a": 0,
        "fixpoint_membership": 0,
    }
    for _ in range(trials):
        p = params if params is not None else random_nondegenerate_instance(rng, n_max)
        f, g = random_cross_t_pair(rng, p)
        res = compression_trial(f, g, p.t)
        steps_total += res.steps
        for key in check_counts:
            if getattr(res, key):
                check_counts[key] += 1
        if not res.ok:
            failures += 1
    return {
        "trials": trials,
        "failures": failures,
        "steps_total": steps_total,
        "checks_passed": check_counts,
    }


def lemma6_scan(params: InstanceParams) -> dict:
    """Exhaustive prefix-vs-boundary equivalence over all member pairs.

    Applies when n > a + b - t.  Outside that regime the prefix condition
    holds for every pair via s = n (|F| + |G| = a + b >= n + t), which needs
    no scan; the report says so.
    """
    n, a, b, t = params.n, params.a, params.b, params.t
    if n <= a + b - t:
        return {
            "skipped": f"n <= a+b-t (every pair satisfies the prefix condition at s={n})",
            "pairs_checked": 0,
            "mismatches": 0,
        }
    la = full_layer(n, a).members
    lb = full_layer(n, b).members
    mismatches = 0
    checked = 0
    for x in la:
        for y in lb:
            checked += 1
            if condition_a(x, y, t, n) != condition_b(x, y, t, n):
                mismatches += 1
    return {"pairs_checked": checked, "mismatches": mismatches}


def run_verify(params: InstanceParams, trials: int, seed: int) -> dict:
    """The CLI verify payload: compression suite plus the boundary scan."""
    report: dict = {"params": vars(params).copy()}
    if trials > 0:
        report["compression"] = run_compression_suite(seed, trials, params)
    else:
        report["compression"] = {"trials": 0, "failures": 0, "steps_total": 0}
    report["lemma6"] = lemma6_scan(params)
    failed = report["compression"]["failures"] > 0 or (
        report["lemma6"].get("mismatches", 0) > 0
    )
    report["all_passed"] = not failed
    return report
