"""Shared fixtures: the small-instance oracle cache used by several suites."""

from __future__ import annotations

import pytest

from crossint.oracle import oracle_compressed, oracle_exhaustive
from crossint.setfam import InstanceParams


def tiny_instances() -> list[InstanceParams]:
    """All (n, a, b, t) with n <= 6 and 1 <= t <= a <= b < n."""
    out = []
    for n in range(2, 7):
        for a in range(1, n):
            for b in range(a, n):
                for t in range(1, a + 1):
                    out.append(InstanceParams(n, a, b, t))
    return out


@pytest.fixture(scope="session")
def solved_tiny():
    """Exact optima for every tiny instance, all modes and functionals.

    Maps params -> {functional: (exhaustive OracleResult, compressed
    OracleResult)}; computed once per session.
    """
    cache = {}
    for params in tiny_instances():
        per = {}
        for functional in ("product", "sum"):
            per[functional] = (
                oracle_exhaustive(params, functional),
                oracle_compressed(params, functional),
            )
        cache[params] = per
    return cache
