"""Kernel backend selection.

The compiled extension (`crossint.kernels._fast`, built from Cython) is used
when importable; otherwise the pure-Python reference implementation takes
over transparently.  Set CROSSINT_BACKEND=python to force the fallback, e.g.
for benchmarking or debugging.  Both backends are behaviorally identical and
the test suite asserts it.
"""

from __future__ import annotations

import importlib
import os
from typing import Sequence

from . import pure

_fast = None
if os.environ.get("CROSSINT_BACKEND", "").strip().lower() not in ("python", "pure"):
    try:
        _fast = importlib.import_module(__name__ + "._fast")
    except ImportError:
        _fast = None

BACKEND = "compiled" if _fast is not None else "python"


def get_backend(name: str):
    """Return a specific backend module ('python'/'compiled'), or None."""
    if name == "python":
        return pure
    if name == "compiled":
        return _fast
    raise ValueError(f"unknown backend {name!r}")


def exhaustive_scan(
    num_sets: int,
    ok_masks: Sequence[int],
    weights: Sequence[int],
    use_sum: bool,
) -> tuple[int, int, int]:
    if _fast is not None and num_sets <= _fast.EXHAUSTIVE_MAX_SETS:
        return _fast.exhaustive_scan(num_sets, ok_masks, weights, use_sum)
    return pure.exhaustive_scan(num_sets, ok_masks, weights, use_sum)


def ideal_scan(
    num_sets: int,
    preds: Sequence[int],
    compat: Sequence[int],
    num_partners: int,
    weights: Sequence[int],
    use_sum: bool,
) -> tuple[int, int, int]:
    if _fast is not None:
        return _fast.ideal_scan(num_sets, preds, compat, num_partners, weights, use_sum)
    return pure.ideal_scan(num_sets, preds, compat, num_partners, weights, use_sum)


def hirschorn_product_max(n: int, a: int, b: int, t: int) -> int:
    if _fast is not None and n <= _fast.HIRSCHORN_MAX_N:
        return _fast.hirschorn_product_max(n, a, b, t)
    return pure.hirschorn_product_max(n, a, b, t)
