"""Backend selection for the minimum-Lee-weight kernel.

The compiled extension ``skewz4._lee`` is used when it imports; otherwise
the numpy implementation in ``skewz4._lee_py`` takes over. Set
``SKEWZ4_PURE_PYTHON=1`` to force the fallback.

Work is split by fixing the top generator bits: each prefix becomes an
independent chunk whose base word is the sum of the chosen generators.
The result is a minimum over chunks, so it does not depend on how many
workers run them.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Optional, Sequence, TypeVar

import numpy as np

from . import _lee_py

T = TypeVar("T")
U = TypeVar("U")

BACKENDS: dict[str, Callable] = {"python": _lee_py.min_lee_weight_from}

try:
    from . import _lee as _lee_ext  # type: ignore[attr-defined]
except ImportError:  # extension not built
    _lee_ext = None
else:
    BACKENDS["cython"] = _lee_ext.min_lee_weight_from

NO_WEIGHT = _lee_py.NO_WEIGHT

if os.environ.get("SKEWZ4_PURE_PYTHON", "") not in ("", "0") or _lee_ext is None:
    BACKEND = "python"
else:
    BACKEND = "cython"


def worker_count(workers: Optional[int] = None) -> int:
    """Explicit argument, else ``SKEWZ4_THREADS``, else the CPU count."""
    if workers is not None:
        return max(1, int(workers))
    env = os.environ.get("SKEWZ4_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def ordered_map(fn: Callable[[T], U], items: Iterable[T], workers: Optional[int] = None) -> list[U]:
    """``list(map(fn, items))``, possibly threaded; output keeps input order."""
    items = list(items)
    w = worker_count(workers)
    if w == 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=w) as pool:
        return list(pool.map(fn, items))


def min_lee_weight(
    gens: np.ndarray,
    workers: Optional[int] = None,
    backend: Optional[str] = None,
    prefix_bits: Optional[int] = None,
) -> int:
    """Minimum nonzero Lee weight over all 0/1 combinations of ``gens``.

    ``gens`` is a (k, n) array over Z4. Returns ``NO_WEIGHT`` if the span
    is {0}.
    """
    kernel = BACKENDS[backend or BACKEND]
    gens = np.ascontiguousarray(np.asarray(gens, dtype=np.uint8) & 3)
    k, n = gens.shape
    w = worker_count(workers)
    if prefix_bits is None:
        prefix_bits = 0
        while (1 << prefix_bits) < 4 * w and prefix_bits < k - 8:
            prefix_bits += 1
    prefix_bits = max(0, min(prefix_bits, k))
    low = np.ascontiguousarray(gens[: k - prefix_bits])
    high = gens[k - prefix_bits :].astype(np.int64)

    def chunk(prefix: int) -> int:
        base = np.zeros(n, dtype=np.int64)
        for i in range(prefix_bits):
            if (prefix >> i) & 1:
                base += high[i]
        return int(kernel(low, np.ascontiguousarray(base & 3, dtype=np.uint8)))

    results: Sequence[int] = ordered_map(chunk, range(1 << prefix_bits), w)
    return min(results)
