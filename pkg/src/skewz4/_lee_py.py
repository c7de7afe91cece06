"""Python/numpy fallback for the compiled kernel in ``_lee.pyx``.

Same contract as the extension; the span is materialised block by block
instead of walked in Gray-code order.
"""

import numpy as np

NO_WEIGHT = 1 << 30

_LEE = np.array([0, 1, 2, 1], dtype=np.int64)
_BLOCK_BITS = 16


def _bit_block(start: int, count: int, k: int) -> np.ndarray:
    idx = np.arange(start, start + count, dtype=np.int64)
    return ((idx[:, None] >> np.arange(k, dtype=np.int64)) & 1).astype(np.int64)


def min_lee_weight_from(gens, base) -> int:
    gens = np.asarray(gens, dtype=np.int64)
    base = np.asarray(base, dtype=np.int64) & 3
    k, n = gens.shape
    if base.shape != (n,):
        raise ValueError("base length does not match generator width")
    if k >= 63:
        raise OverflowError("too many generators for a single enumeration")
    total = 1 << k
    block = 1 << min(k, _BLOCK_BITS)
    best = NO_WEIGHT
    for start in range(0, total, block):
        bits = _bit_block(start, block, k)
        words = (bits @ gens + base) & 3
        weights = _LEE[words].sum(axis=1)
        weights = weights[weights > 0]
        if weights.size:
            best = min(best, int(weights.min()))
    return best
