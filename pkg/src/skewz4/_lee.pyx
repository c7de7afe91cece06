# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Lee-weight enumeration kernel.

Walks the Z4-span of binary-coefficient generators in binary reflected
Gray-code order, so consecutive words differ by adding or subtracting one
generator and the Lee weight is updated incrementally.
"""

import numpy as np

cdef int LEE[4]
LEE[0] = 0
LEE[1] = 1
LEE[2] = 2
LEE[3] = 1

NO_WEIGHT = 1 << 30


cdef inline int _ctz(unsigned long long t) nogil:
    cdef int j = 0
    while (t & 1) == 0:
        t >>= 1
        j += 1
    return j


def min_lee_weight_from(const unsigned char[:, ::1] gens, const unsigned char[::1] base):
    """Minimum nonzero Lee weight over ``base + sum(e_i * gens[i])``, e_i in {0, 1}.

    Returns ``NO_WEIGHT`` when every visited word is zero.
    """
    cdef Py_ssize_t k = gens.shape[0]
    cdef Py_ssize_t n = gens.shape[1]
    if base.shape[0] != n:
        raise ValueError("base length does not match generator width")
    if k >= 63:
        raise OverflowError("too many generators for a single enumeration")

    cdef unsigned char[::1] word = np.array(base, dtype=np.uint8, copy=True)
    cdef unsigned char[::1] state = np.zeros(max(k, 1), dtype=np.uint8)
    cdef Py_ssize_t c
    cdef int j, old, new, weight = 0, best = NO_WEIGHT
    cdef unsigned long long t, total = (<unsigned long long>1) << k

    with nogil:
        for c in range(n):
            word[c] &= 3
            weight += LEE[word[c]]
        if weight > 0:
            best = weight
        t = 1
        while t < total:
            j = _ctz(t)
            if state[j]:
                for c in range(n):
                    if gens[j, c]:
                        old = word[c]
                        new = (old + 4 - gens[j, c]) & 3
                        word[c] = new
                        weight += LEE[new] - LEE[old]
                state[j] = 0
            else:
                for c in range(n):
                    if gens[j, c]:
                        old = word[c]
                        new = (old + gens[j, c]) & 3
                        word[c] = new
                        weight += LEE[new] - LEE[old]
                state[j] = 1
            if 0 < weight < best:
                best = weight
            t += 1
    return best
