# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot kernels.

Same contracts as jacobsthal._fallback; all moduli must stay below 2^31 so
that every intermediate product fits in a signed 64-bit integer.
"""

import numpy as np


def qr_table(long long p):
    """int8 table of Legendre symbols: table[a] = (a/p) for 0 <= a < p."""
    arr = np.full(p, -1, dtype=np.int8)
    cdef signed char[::1] t = arr
    cdef long long k, half = p // 2
    t[0] = 0
    for k in range(1, half + 1):
        t[(k * k) % p] = 1
    return arr


def char_sum(coeffs, long long p, signed char[::1] table):
    """Sum of table[f(x)] over x in F_p, f given by coefficients (constant first)."""
    reduced = np.array([int(a) % p for a in coeffs], dtype=np.int64)
    cdef long long[::1] cv = reduced
    cdef Py_ssize_t d = cv.shape[0] - 1, k
    cdef long long x, acc, total = 0
    for x in range(p):
        acc = cv[d]
        for k in range(d - 1, -1, -1):
            acc = (acc * x + cv[k]) % p
        total += table[acc]
    return total


def char_sum_fp2(coeffs, long long p, long long r, signed char[::1] table):
    """Sum of the F_p^2 quadratic character of f(z) over all z = x0 + x1*t."""
    reduced = np.array([int(a) % p for a in coeffs], dtype=np.int64)
    cdef long long[::1] cv = reduced
    cdef Py_ssize_t d = cv.shape[0] - 1, k
    cdef long long x0, x1, d0, d1, nd0, nd1, nrm, total = 0
    for x1 in range(p):
        for x0 in range(p):
            d0 = cv[d]
            d1 = 0
            for k in range(d - 1, -1, -1):
                nd0 = ((d0 * x0) % p + ((d1 * x1) % p) * r % p + cv[k]) % p
                nd1 = ((d0 * x1) % p + (d1 * x0) % p) % p
                d0 = nd0
                d1 = nd1
            nrm = ((d0 * d0) % p - ((d1 * d1) % p) * r % p) % p
            if nrm < 0:
                nrm += p
            total += table[nrm]
    return total
