"""Vectorized numpy implementations of the hot kernels.

Selected by jacobsthal.kernels when the compiled extension is unavailable
(or disabled via JACOBSTHAL_PURE=1).  All arithmetic stays below 2^63:
operands are reduced mod p < 2^31 before every product, so int64 never
overflows.
"""

from __future__ import annotations

import numpy as np

_CHUNK = 1 << 18


def qr_table(p: int) -> np.ndarray:
    """int8 table of Legendre symbols: table[a] = (a/p) for 0 <= a < p."""
    table = np.full(p, -1, dtype=np.int8)
    table[0] = 0
    half = p // 2
    for lo in range(1, half + 1, _CHUNK):
        k = np.arange(lo, min(lo + _CHUNK - 1, half) + 1, dtype=np.int64)
        table[(k * k) % p] = 1
    return table


def char_sum(coeffs, p: int, table) -> int:
    """Sum of table[f(x)] over x in F_p, f given by coefficients (constant first)."""
    cs = [c % p for c in coeffs]
    lead = cs[-1]
    total = 0
    for lo in range(0, p, _CHUNK):
        x = np.arange(lo, min(lo + _CHUNK, p), dtype=np.int64)
        acc = np.full(x.shape, lead, dtype=np.int64)
        for c in reversed(cs[:-1]):
            acc *= x
            acc += c
            acc %= p
        total += int(table[acc].sum(dtype=np.int64))
    return total


def char_sum_fp2(coeffs, p: int, r: int, table) -> int:
    """Sum of the F_p^2 quadratic character of f(z) over all z in F_p^2.

    z = x0 + x1*t with t^2 = r runs over all p^2 coordinate pairs; the
    character of w = d0 + d1*t is the Legendre symbol of its norm
    d0^2 - r*d1^2, looked up in `table`.
    """
    cs = [c % p for c in coeffs]
    lead = cs[-1]
    q = p * p
    total = 0
    for lo in range(0, q, _CHUNK):
        idx = np.arange(lo, min(lo + _CHUNK, q), dtype=np.int64)
        x0 = idx % p
        x1 = idx // p
        d0 = np.full(idx.shape, lead, dtype=np.int64)
        d1 = np.zeros(idx.shape, dtype=np.int64)
        for c in reversed(cs[:-1]):
            t0 = (d0 * x0) % p
            t0 += (d1 * x1) % p * r % p
            t0 += c
            nd1 = (d0 * x1) % p
            nd1 += (d1 * x0) % p
            d0 = t0 % p
            d1 = nd1 % p
        nrm = (d0 * d0) % p
        nrm -= (d1 * d1) % p * r % p
        nrm %= p
        total += int(table[nrm].sum(dtype=np.int64))
    return total
