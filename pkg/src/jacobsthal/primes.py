"""Prime enumeration over 64-bit ranges via a segmented sieve."""

from __future__ import annotations

from math import isqrt
from typing import Iterator

SEGMENT_SIZE = 1 << 16


def sieve_upto(n: int) -> list[int]:
    """All primes <= n by a plain sieve of Eratosthenes."""
    if n < 2:
        return []
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    for i in range(2, isqrt(n) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i in range(2, n + 1) if flags[i]]


def primes_in_range(lo: int, hi: int, segment_size: int = SEGMENT_SIZE) -> Iterator[int]:
    """Yield every prime p with lo <= p <= hi, in increasing order.

    Both bounds are inclusive.  Memory stays O(sqrt(hi) + segment_size)
    regardless of the range width.
    """
    if hi < lo or hi < 2:
        return
    lo = max(lo, 2)
    base = sieve_upto(isqrt(hi))
    for p in base:
        if p > hi:
            return
        if p >= lo:
            yield p
    start = max(lo, (isqrt(hi) + 1))
    while start <= hi:
        end = min(start + segment_size - 1, hi)
        flags = bytearray([1]) * (end - start + 1)
        for p in base:
            first = max(p * p, (start + p - 1) // p * p)
            if first > end:
                continue
            flags[first - start :: p] = bytearray(len(range(first, end + 1, p)))
        for i, ok in enumerate(flags):
            if ok:
                yield start + i
        start = end + 1
