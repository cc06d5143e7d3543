"""Exact 64-bit modular arithmetic: primality, quadratic symbols, square roots.

Everything here is deterministic.  Primality uses Miller-Rabin with a fixed
witness set that is proven complete below 3.3e24, which covers the full
unsigned 64-bit range with room to spare.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotASquare, NotPrime

MAX_PRIME = 2**64 - 1

# Complete deterministic witness set for n < 3,317,044,064,679,887,385,961,981
# (Sorenson-Webster), far beyond 2^64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for all n < 2**64."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True, order=True)
class OddPrime:
    """A validated odd prime in the unsigned 64-bit range."""

    value: int

    def __post_init__(self) -> None:
        if not (3 <= self.value <= MAX_PRIME):
            raise NotPrime(f"{self.value} is not an odd prime in [3, 2^64)")
        if not is_prime(self.value):
            raise NotPrime(f"{self.value} is not prime")

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def as_prime(p: int | OddPrime) -> int:
    """Coerce to a validated odd prime, returned as a plain int."""
    if isinstance(p, OddPrime):
        return p.value
    return OddPrime(p).value


def jacobi_symbol(a: int, m: int) -> int:
    """Jacobi symbol (a/m) for odd m >= 1.

    Multiplicative in both arguments; equals the Legendre symbol when m is an
    odd prime, and the empty product +1 when m == 1.
    """
    if m <= 0 or m % 2 == 0:
        raise ValueError(f"Jacobi symbol needs odd m >= 1, got {m}")
    a %= m
    result = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                result = -result
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a %= m
    return result if m == 1 else 0


def legendre_symbol(a: int, p: int | OddPrime) -> int:
    """Legendre symbol (a/p): 0 if p | a, +1 for nonzero squares, -1 else."""
    p = int(p)
    return jacobi_symbol(a % p, p)


def sqrt_mod(a: int, p: int | OddPrime) -> int:
    """Square root of a mod p (Tonelli-Shanks), canonical smaller root.

    Returns the s in {s, p-s} with the smaller value, and 0 for a == 0.
    Raises NotASquare when a is a quadratic nonresidue.
    """
    p = int(p)
    a %= p
    if a == 0:
        return 0
    if legendre_symbol(a, p) != 1:
        raise NotASquare(f"{a} is not a square mod {p}")
    if p % 4 == 3:
        s = pow(a, (p + 1) // 4, p)
        return min(s, p - s)
    # p == 1 mod 4: full Tonelli-Shanks.
    q = p - 1
    e = 0
    while q % 2 == 0:
        q //= 2
        e += 1
    z = least_nonresidue(p)
    g = pow(z, q, p)
    x = pow(a, (q + 1) // 2, p)
    b = pow(a, q, p)
    r = e
    while b != 1:
        m = 0
        t = b
        while t != 1:
            t = t * t % p
            m += 1
        gs = pow(g, 1 << (r - m - 1), p)
        g = gs * gs % p
        x = x * gs % p
        b = b * g % p
        r = m
    return min(x, p - x)


def least_nonresidue(p: int | OddPrime) -> int:
    """Smallest n >= 2 with (n/p) == -1."""
    p = int(p)
    n = 2
    while legendre_symbol(n, p) != -1:
        n += 1
    return n


def least_noncube(p: int | OddPrime) -> int:
    """Smallest n >= 2 with x^3 == n mod p unsolvable (needs p == 1 mod 3)."""
    p = int(p)
    if p % 3 != 1:
        raise ValueError(f"every residue is a cube mod {p}; need p == 1 mod 3")
    e = (p - 1) // 3
    n = 2
    while pow(n, e, p) == 1:
        n += 1
    return n


def is_cube(n: int, p: int | OddPrime) -> bool:
    """Whether x^3 == n mod p is solvable."""
    p = int(p)
    n %= p
    if n == 0 or p % 3 != 1:
        return True
    return pow(n, (p - 1) // 3, p) == 1
