"""Quadratic-form representations of primes and the two CM sign laws.

Cornacchia's descent produces p = a^2 + D*b^2 for D in {1, 2}; both forms
have class number one, so the normalized representation is unique and a
direct scan serves as an independent oracle.  The sign laws compare a
closed-form predicted Frobenius trace against an actual point count.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .curves import HyperellipticModel, E1_COEFFS, classical_coeffs, count_points
from .errors import (
    NoRepresentation,
    ThresholdExceeded,
    WrongResidueClass,
)
from .modarith import OddPrime, as_prime, jacobi_symbol, legendre_symbol, sqrt_mod

BRUTE_FORCE_CAP = 10**8


@dataclass(frozen=True)
class QuadRep:
    """p = a^2 + d*b^2, a > 0, b >= 0; for d == 1 additionally a odd, b even."""

    a: int
    b: int
    d: int
    p: int

    def __post_init__(self) -> None:
        assert self.a > 0 and self.b >= 0
        assert self.a * self.a + self.d * self.b * self.b == self.p
        if self.d == 1:
            assert self.a % 2 == 1 and self.b % 2 == 0


@dataclass(frozen=True)
class CubicRep:
    """3p = a^2 + a*b + b^2 with a > 0 minimal, then b > 0."""

    a: int
    b: int
    p: int

    def __post_init__(self) -> None:
        assert self.a * self.a + self.a * self.b + self.b * self.b == 3 * self.p


@dataclass(frozen=True)
class SignReport:
    """Predicted vs observed Frobenius trace at p for one CM curve."""

    p: int
    predicted_trace: int
    observed_trace: int
    consistent: bool

    def __post_init__(self) -> None:
        assert self.observed_trace**2 <= 4 * self.p, "Hasse bound violated"
        assert self.consistent == (self.predicted_trace == self.observed_trace)


def _normalize(a: int, b: int, d: int, p: int) -> QuadRep:
    if d == 1 and a % 2 == 0:
        a, b = b, a
    return QuadRep(a, b, d, p)


def cornacchia(p: int | OddPrime, d: int) -> QuadRep:
    """Euclidean-descent solution of p = a^2 + d*b^2, d in {1, 2}.

    Starts from the square root of -d mod p taken in (p/2, p) and descends
    until the remainder drops below sqrt(p); that remainder is a and the
    cofactor yields b.  Solvable exactly when (-d/p) = +1.
    """
    p = as_prime(p)
    if d not in (1, 2):
        raise ValueError(f"d must be 1 or 2, got {d}")
    if legendre_symbol(-d, p) != 1:
        raise NoRepresentation(f"p={p} is not represented by a^2 + {d}*b^2")
    x = sqrt_mod(-d % p, p)
    if x <= p // 2:
        x = p - x
    a, b = p, x
    limit = isqrt(p)
    while b > limit:
        a, b = b, a % b
    rem = p - b * b
    if rem % d != 0:
        raise NoRepresentation(f"descent failed for p={p}, d={d}")
    c = rem // d
    t = isqrt(c)
    if t * t != c:
        raise NoRepresentation(f"descent failed for p={p}, d={d}")
    return _normalize(b, t, d, p)


def brute_force_repr(p: int | OddPrime, d: int) -> QuadRep:
    """Independent oracle: scan b and test p - d*b^2 for squareness.

    Also asserts the normalized representation is unique (class number one).
    """
    p = as_prime(p)
    if d not in (1, 2):
        raise ValueError(f"d must be 1 or 2, got {d}")
    if p > BRUTE_FORCE_CAP:
        raise ThresholdExceeded(f"brute-force scan capped at {BRUTE_FORCE_CAP}")
    found = []
    for b in range(isqrt(p // d) + 1):
        rem = p - d * b * b
        if rem <= 0:
            break
        a = isqrt(rem)
        if a * a != rem:
            continue
        if d == 1 and (a % 2 == 0 or b % 2 == 1):
            continue
        found.append((a, b))
    if not found:
        raise NoRepresentation(f"p={p} is not represented by a^2 + {d}*b^2")
    assert len(found) == 1, f"representation of {p} by a^2+{d}b^2 is not unique: {found}"
    return QuadRep(found[0][0], found[0][1], d, p)


def cubic_rep(p: int | OddPrime) -> CubicRep:
    """Scan representation of 3p = a^2 + a*b + b^2 for p == 1 mod 6.

    Canonical pair: smallest a > 0 admitting an integer solution, with the
    positive b root (for a fixed a the two roots multiply to a^2 - 3p < 0,
    so exactly one is positive).
    """
    p = as_prime(p)
    if p % 6 != 1:
        raise WrongResidueClass(f"p={p} is not 1 mod 6")
    for a in range(1, 2 * isqrt(p) + 2):
        disc = 12 * p - 3 * a * a
        if disc < 0:
            break
        s = isqrt(disc)
        if s * s != disc:
            continue
        if (s - a) % 2 == 0 and s > a:
            return CubicRep(a, (s - a) // 2, p)
    raise NoRepresentation(f"no representation 3*{p} = a^2+ab+b^2 found")


def epsilon_classical(p: int | OddPrime, *, table=None) -> SignReport:
    """Sign law for y^2 = x^3 - x at p == 1 mod 4.

    With p = a^2 + b^2 (a odd, b even, both from the normalized
    representation), the trace is 2*eps*a where eps = (-1/a) * (-1)^(b/2).
    The observed trace is p + 1 - #E(F_p).
    """
    p = as_prime(p)
    if p % 4 != 1:
        raise WrongResidueClass(f"p={p} is not 1 mod 4")
    rep = cornacchia(p, 1)
    eps = jacobi_symbol(-1, rep.a) * (-1) ** (rep.b // 2 % 2)
    predicted = 2 * eps * rep.a
    model = HyperellipticModel.from_coeffs(classical_coeffs(1), p)
    observed = p + 1 - count_points(model, p, 1, table=table)
    return SignReport(p, predicted, observed, predicted == observed)


def epsilon_sqrtm2(p: int | OddPrime, *, table=None) -> SignReport:
    """Sign law for y^2 = x^3 + 4x^2 + 2x at p == 1, 3 mod 8.

    With p = a^2 + 2b^2 (a, b > 0), the trace is eps*a where
    eps = 2*(-1)^(b/2)*(-2/a) for p == 1 mod 8 (b is even there) and
    eps = -2*(-2/a) for p == 3 mod 8.
    """
    p = as_prime(p)
    if p % 8 not in (1, 3):
        raise WrongResidueClass(f"p={p} is not 1 or 3 mod 8")
    rep = cornacchia(p, 2)
    if p % 8 == 1:
        assert rep.b % 2 == 0, f"b must be even for p == 1 mod 8, got {rep.b}"
        eps = 2 * (-1) ** (rep.b // 2 % 2) * jacobi_symbol(-2, rep.a)
    else:
        eps = -2 * jacobi_symbol(-2, rep.a)
    predicted = eps * rep.a
    model = HyperellipticModel.from_coeffs(E1_COEFFS, p)
    observed = p + 1 - count_points(model, p, 1, table=table)
    return SignReport(p, predicted, observed, predicted == observed)
