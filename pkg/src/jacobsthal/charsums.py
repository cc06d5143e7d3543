"""Jacobsthal sums: sum over x in F_p of the Legendre symbol of f(x).

The generic evaluator works for arbitrary integer polynomials.  The named
sums bundle the divisibility facts that make their halves and quarters
integers; violating one of those is a hard error, since each is a theorem,
not a heuristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from . import kernels
from .errors import (
    DivisibilityViolation,
    NIsACube,
    NotANonresidue,
    ParityViolation,
    ThresholdExceeded,
    WrongResidueClass,
)
from .modarith import OddPrime, as_prime, is_cube, least_nonresidue, legendre_symbol

DEFAULT_TABLE_THRESHOLD = 1 << 31


@dataclass(frozen=True)
class PolyModP:
    """Integer polynomial reduced mod p; coeffs[k] is the degree-k coefficient."""

    coeffs: tuple[int, ...]
    p: int

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], p: int | OddPrime) -> "PolyModP":
        p = as_prime(p)
        reduced = [c % p for c in coeffs]
        while len(reduced) > 1 and reduced[-1] == 0:
            reduced.pop()
        return cls(tuple(reduced), p)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def translate(self, c: int) -> "PolyModP":
        """The polynomial f(x + c)."""
        p = self.p
        c %= p
        n = len(self.coeffs)
        out = [0] * n
        for k, a in enumerate(self.coeffs):
            ck = 1
            for j in range(k, -1, -1):
                out[j] = (out[j] + a * comb(k, j) % p * ck) % p
                ck = ck * c % p
        return PolyModP.from_coeffs(out, p)

    def mul_scalar(self, s: int) -> "PolyModP":
        return PolyModP.from_coeffs([c * s for c in self.coeffs], self.p)

    def derivative(self) -> "PolyModP":
        if self.degree == 0:
            return PolyModP.from_coeffs([0], self.p)
        return PolyModP.from_coeffs(
            [k * c for k, c in enumerate(self.coeffs)][1:], self.p
        )

    def __str__(self) -> str:
        terms = [f"{c}*x^{k}" for k, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class SumResult:
    """A raw Jacobsthal sum together with its inputs."""

    raw_sum: int
    p: int
    poly: PolyModP


def qr_table(p: int | OddPrime, threshold: int = DEFAULT_TABLE_THRESHOLD):
    """One-pass quadratic residue table: table[a] = (a/p) for 0 <= a < p."""
    p = as_prime(p)
    if p > threshold:
        raise ThresholdExceeded(f"qr_table for p={p} exceeds threshold {threshold}")
    return kernels.qr_table(p)


def _as_poly(f: PolyModP | Sequence[int], p: int | None) -> PolyModP:
    if isinstance(f, PolyModP):
        if p is not None and f.p != int(p):
            raise ValueError(f"polynomial is mod {f.p}, not mod {p}")
        return f
    if p is None:
        raise ValueError("a prime is required when f is a bare coefficient list")
    return PolyModP.from_coeffs(f, p)


def _raw_sum(coeffs: Sequence[int], p: int, table=None, method: str = "auto") -> int:
    if method == "euler" or (method == "auto" and table is None and p > DEFAULT_TABLE_THRESHOLD):
        return _char_sum_euler(coeffs, p)
    if table is None:
        table = kernels.qr_table(p)
    return int(kernels.char_sum(tuple(coeffs), p, table))


def _char_sum_euler(coeffs: Sequence[int], p: int) -> int:
    """Table-free slow path: one Euler-criterion symbol per point."""
    cs = [c % p for c in coeffs]
    total = 0
    for x in range(p):
        acc = 0
        for c in reversed(cs):
            acc = (acc * x + c) % p
        total += legendre_symbol(acc, p)
    return total


def jacobsthal_sum(
    f: PolyModP | Sequence[int],
    p: int | OddPrime | None = None,
    *,
    table=None,
    method: str = "auto",
) -> SumResult:
    """Exact sum over x in F_p of the Legendre symbol of f(x).

    `method` is "auto" (residue table when affordable), "table", or "euler".
    A prebuilt table may be passed to amortize it across several sums.
    """
    if p is not None:
        p = as_prime(p)
    poly = _as_poly(f, p)
    raw = _raw_sum(poly.coeffs, poly.p, table=table, method=method)
    return SumResult(raw, poly.p, poly)


# Coefficient vectors (constant term first) of the named sum families.
CUBIC_A_COEFFS = (0, 2, 4, 1)  # x^3 + 4x^2 + 2x
SEXTIC_B2_COEFFS = (-8, -16, -20, 0, 10, 4, 1)  # x^6+4x^5+10x^4-20x^2-16x-8


def _quintic_b1_coeffs(n: int) -> tuple[int, ...]:
    return (0, n, 0, 0, 0, 1)  # x^5 + n*x


def _classical_coeffs(n: int) -> tuple[int, ...]:
    return (0, -n, 0, 1)  # x^3 - n*x


def sum_A(p: int | OddPrime, *, table=None) -> int:
    """Half the x^3+4x^2+2x sum; the odd part of p = A^2 + 2B^2.

    Needs p == 1 or 3 mod 8.  The raw sum is provably even; an odd value
    is raised, not rounded.
    """
    p = as_prime(p)
    if p % 8 not in (1, 3):
        raise WrongResidueClass(f"p={p} is not 1 or 3 mod 8")
    raw = _raw_sum(CUBIC_A_COEFFS, p, table=table)
    assert raw * raw <= 4 * p, f"Weil bound violated: |{raw}| > 2*sqrt({p})"
    if raw % 2 != 0:
        raise ParityViolation(f"sum for x^3+4x^2+2x at p={p} is odd: {raw}")
    return raw // 2


def sum_B1(p: int | OddPrime, n: int | None = None, *, table=None) -> int:
    """Quarter of the x^5+nx sum for a nonresidue n; needs p == 1 mod 8."""
    p = as_prime(p)
    if p % 8 != 1:
        raise WrongResidueClass(f"p={p} is not 1 mod 8")
    if n is None:
        n = least_nonresidue(p)
    if legendre_symbol(n, p) != -1:
        raise NotANonresidue(f"n={n} is not a quadratic nonresidue mod {p}")
    raw = _raw_sum(_quintic_b1_coeffs(n % p), p, table=table)
    assert raw * raw <= 16 * p, f"Weil bound violated: |{raw}| > 4*sqrt({p})"
    if raw % 4 != 0:
        raise DivisibilityViolation(f"sum for x^5+{n}x at p={p} is not 4-divisible: {raw}")
    return raw // 4


def sum_B2(p: int | OddPrime, *, table=None) -> int:
    """(1 + sextic sum)/4; needs p == 3 mod 8."""
    p = as_prime(p)
    if p % 8 != 3:
        raise WrongResidueClass(f"p={p} is not 3 mod 8")
    raw = _raw_sum(SEXTIC_B2_COEFFS, p, table=table)
    shifted = 1 + raw
    assert shifted * shifted <= 16 * p, f"Weil bound violated at p={p}: 1+{raw}"
    if shifted % 4 != 0:
        raise DivisibilityViolation(f"1 + sextic sum at p={p} is not 4-divisible: {shifted}")
    return shifted // 4


def sum_classical(p: int | OddPrime, n: int = 1, *, table=None) -> int:
    """Raw sum for x^3 - n*x over any odd prime p."""
    p = as_prime(p)
    raw = _raw_sum(_classical_coeffs(n % p), p, table=table)
    if n % p != 0:
        assert raw * raw <= 4 * p, f"Weil bound violated: |{raw}| > 2*sqrt({p})"
    return raw


def sum_classical_half(p: int | OddPrime, n: int = 1, *, table=None) -> int:
    """Half the x^3 - n*x sum; needs p == 1 mod 4 for the half to exist."""
    p = as_prime(p)
    if p % 4 != 1:
        raise WrongResidueClass(f"p={p} is not 1 mod 4")
    raw = sum_classical(p, n, table=table)
    if raw % 2 != 0:
        raise ParityViolation(f"sum for x^3-{n}x at p={p} is odd: {raw}")
    return raw // 2


def sum_cubic(p: int | OddPrime, n: int, *, table=None) -> tuple[int, int]:
    """The pair (A, B) with 3p = A^2 + AB + B^2 built from x^3+1 and x^3+n.

    A is the x^3+1 sum; B is (n/p) times the x^3+n sum, for any n that is
    not a cube mod p.  Needs p == 1 mod 6.
    """
    p = as_prime(p)
    if p % 6 != 1:
        raise WrongResidueClass(f"p={p} is not 1 mod 6")
    if is_cube(n, p):
        raise NIsACube(f"n={n} is a cube mod {p}")
    a = _raw_sum((1, 0, 0, 1), p, table=table)
    raw_b = _raw_sum((n % p, 0, 0, 1), p, table=table)
    assert a * a <= 4 * p and raw_b * raw_b <= 4 * p, f"Weil bound violated at p={p}"
    b = legendre_symbol(n, p) * raw_b
    return a, b
