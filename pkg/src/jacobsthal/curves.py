"""Hyperelliptic point counts over F_p and F_p^2, and local L-factors.

All five curve models used here have good reduction at every odd prime
(their conductors are supported at 2), but squarefreeness of f is still
checked before any count so a bad model fails loudly.

Counting convention: affine solutions of y^2 = f(x) plus points at
infinity on the smooth model -- one for odd-degree f, two for degree 6
with a square leading coefficient, zero for a nonsquare one.  Over F_p^2
every nonzero element of F_p is a square, so a degree-6 model from F_p
always gets two points at infinity there.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .charsums import PolyModP, CUBIC_A_COEFFS, SEXTIC_B2_COEFFS, _raw_sum
from .errors import (
    BadReduction,
    HasseViolation,
    InconsistentCounts,
    ThresholdExceeded,
    WrongResidueClass,
)
from .fp2 import Fp2Context, fp2_pow, fp2_sqrt
from .modarith import OddPrime, as_prime, legendre_symbol

# Integer coefficient vectors (constant first) of the five curve models.
E1_COEFFS = CUBIC_A_COEFFS  # y^2 = x^3 + 4x^2 + 2x
E2_COEFFS = (0, 2, -4, 1)  # y^2 = x^3 - 4x^2 + 2x, the -1 twist of E1
X1_COEFFS = (0, 1, 0, 0, 0, 1)  # y^2 = x^5 + x
X2_COEFFS = SEXTIC_B2_COEFFS  # y^2 = sextic

# Direct F_p^2 enumeration is quadratic in p; keep it at desk scale.
FP2_ENUM_CAP = 2000


def classical_coeffs(n: int) -> tuple[int, ...]:
    """y^2 = x^3 - n*x."""
    return (0, -n, 0, 1)


@dataclass(frozen=True)
class HyperellipticModel:
    """A curve y^2 = f(x) with deg f in {3, 5, 6}."""

    f: PolyModP
    degree: int
    genus: int

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], p: int | OddPrime) -> "HyperellipticModel":
        p = as_prime(p)
        degree = len(coeffs) - 1
        if degree not in (3, 5, 6):
            raise ValueError(f"degree {degree} not in {{3, 5, 6}}")
        if coeffs[-1] % p == 0:
            raise BadReduction(f"leading coefficient vanishes mod {p}")
        f = PolyModP.from_coeffs(coeffs, p)
        return cls(f, degree, 1 if degree == 3 else 2)


def _trim(v: list[int]) -> list[int]:
    while len(v) > 1 and v[-1] == 0:
        v.pop()
    return v


def _poly_rem(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a divided by b over F_p (coefficient lists, constant first)."""
    a = _trim([c % p for c in a])
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b) and a != [0]:
        factor = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[i + shift] = (a[i + shift] - factor * c) % p
        a = _trim(a)
    return a


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    """Monic gcd of two coefficient vectors over F_p."""
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b != [0]:
        a, b = b, _poly_rem(a, b, p)
    inv_lead = pow(a[-1], -1, p)
    return tuple(c * inv_lead % p for c in a)


def is_squarefree(f: PolyModP) -> bool:
    """gcd(f, f') is constant, over F_p (hence over any extension)."""
    deriv = f.derivative()
    if deriv.degree == 0 and deriv.coeffs[0] == 0:
        return False
    return len(_poly_gcd(f.coeffs, deriv.coeffs, f.p)) == 1


def count_points(
    model: HyperellipticModel,
    p: int | OddPrime,
    extension_degree: int = 1,
    *,
    table=None,
    fp2_cap: int = FP2_ENUM_CAP,
) -> int:
    """Projective point count of y^2 = f(x) over F_p or F_p^2."""
    p = as_prime(p)
    if model.f.p != p:
        raise ValueError(f"model is mod {model.f.p}, not mod {p}")
    if extension_degree not in (1, 2):
        raise ValueError("extension_degree must be 1 or 2")
    if not is_squarefree(model.f):
        raise BadReduction(f"f = {model.f} is not squarefree mod {p}")
    lead = model.f.coeffs[-1]
    if extension_degree == 1:
        if table is None:
            table = kernels.qr_table(p)
        affine = p + int(kernels.char_sum(model.f.coeffs, p, table))
        if model.degree % 2 == 1:
            infinity = 1
        else:
            infinity = 2 if legendre_symbol(lead, p) == 1 else 0
        return affine + infinity
    if p > fp2_cap:
        raise ThresholdExceeded(
            f"direct F_p^2 enumeration capped at p <= {fp2_cap}, got {p}"
        )
    ctx = Fp2Context.for_prime(p)
    if table is None:
        table = kernels.qr_table(p)
    affine = p * p + int(kernels.char_sum_fp2(model.f.coeffs, p, ctx.r, table))
    # Every nonzero element of F_p is a square in F_p^2.
    infinity = 1 if model.degree % 2 == 1 else 2
    return affine + infinity


@dataclass(frozen=True)
class LocalFactor:
    """Coefficients (c1, .., c_{2g}) of the Frobenius polynomial 1 + c1*T + ..."""

    genus: int
    coeffs: tuple[int, ...]
    p: int

    def predicted_counts(self) -> tuple[int, ...]:
        """Point counts over F_p (and F_p^2 for genus 2) implied by the factor.

        Newton's identities on the reciprocal roots: with elementary symmetric
        functions e_k = (-1)^k * c_k, the power sums are s1 = e1 and
        s2 = e1*s1 - 2*e2, and the count over F_{p^n} is p^n + 1 - s_n.
        """
        c1 = self.coeffs[0]
        s1 = -c1
        n1 = self.p + 1 - s1
        if self.genus == 1:
            return (n1,)
        c2 = self.coeffs[1]
        s2 = c1 * c1 - 2 * c2
        n2 = self.p * self.p + 1 - s2
        return (n1, n2)


def local_factor_genus1(p: int | OddPrime, n1: int) -> LocalFactor:
    """Degree-2 factor 1 + c1*T + p*T^2 from a genus-1 projective count."""
    p = as_prime(p)
    c1 = n1 - p - 1
    if c1 * c1 > 4 * p:
        raise HasseViolation(f"|{c1}| > 2*sqrt({p}) from count {n1}")
    return LocalFactor(1, (c1, p), p)


def local_factor_genus2(p: int | OddPrime, n1: int, n2: int) -> LocalFactor:
    """Degree-4 factor from genus-2 counts over F_p and F_p^2.

    c1 comes straight from n1, c2 from Newton's identity on n2, and the
    functional equation forces c3 = p*c1, c4 = p^2.
    """
    p = as_prime(p)
    c1 = n1 - p - 1
    doubled = c1 * c1 - (p * p + 1 - n2)
    if doubled % 2 != 0:
        raise InconsistentCounts(f"counts ({n1}, {n2}) at p={p} give non-integral c2")
    c2 = doubled // 2
    if c1 * c1 > 16 * p or abs(c2) > 6 * p:
        raise InconsistentCounts(f"Weil bounds violated at p={p}: c1={c1}, c2={c2}")
    return LocalFactor(2, (c1, c2, p * c1, p * p), p)


def trace_identity_check(p: int | OddPrime, *, table=None) -> bool:
    """Whether the x^5+x sum splits as the sum for E1 plus the sum for E2."""
    p = as_prime(p)
    if table is None:
        table = kernels.qr_table(p)
    s_x1 = _raw_sum(X1_COEFFS, p, table=table)
    s_e1 = _raw_sum(E1_COEFFS, p, table=table)
    s_e2 = _raw_sum(E2_COEFFS, p, table=table)
    return s_x1 == s_e1 + s_e2


def quadratic_twist_check(p: int | OddPrime, *, table=None) -> bool:
    """Whether the E2 sum is (-1/p) times the E1 sum (E2 is the -1 twist)."""
    p = as_prime(p)
    if table is None:
        table = kernels.qr_table(p)
    s_e1 = _raw_sum(E1_COEFFS, p, table=table)
    s_e2 = _raw_sum(E2_COEFFS, p, table=table)
    return s_e2 == legendre_symbol(-1, p) * s_e1


@dataclass(frozen=True)
class KummerValue:
    """A 4th root of unity i^exponent attached to (p, k)."""

    p: int
    k: int
    exponent: int  # the value is i**exponent, exponent in {0,1,2,3}

    @property
    def value_str(self) -> str:
        return {0: "1", 1: "i", 2: "-1", 3: "-i"}[self.exponent]

    @property
    def is_primitive_fourth_root(self) -> bool:
        return self.exponent in (1, 3)


def _fourth_root_data(p: int):
    """(i, sqrt2, base) in F_p^2 with base = i*(sqrt2 - 1)."""
    ctx = Fp2Context.for_prime(p)
    i_elem = fp2_sqrt(ctx.elem(-1))
    sqrt2 = fp2_sqrt(ctx.elem(2))
    return ctx, i_elem, i_elem * (sqrt2 - 1)


def kummer_character(p: int | OddPrime, k: int) -> KummerValue:
    """Character value i^(j*k) where i^j = (i*(sqrt2-1))^((p^2-1)/4) in F_p^2.

    Defined for inert-or-ramified classes p == 3, 5, 7 mod 8 (degree-2
    primes of norm p^2).  The choice of square roots only flips j to -j,
    which the allowed value sets already absorb.
    """
    p = as_prime(p)
    if k not in (0, 1, 2, 3):
        raise ValueError(f"k must be in {{0,1,2,3}}, got {k}")
    if p % 8 == 1:
        raise WrongResidueClass(f"p={p} splits (p == 1 mod 8); not supported")
    assert (p * p - 1) % 4 == 0
    ctx, i_elem, base = _fourth_root_data(p)
    w = fp2_pow(base, (p * p - 1) // 4)
    value = ctx.one()
    for j in range(4):
        if w == value:
            exponent = j * k % 4
            return KummerValue(p, k, exponent)
        value = value * i_elem
    raise AssertionError(f"(i(sqrt2-1))^((p^2-1)/4) is not a 4th root of unity at p={p}")


def sqrt2_minus_one_is_nonsquare(p: int | OddPrime) -> bool:
    """Whether (sqrt2 - 1)^((p^2-1)/2) == -1 in F_p^2."""
    p = as_prime(p)
    ctx = Fp2Context.for_prime(p)
    sqrt2 = fp2_sqrt(ctx.elem(2))
    w = fp2_pow(sqrt2 - 1, (p * p - 1) // 2)
    return w == ctx.elem(-1)
