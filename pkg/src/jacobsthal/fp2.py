"""Arithmetic in the quadratic extension F_p^2 = F_p(t), t^2 = r.

r is a fixed quadratic nonresidue mod p, so {1, t} is a basis.  The
multiplicative group has order p^2 - 1; the quadratic character of
z = c0 + c1*t is the Legendre symbol of its norm c0^2 - r*c1^2, because
norm(z) = z^(p+1) and chi(z) = z^((p^2-1)/2) = norm(z)^((p-1)/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NotASquare
from .modarith import OddPrime, as_prime, least_nonresidue, legendre_symbol, sqrt_mod


@dataclass(frozen=True)
class Fp2Context:
    """The field F_p^2 presented as F_p[t]/(t^2 - r), r a nonresidue."""

    p: int
    r: int

    def __post_init__(self) -> None:
        if legendre_symbol(self.r, self.p) != -1:
            raise ValueError(f"r={self.r} is not a nonresidue mod {self.p}")

    @classmethod
    def for_prime(cls, p: int | OddPrime) -> "Fp2Context":
        p = as_prime(p)
        return _context_for(p)

    def elem(self, c0: int, c1: int = 0) -> "Fp2Element":
        return Fp2Element(c0 % self.p, c1 % self.p, self)

    def zero(self) -> "Fp2Element":
        return self.elem(0)

    def one(self) -> "Fp2Element":
        return self.elem(1)

    def gen(self) -> "Fp2Element":
        """The generator t with t^2 = r."""
        return self.elem(0, 1)


@lru_cache(maxsize=None)
def _context_for(p: int) -> Fp2Context:
    return Fp2Context(p, least_nonresidue(p))


@dataclass(frozen=True)
class Fp2Element:
    """Immutable element c0 + c1*t of an Fp2Context."""

    c0: int
    c1: int
    ctx: Fp2Context

    def __add__(self, other: "Fp2Element | int") -> "Fp2Element":
        other = self._coerce(other)
        p = self.ctx.p
        return Fp2Element((self.c0 + other.c0) % p, (self.c1 + other.c1) % p, self.ctx)

    def __radd__(self, other: int) -> "Fp2Element":
        return self + other

    def __sub__(self, other: "Fp2Element | int") -> "Fp2Element":
        other = self._coerce(other)
        p = self.ctx.p
        return Fp2Element((self.c0 - other.c0) % p, (self.c1 - other.c1) % p, self.ctx)

    def __rsub__(self, other: int) -> "Fp2Element":
        return self._coerce(other) - self

    def __neg__(self) -> "Fp2Element":
        p = self.ctx.p
        return Fp2Element(-self.c0 % p, -self.c1 % p, self.ctx)

    def __mul__(self, other: "Fp2Element | int") -> "Fp2Element":
        other = self._coerce(other)
        p, r = self.ctx.p, self.ctx.r
        a0, a1, b0, b1 = self.c0, self.c1, other.c0, other.c1
        return Fp2Element(
            (a0 * b0 + r * (a1 * b1 % p)) % p,
            (a0 * b1 + a1 * b0) % p,
            self.ctx,
        )

    def __rmul__(self, other: int) -> "Fp2Element":
        return self * other

    def __pow__(self, e: int) -> "Fp2Element":
        if e < 0:
            raise ValueError("negative exponent; use inverse() first")
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self) -> bool:
        return self.c0 != 0 or self.c1 != 0

    def conjugate(self) -> "Fp2Element":
        """Frobenius image c0 - c1*t (t^p = -t since r is a nonresidue)."""
        return Fp2Element(self.c0, -self.c1 % self.ctx.p, self.ctx)

    def norm(self) -> int:
        """Norm to F_p: self * self.conjugate() = c0^2 - r*c1^2."""
        p, r = self.ctx.p, self.ctx.r
        return (self.c0 * self.c0 - r * (self.c1 * self.c1 % p)) % p

    def inverse(self) -> "Fp2Element":
        if not self:
            raise ZeroDivisionError("inverse of zero in F_p^2")
        n_inv = pow(self.norm(), -1, self.ctx.p)
        return self.conjugate() * n_inv

    def is_square(self) -> bool:
        """Whether self is a square in F_p^2 (0 counts as a square)."""
        if not self:
            return True
        return legendre_symbol(self.norm(), self.ctx.p) == 1

    def _coerce(self, other: "Fp2Element | int") -> "Fp2Element":
        if isinstance(other, Fp2Element):
            if other.ctx != self.ctx:
                raise ValueError("elements from different Fp2 contexts")
            return other
        return self.ctx.elem(other)

    def __repr__(self) -> str:
        return f"({self.c0} + {self.c1}*t mod {self.ctx.p}, t^2={self.ctx.r})"


def fp2_pow(x: Fp2Element, e: int) -> Fp2Element:
    """x**e by square-and-multiply; exponents up to 128 bits are routine."""
    return x**e


def fp2_sqrt(a: Fp2Element) -> Fp2Element:
    """Canonical square root in F_p^2.

    A nonzero a is a square iff its norm is a residue mod p.  For
    a = alpha + beta*t with beta != 0, a root x + y*t satisfies
    x^2 = (alpha +- n)/2 with n = sqrt(norm(a)) mod p, exactly one sign
    giving a residue, and then y = beta / (2x).  Of the two roots +-s the
    one with the lexicographically smaller (c0, c1) pair is returned.
    """
    ctx = a.ctx
    p, r = ctx.p, ctx.r
    if not a:
        return ctx.zero()
    if not a.is_square():
        raise NotASquare(f"{a!r} is not a square in F_{p}^2")
    alpha, beta = a.c0, a.c1
    if beta == 0:
        if legendre_symbol(alpha, p) == 1:
            s = ctx.elem(sqrt_mod(alpha, p))
        else:
            # alpha = r * y^2 with alpha/r a residue; root is y*t.
            y = sqrt_mod(alpha * pow(r, -1, p) % p, p)
            s = ctx.elem(0, y)
    else:
        n = sqrt_mod(a.norm(), p)
        inv2 = pow(2, -1, p)
        u = (alpha + n) * inv2 % p
        if legendre_symbol(u, p) != 1:
            u = (alpha - n) * inv2 % p
        x = sqrt_mod(u, p)
        y = beta * pow(2 * x, -1, p) % p
        s = ctx.elem(x, y)
    return min(s, -s, key=lambda z: (z.c0, z.c1))
