"""Mersenne prime polynomials: irreducibles of the form 1 + x^a (x+1)^b.

Primality of the form forces gcd(a, b) = 1 (so a or b is odd); enumeration
uses that as a pre-filter but every candidate still passes the full
irreducibility test before being accepted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _intkernel as _k
from .factorize import is_irreducible
from .gf2poly import Gf2Poly

__all__ = [
    "MersennePrime",
    "NotIrreducibleError",
    "mersenne_form",
    "build",
    "recognize",
    "is_mersenne_prime",
    "conjugate",
    "enumerate_primes",
]


class NotIrreducibleError(ValueError):
    """The expanded candidate polynomial is reducible; carries the polynomial."""

    def __init__(self, message: str, poly: Gf2Poly):
        super().__init__(message)
        self.poly = poly


@dataclass(frozen=True)
class MersennePrime:
    """An irreducible 1 + x^a (x+1)^b with its exponent pair."""

    a: int
    b: int
    poly: Gf2Poly

    @property
    def degree(self) -> int:
        return self.a + self.b


def mersenne_form(a: int, b: int) -> Gf2Poly:
    """The polynomial 1 + x^a (x+1)^b (irreducible or not)."""
    if a < 1 or b < 1:
        raise ValueError("exponents must be >= 1")
    x1_pow = 1
    base = 3
    e = b
    while e:
        if e & 1:
            x1_pow = _k.mul(x1_pow, base)
        e >>= 1
        if e:
            base = _k.square(base)
    return Gf2Poly(1 ^ (x1_pow << a))


def build(a: int, b: int) -> MersennePrime:
    """Construct the Mersenne prime with exponents (a, b), or fail loudly."""
    poly = mersenne_form(a, b)
    problems = []
    if math.gcd(a, b) != 1:
        problems.append(f"gcd({a},{b}) = {math.gcd(a, b)} != 1")
    if a % 2 == 0 and b % 2 == 0:
        problems.append("both exponents are even")
    if not is_irreducible(poly):
        detail = f" ({'; '.join(problems)})" if problems else ""
        raise NotIrreducibleError(
            f"1 + x^{a}(x+1)^{b} = {poly} is not irreducible{detail}", poly
        )
    return MersennePrime(a, b, poly)


def recognize(P: Gf2Poly) -> tuple[int, int] | None:
    """The exponent pair (a, b) with P + 1 = x^a (x+1)^b, if the form matches.

    Purely structural: irreducibility is not tested here.  A polynomial is
    a Mersenne prime iff ``recognize`` succeeds and it is irreducible.
    """
    if not P:
        raise ValueError("recognize is undefined for the zero polynomial")
    s = P.bits ^ 1
    if s == 0:
        return None
    a = (s & -s).bit_length() - 1
    s >>= a
    b = 0
    while s != 1:
        if bin(s).count("1") % 2 != 0:  # s(1) = 1, so x+1 does not divide s
            return None
        s = _k.exact_div(s, 3)
        b += 1
    if a >= 1 and b >= 1:
        return (a, b)
    return None


def is_mersenne_prime(P: Gf2Poly) -> bool:
    return P.degree >= 1 and recognize(P) is not None and is_irreducible(P)


def conjugate(M: MersennePrime) -> MersennePrime:
    """The image under x -> x+1: exponents swap to (b, a)."""
    poly = M.poly.subst_x_plus_1()
    if poly != mersenne_form(M.b, M.a):
        raise ArithmeticError("internal: conjugate does not match the swapped form")
    return MersennePrime(M.b, M.a, poly)


def enumerate_primes(deg_min: int, deg_max: int) -> list[MersennePrime]:
    """All Mersenne primes with deg_min <= a+b <= deg_max, sorted by (degree, a)."""
    if not (2 <= deg_min <= deg_max):
        raise ValueError("need 2 <= deg_min <= deg_max")
    out = []
    for d in range(deg_min, deg_max + 1):
        for a in range(1, d):
            b = d - a
            if math.gcd(a, b) != 1:  # also excludes both-even pairs
                continue
            poly = mersenne_form(a, b)
            if is_irreducible(poly):
                out.append(MersennePrime(a, b, poly))
    return out
