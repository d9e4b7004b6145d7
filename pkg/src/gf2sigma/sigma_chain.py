"""The divisor-sum chain attached to a Mersenne prime M and an odd prime p = 2h+1.

For each pair this computes sigma(M^(2h)) and sigma(M^(2h-1)), factors the
even power's divisor sum, applies sigma a second time, and derives the
deviation polynomial, the residual, and the three scan indices (the degree
gap and the least odd/even top-coefficient marks) that drive the
exception-set classification.

Factoring sigma(M^(2h)) = (M^p + 1)/(M + 1) exploits a structural fact:
every root beta of an irreducible factor maps to M(beta), a primitive p-th
root of unity, so GF(2^k) with k = ord_p(2) embeds in the factor's root
field.  Hence all factor degrees are multiples of k and at most
k * deg(M).  Those bounds are passed to the factorizer as schedule hints
only; the reconstruction check keeps them honest.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

from . import _intkernel as _k
from .factorize import (
    DEFAULT_SEED,
    Factorization,
    FactorizationError,
    _factor_bits,
    _sigma_of_power,
)
from .gf2poly import Gf2Poly
from .mersenne import MersennePrime, recognize

__all__ = [
    "SigmaAnalysis",
    "FactorCache",
    "sigma_prime_power",
    "analyze",
    "is_odd_prime",
    "order_of_two",
]


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def order_of_two(p: int) -> int:
    """Multiplicative order of 2 modulo an odd prime p."""
    k, v = 1, 2 % p
    while v != 1:
        v = v * 2 % p
        k += 1
    return k


@dataclass(frozen=True)
class SigmaAnalysis:
    """Everything derived from one (Mersenne prime, odd prime) pair.

    ``degree_gap`` is the drop from deg(sigma_even) to deg(deviation),
    absent when the deviation is zero.  ``least_odd_top`` /
    ``least_even_top`` are the smallest odd/even indices l >= 1 with
    top_coeff(deviation, l) = 1, absent when no such index exists.
    """

    mersenne: MersennePrime
    p: int
    h: int
    sigma_even: Gf2Poly  # sigma(M^(2h)) = sigma(M^(p-1))
    sigma_odd: Gf2Poly  # sigma(M^(2h-1))
    factorization: Factorization  # of sigma_even
    all_mersenne: bool
    sum_a: int | None  # sum of recognized x-exponents over the factors
    sum_b: int | None  # sum of recognized (x+1)-exponents
    double_sigma: Gf2Poly  # sigma(sigma(M^(2h)))
    deviation: Gf2Poly  # double_sigma + sigma_even + 1
    residual: Gf2Poly  # sigma_odd + deviation
    degree_gap: int | None
    least_odd_top: int | None
    least_even_top: int | None

    @property
    def deviation_zero(self) -> bool:
        return not self.deviation

    @property
    def in_theorem_scope(self) -> bool:
        """p >= 5 and deg(M) >= 5; smaller instances are informational only."""
        return self.p >= 5 and self.mersenne.degree >= 5

    def to_json_dict(self) -> dict:
        return {
            "a": self.mersenne.a,
            "b": self.mersenne.b,
            "p": self.p,
            "c": self.degree_gap,
            "m": self.least_odd_top,
            "e": self.least_even_top,
            "all_mersenne": self.all_mersenne,
            "w_zero": self.deviation_zero,
            "factors": [
                {"poly": poly.to_hex(), "mult": mult}
                for poly, mult in self.factorization
            ],
        }


def sigma_prime_power(M: MersennePrime, n: int) -> Gf2Poly:
    """1 + M + ... + M^n, as the exact quotient (M^(n+1) + 1) / (M + 1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return Gf2Poly(_sigma_of_power(M.poly.bits, n))


class FactorCache:
    """JSON-lines store of factorizations keyed by (a, b, p).

    Hits are only trusted after the product reconstructs the polynomial
    being factored (the Factorization constructor enforces that), so a
    corrupt or mismatched cache line degrades to a recompute.
    """

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self._entries: dict[tuple[int, int, int], list[tuple[int, int]]] = {}
        self._dirty = False
        if self.path.exists():
            with self.path.open() as handle:
                for line in handle:
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        rec = json.loads(line)
                        key = (int(rec["a"]), int(rec["b"]), int(rec["p"]))
                        pairs = [
                            (int(e["poly"], 16), int(e["mult"])) for e in rec["factors"]
                        ]
                    except (ValueError, KeyError, TypeError):
                        continue  # damaged line; drop, the recompute path covers it
                    self._entries[key] = pairs

    def get(self, a: int, b: int, p: int) -> list[tuple[int, int]] | None:
        return self._entries.get((a, b, p))

    def put(self, a: int, b: int, p: int, fact: Factorization) -> None:
        pairs = [(poly.bits, mult) for poly, mult in fact]
        if self._entries.get((a, b, p)) != pairs:
            self._entries[(a, b, p)] = pairs
            self._dirty = True

    def save(self) -> None:
        if not self._dirty:
            return
        tmp = self.path.with_suffix(self.path.suffix + ".tmp")
        with tmp.open("w") as handle:
            for (a, b, p), pairs in sorted(self._entries.items()):
                rec = {
                    "a": a,
                    "b": b,
                    "p": p,
                    "factors": [
                        {"poly": format(bits, "#x"), "mult": mult}
                        for bits, mult in pairs
                    ],
                }
                handle.write(json.dumps(rec) + "\n")
        tmp.replace(self.path)
        self._dirty = False


def _scan_tops(w: Gf2Poly) -> tuple[int | None, int | None]:
    """Least odd and least even index l >= 1 with top_coeff(w, l) = 1."""
    bits = w.bits
    d = bits.bit_length() - 1
    odd = even = None
    for l in range(1, d + 1):
        if (bits >> (d - l)) & 1:
            if l % 2:
                if odd is None:
                    odd = l
            elif even is None:
                even = l
        if odd is not None and even is not None:
            break
    return odd, even


def analyze(
    M: MersennePrime,
    p: int,
    seed: int = DEFAULT_SEED,
    *,
    cache: FactorCache | None = None,
    factor_hint: list[tuple[int, int]] | None = None,
) -> SigmaAnalysis:
    """Run the full chain for (M, p); p must be an odd prime (p = 3 is allowed
    but outside the theorem scope, see ``SigmaAnalysis.in_theorem_scope``)."""
    if not is_odd_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    h = (p - 1) // 2
    deg_m = M.degree
    mb = M.poly.bits

    sigma_even = sigma_prime_power(M, p - 1)
    sigma_odd = sigma_prime_power(M, p - 2)

    # cross-check the division route against the plain geometric sum
    acc = 1
    pw = 1
    for _ in range(p - 1):
        pw = _k.mul(pw, mb)
        acc ^= pw
    if acc != sigma_even.bits:
        raise ArithmeticError("internal: geometric sum cross-check failed")
    power_even = pw  # M^(2h), reused below

    if sigma_even.degree != 2 * h * deg_m:
        raise ArithmeticError("internal: sigma(M^(2h)) has the wrong degree")

    fact = None
    hint = factor_hint
    if hint is None and cache is not None:
        hint = cache.get(M.a, M.b, p)
    if hint is not None:
        try:
            fact = Factorization(
                sigma_even, tuple((Gf2Poly(bits), mult) for bits, mult in hint)
            )
        except FactorizationError:
            fact = None  # stale or corrupt hint; recompute
    if fact is None:
        k = order_of_two(p)
        pairs = _factor_bits(
            sigma_even.bits, seed, stride=k, part_degree_cap=k * deg_m
        )
        fact = Factorization(
            sigma_even, tuple((Gf2Poly(bits), mult) for bits, mult in pairs)
        )
    if cache is not None:
        cache.put(M.a, M.b, p, fact)

    all_mersenne = True
    sum_a = sum_b = 0
    for poly, _ in fact:
        rec = recognize(poly)
        if rec is None:
            all_mersenne = False
            break
        sum_a += rec[0]
        sum_b += rec[1]

    u_bits = 1
    for poly, mult in fact:
        u_bits = _k.mul(u_bits, _sigma_of_power(poly.bits, mult))
    double_sigma = Gf2Poly(u_bits)
    if double_sigma.degree != sigma_even.degree:
        raise ArithmeticError("internal: sigma(sigma(M^(2h))) has the wrong degree")

    deviation = Gf2Poly(u_bits ^ sigma_even.bits ^ 1)
    residual = sigma_odd + deviation
    if residual.bits != u_bits ^ 1 ^ power_even:
        raise ArithmeticError("internal: residual identity failed")

    if deviation:
        degree_gap = sigma_even.degree - deviation.degree
        least_odd, least_even = _scan_tops(deviation)
    else:
        degree_gap = least_odd = least_even = None

    return SigmaAnalysis(
        mersenne=M,
        p=p,
        h=h,
        sigma_even=sigma_even,
        sigma_odd=sigma_odd,
        factorization=fact,
        all_mersenne=all_mersenne,
        sum_a=sum_a if all_mersenne else None,
        sum_b=sum_b if all_mersenne else None,
        double_sigma=double_sigma,
        deviation=deviation,
        residual=residual,
        degree_gap=degree_gap,
        least_odd_top=least_odd,
        least_even_top=least_even,
    )
