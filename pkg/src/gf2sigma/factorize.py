"""Irreducibility testing, factorization, and the divisor-sum function over GF(2).

The factoring pipeline is squarefree decomposition, then distinct-degree
splitting driven by Frobenius powers x^(2^d) mod f, then equal-degree
splitting with the characteristic-2 trace map r + r^2 + ... + r^(2^(d-1)).
Randomness only steers the equal-degree splits; the sorted output is
identical for every seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import _intkernel as _k
from .gf2poly import Gf2Poly

__all__ = [
    "DEFAULT_SEED",
    "FactorizationError",
    "Factorization",
    "is_irreducible",
    "factor",
    "omega",
    "is_squarefree",
    "sigma",
]

DEFAULT_SEED = 0xC0FFEE

# equal-degree split attempts drawn from one stream before deterministic reseed
_SPLIT_RETRY_CAP = 64


class FactorizationError(ValueError):
    pass


@dataclass(frozen=True)
class Factorization:
    """A complete factorization: sorted (irreducible, multiplicity) pairs.

    The product of the factors is re-checked against ``value`` on every
    construction, so a corrupted or stale factorization cannot circulate.
    """

    value: Gf2Poly
    factors: tuple[tuple[Gf2Poly, int], ...]

    def __post_init__(self):
        merged: dict[int, int] = {}
        for p, m in self.factors:
            if m < 1:
                raise FactorizationError("multiplicities must be >= 1")
            merged[p.bits] = merged.get(p.bits, 0) + m
        pairs = tuple((Gf2Poly(bits), m) for bits, m in sorted(merged.items()))
        object.__setattr__(self, "factors", pairs)
        prod = 1
        for p, m in pairs:
            for _ in range(m):
                prod = _k.mul(prod, p.bits)
        if prod != self.value.bits:
            raise FactorizationError("factor product does not reconstruct the input")

    @property
    def omega(self) -> int:
        return len(self.factors)

    @property
    def is_squarefree(self) -> bool:
        return all(m == 1 for _, m in self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def validate_irreducibility(self) -> None:
        """Re-run the irreducibility test on every factor (used by tests/verify)."""
        for p, _ in self.factors:
            if not is_irreducible(p):
                raise FactorizationError(f"factor {p} is not irreducible")

    def to_json_dict(self) -> dict:
        return {
            "input": self.value.to_hex(),
            "factors": [{"poly": p.to_hex(), "mult": m} for p, m in self.factors],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Factorization":
        value = Gf2Poly(int(data["input"], 16))
        pairs = tuple(
            (Gf2Poly(int(entry["poly"], 16)), int(entry["mult"]))
            for entry in data["factors"]
        )
        return cls(value, pairs)


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: Gf2Poly) -> bool:
    """Rabin's test: x^(2^n) = x mod f and gcd(x^(2^(n/q)) - x, f) = 1 for primes q | n."""
    fb = f.bits
    D = fb.bit_length() - 1
    if D < 1:
        raise ValueError("irreducibility is undefined for constants")
    if D == 1:
        return True
    if fb & 1 == 0:  # divisible by x
        return False
    if bin(fb).count("1") % 2 == 0:  # root at 1, divisible by x+1
        return False
    red = _k.Reducer(fb)
    h = red.reduce(_k.X)
    checkpoints = {D // q for q in _prime_factors(D)}
    # gcd at every early index cheaply rejects the common small factors
    sieve_limit = min(D - 1, 12) if D > 24 else 0
    for i in range(1, D + 1):
        h = red.sqmod(h)
        if i <= sieve_limit or (i in checkpoints and i < D):
            g = _k.gcd_(h ^ _k.X, fb)
            if g != 1:
                return False
    return h == _k.X


def _sqf_decompose(fb: int) -> list[tuple[int, int]]:
    """Squarefree decomposition; parts are pairwise coprime, multiplicities exact."""
    out = []
    outer = 1
    while fb.bit_length() > 1:
        df = _k.derivative_(fb)
        if df == 0:
            fb = _k.sqrt_(fb)
            outer *= 2
            continue
        g = _k.gcd_(fb, df)
        h = _k.exact_div(fb, g)
        i = 1
        while h != 1:
            y = _k.gcd_(g, h)
            part = _k.exact_div(h, y)
            if part != 1:
                out.append((part, i * outer))
            g = _k.exact_div(g, y)
            h = y
            i += 1
        fb = g
    return out


def _ddf(fb: int, stride: int, part_degree_cap: int | None) -> list[tuple[int, int]]:
    """Distinct-degree split of a squarefree fb into (product, degree) groups.

    ``stride`` > 1 is only valid when every factor degree is a multiple of
    it; ``part_degree_cap`` bounds the largest factor degree.  Both are
    hints: if the cap is ever contradicted the walk falls back to the
    unrestricted schedule.
    """
    out = []
    d = 0
    red = _k.Reducer(fb)
    h = red.reduce(_k.X)
    pending: list[tuple[int, int]] = []  # (degree, frobenius power) awaiting a gcd

    def flush():
        nonlocal fb, red, h, pending
        if not pending:
            return
        acc = 1
        for _, hp in pending:
            acc = red.mulmod(acc, hp ^ _k.X)
        if _k.gcd_(acc, fb) != 1:
            for dd, hp in pending:
                g = _k.gcd_(hp ^ _k.X, fb)
                if g != 1:
                    if (g.bit_length() - 1) % dd:
                        raise ArithmeticError(
                            "internal: distinct-degree stage degree mismatch"
                        )
                    out.append((g, dd))
                    fb = _k.exact_div(fb, g)
                    if fb.bit_length() > 1:
                        red = _k.Reducer(fb)
        pending = []

    while True:
        n_r = fb.bit_length() - 1
        if n_r <= 0:
            break
        if 2 * (d + stride) > n_r:
            flush()
            n_r = fb.bit_length() - 1
            if n_r > 0 and 2 * (d + stride) > n_r:
                if stride > 1 and n_r % stride:
                    # degree-multiple hint contradicted; finish generically
                    out.extend(_ddf(fb, 1, None))
                else:
                    out.append((fb, n_r))
                fb = 1
                break
            continue
        if part_degree_cap is not None and d + stride > part_degree_cap:
            # every factor degree is <= cap, so nothing should remain here;
            # if something does, the hint was wrong: finish generically
            flush()
            if fb.bit_length() > 1:
                out.extend(_ddf(fb, 1, None))
                fb = 1
            break
        for _ in range(stride):
            h = red.sqmod(h)
        d += stride
        pending.append((d, h))
        if len(pending) >= 8:
            flush()
            if fb.bit_length() > 1:
                h = red.reduce(h)
    flush()
    return out


class _SplitRng:
    """Seeded randomness for equal-degree splitting with a deterministic reseed path."""

    def __init__(self, seed: int):
        self.seed = seed
        self.bumps = 0
        self.rng = random.Random(seed)

    def draw(self, nbits: int) -> int:
        return self.rng.getrandbits(nbits)

    def reseed(self) -> None:
        self.bumps += 1
        self.rng = random.Random(self.seed + self.bumps)


def _edf(prod: int, d: int, rng: _SplitRng) -> list[int]:
    """Split a product of distinct degree-d irreducibles into its factors."""
    n = prod.bit_length() - 1
    if n == d:
        return [prod]
    red = _k.Reducer(prod)
    while True:
        for _ in range(_SPLIT_RETRY_CAP):
            u = rng.draw(n)
            if u == 0:
                continue
            # trace map: u + u^2 + ... + u^(2^(d-1)); lands in GF(2) mod each
            # factor, so its gcd with prod keeps exactly the trace-0 factors
            t = u
            acc = u
            for _ in range(d - 1):
                t = red.sqmod(t)
                acc ^= t
            g = _k.gcd_(acc, prod)
            if 0 < g.bit_length() - 1 < n:
                other = _k.exact_div(prod, g)
                return _edf(g, d, rng) + _edf(other, d, rng)
        rng.reseed()


def _factor_bits(
    fb: int,
    seed: int,
    stride: int = 1,
    part_degree_cap: int | None = None,
) -> list[tuple[int, int]]:
    if fb == 0:
        raise FactorizationError("cannot factor the zero polynomial")
    rng = _SplitRng(seed)
    pairs: list[tuple[int, int]] = []
    for part, mult in _sqf_decompose(fb):
        for prod, d in _ddf(part, stride, part_degree_cap):
            for g in _edf(prod, d, rng):
                pairs.append((g, mult))
    pairs.sort(key=lambda pm: pm[0])
    return pairs


def factor(f: Gf2Poly, seed: int = DEFAULT_SEED) -> Factorization:
    """Complete factorization of a nonzero polynomial; output independent of seed."""
    if not f:
        raise FactorizationError("cannot factor the zero polynomial")
    pairs = _factor_bits(f.bits, seed)
    return Factorization(f, tuple((Gf2Poly(p), m) for p, m in pairs))


def omega(f: Gf2Poly) -> int:
    """Number of distinct irreducible factors."""
    if not f:
        raise ValueError("omega is undefined for the zero polynomial")
    return factor(f).omega


def is_squarefree(f: Gf2Poly) -> bool:
    """True iff f has no repeated factor, via gcd(f, f')."""
    if not f:
        raise ValueError("squarefreeness is undefined for the zero polynomial")
    return _k.gcd_(f.bits, _k.derivative_(f.bits)) == 1


def _sigma_of_power(pb: int, m: int) -> int:
    """1 + P + ... + P^m as (P^(m+1) + 1) / (P + 1), exact in characteristic 2."""
    pw = pb
    e = m
    acc = 1
    while e:
        if e & 1:
            acc = _k.mul(acc, pw)
        e >>= 1
        if e:
            pw = _k.square(pw)
    acc = _k.mul(acc, pb)  # P^(m+1)
    q, r = _k.divmod_(acc ^ 1, pb ^ 1)
    if r:
        raise ArithmeticError("internal: geometric series division left a remainder")
    return q


def sigma(f: Gf2Poly, seed: int = DEFAULT_SEED) -> Gf2Poly:
    """Sum of all monic divisors, multiplicative over the factorization."""
    if not f:
        raise ValueError("sigma is undefined for the zero polynomial")
    acc = 1
    for p, m in factor(f, seed):
        acc = _k.mul(acc, _sigma_of_power(p.bits, m))
    return Gf2Poly(acc)
