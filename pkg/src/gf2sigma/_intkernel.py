"""Arithmetic kernels for GF(2)[x] on plain int bitmasks.

A polynomial is a nonnegative int: bit i is the coefficient of x^i, so the
zero polynomial is 0 and the storage is canonical by construction.  This
module is internal; :mod:`gf2sigma.gf2poly` wraps it in the public type.

Multiplication of large operands goes through ordinary integer
multiplication (GMP via gmpy2) after spreading each coefficient into its
own 16- or 32-bit lane, so cross-lane carries cannot occur: the lane value
is the number of overlapping terms, which is bounded by the bit length of
the smaller operand.  Squaring is a byte-table bit spread.  Repeated
reduction by a fixed modulus uses a precomputed quotient of x^(2n), which
yields the exact Euclidean quotient for dividends of degree < 2n.
"""

from __future__ import annotations

import gmpy2
import numpy as np

X = 2  # the polynomial x

# below this many bits (smaller operand) the shift-xor loop wins
_NAIVE_MUL_BITS = 128

_MPZ_HAS_BYTES = hasattr(gmpy2.mpz(0), "to_bytes")

# byte -> 16-bit spread (bit j goes to bit 2j), little-endian pairs
_SQ_SPREAD = [
    sum(((v >> j) & 1) << (2 * j) for j in range(8)).to_bytes(2, "little")
    for v in range(256)
]


def degree(a: int) -> int:
    """Degree of the bitmask polynomial; -1 for the zero polynomial."""
    return a.bit_length() - 1


def mul(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    if min(a.bit_length(), b.bit_length()) <= _NAIVE_MUL_BITS:
        return _mul_naive(a, b)
    return _mul_spread(a, b)


def _mul_naive(a: int, b: int) -> int:
    if a.bit_length() < b.bit_length():
        a, b = b, a
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        a <<= 1
        b >>= 1
    return acc


def _spread(a: int, dtype: str) -> "gmpy2.mpz":
    raw = a.to_bytes((a.bit_length() + 7) // 8, "little")
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    data = bits.astype(dtype).tobytes()
    if _MPZ_HAS_BYTES:
        return gmpy2.mpz.from_bytes(data, "little")
    return gmpy2.mpz(int.from_bytes(data, "little"))


def _mul_spread(a: int, b: int) -> int:
    na, nb = a.bit_length(), b.bit_length()
    if min(na, nb) < 1 << 16:
        width, dtype = 2, "<u2"
    else:
        width, dtype = 4, "<u4"
    prod = _spread(a, dtype) * _spread(b, dtype)
    nblocks = na + nb - 1
    if _MPZ_HAS_BYTES:
        raw = prod.to_bytes(width * nblocks, "little")
    else:
        raw = int(prod).to_bytes(width * nblocks, "little")
    lanes = np.frombuffer(raw, dtype=dtype)
    parity = (lanes & 1).astype(np.uint8)
    return int.from_bytes(np.packbits(parity, bitorder="little").tobytes(), "little")


def square(a: int) -> int:
    if a == 0:
        return 0
    raw = a.to_bytes((a.bit_length() + 7) // 8, "little")
    return int.from_bytes(b"".join(map(_SQ_SPREAD.__getitem__, raw)), "little")


def divmod_(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    q = 0
    db = b.bit_length()
    da = a.bit_length()
    while da >= db:
        sh = da - db
        q |= 1 << sh
        a ^= b << sh
        da = a.bit_length()
    return q, a


def mod_(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    db = b.bit_length()
    da = a.bit_length()
    while da >= db:
        a ^= b << (da - db)
        da = a.bit_length()
    return a


def exact_div(a: int, b: int) -> int:
    q, r = divmod_(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def gcd_(a: int, b: int) -> int:
    while b:
        db = b.bit_length()
        da = a.bit_length()
        while da >= db:
            a ^= b << (da - db)
            da = a.bit_length()
        a, b = b, a
    return a


def is_square_(a: int) -> bool:
    if a == 0:
        return True
    nb = (a.bit_length() + 7) // 8
    return a & int.from_bytes(b"\xaa" * nb, "little") == 0


def sqrt_(a: int) -> int:
    if a == 0:
        return 0
    raw = a.to_bytes((a.bit_length() + 7) // 8, "little")
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    return int.from_bytes(np.packbits(bits[::2], bitorder="little").tobytes(), "little")


def derivative_(a: int) -> int:
    if a == 0:
        return 0
    nb = (a.bit_length() + 7) // 8
    return (a >> 1) & int.from_bytes(b"\x55" * nb, "little")


def subst_x_plus_one(a: int) -> int:
    """Bitmask of S(x+1), by splitting at powers of two: (x+1)^(2^j) = x^(2^j)+1."""
    n = a.bit_length()
    if n <= 1:
        return a
    t = 1 << ((n - 1).bit_length() - 1)  # 1 <= t <= degree
    hi = subst_x_plus_one(a >> t)
    lo = subst_x_plus_one(a & ((1 << t) - 1))
    return (hi << t) ^ hi ^ lo


def _reverse(a: int, width: int) -> int:
    if width <= 0:
        return 0
    return int(format(a, "0{}b".format(width))[::-1], 2)


def _quotient_x2n(m: int, n: int) -> int:
    """x^(2n) // m for deg(m) = n >= 1, via a Newton inverse of the reversed modulus."""
    rm = _reverse(m, n + 1)  # constant term 1 since m is monic
    target = n + 1
    g = 1
    prec = 1
    while prec < target:
        prec = min(2 * prec, target)
        mask = (1 << prec) - 1
        err = (mul(rm & mask, g) ^ 1) & mask
        g ^= mul(g, err) & mask
    return _reverse(g, n + 1)


class Reducer:
    """Repeated reduction modulo a fixed polynomial of degree n >= 1.

    ``reduce`` is exact for any dividend of degree <= 2n-1 (one
    multiplication by the precomputed quotient of x^(2n) recovers the full
    Euclidean quotient); larger dividends fall back to long division.
    """

    __slots__ = ("modulus", "n", "_q2n")

    def __init__(self, modulus: int):
        if modulus.bit_length() < 2:
            raise ValueError("modulus must have degree >= 1")
        self.modulus = modulus
        self.n = modulus.bit_length() - 1
        self._q2n = _quotient_x2n(modulus, self.n)

    def reduce(self, a: int) -> int:
        n = self.n
        hi = a >> n
        if hi == 0:
            return a
        if hi.bit_length() > n:
            return mod_(a, self.modulus)
        q = mul(hi, self._q2n) >> n
        return a ^ mul(q, self.modulus)

    def sqmod(self, a: int) -> int:
        return self.reduce(square(a))

    def mulmod(self, a: int, b: int) -> int:
        return self.reduce(mul(a, b))


def powmod_x2k(f: int, k: int) -> int:
    """x^(2^k) mod f for deg(f) >= 1."""
    red = Reducer(f)
    h = red.reduce(X)
    for _ in range(k):
        h = red.sqmod(h)
    return h
