"""Dense polynomials over GF(2).

A :class:`Gf2Poly` wraps an int bitmask (bit i = coefficient of x^i), which
makes the representation canonical: equality, hashing and ordering are
bitwise, the zero polynomial is the empty bit-vector, and there is never a
denormalized value to repair.  Values are immutable and safe to share.

Two text forms round-trip through :func:`parse` / ``str()``:

* sum form, descending exponents: ``"x^5+x^2+1"`` (``"0"`` for zero);
* hex form: ``"0x25"``, the coefficient bitmask in hexadecimal.

``top_coeff(S, l)`` is the coefficient of ``x^(deg S - l)``, i.e. the
l-th coefficient counted down from the leading term; indices beyond the
degree read as zero so windowed identities compose without side cases.
"""

from __future__ import annotations

import re

from . import _intkernel as _k

__all__ = [
    "Gf2ParseError",
    "Gf2Poly",
    "ZERO",
    "ONE",
    "X",
    "parse",
    "add",
    "mul",
    "square",
    "divrem",
    "gcd",
    "derivative",
    "top_coeff",
    "subst_x_plus_1",
    "is_square",
    "sqrt",
    "powmod_frobenius",
]


class Gf2ParseError(ValueError):
    """Malformed polynomial text; ``offset`` is the byte position of the error."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class Gf2Poly:
    """Immutable polynomial over GF(2), stored as an int bitmask."""

    __slots__ = ("_bits",)

    def __init__(self, bits: int = 0):
        if not isinstance(bits, int) or bits < 0:
            raise ValueError("bitmask must be a nonnegative int")
        object.__setattr__(self, "_bits", bits)

    @property
    def bits(self) -> int:
        return self._bits

    @property
    def degree(self) -> int:
        """Degree; -1 marks the zero polynomial's distinguished no-degree state."""
        return self._bits.bit_length() - 1

    def coeff(self, i: int) -> int:
        """Coefficient of x^i (0 for i beyond the degree)."""
        if i < 0:
            raise ValueError("exponent must be >= 0")
        return (self._bits >> i) & 1

    def top_coeff(self, l: int) -> int:
        """Coefficient of x^(degree - l); zero for l beyond the degree."""
        if self._bits == 0:
            raise ValueError("top_coeff is undefined for the zero polynomial")
        if l < 0:
            raise ValueError("index must be >= 0")
        d = self.degree
        if l > d:
            return 0
        return (self._bits >> (d - l)) & 1

    # -- ring operations ------------------------------------------------

    def __add__(self, other: "Gf2Poly") -> "Gf2Poly":
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return Gf2Poly(self._bits ^ other._bits)

    __sub__ = __add__

    def __mul__(self, other: "Gf2Poly") -> "Gf2Poly":
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return Gf2Poly(_k.mul(self._bits, other._bits))

    def __pow__(self, n: int) -> "Gf2Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = 1
        base = self._bits
        while n:
            if n & 1:
                result = _k.mul(result, base)
            n >>= 1
            if n:
                base = _k.square(base)
        return Gf2Poly(result)

    def __divmod__(self, other: "Gf2Poly") -> tuple["Gf2Poly", "Gf2Poly"]:
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        q, r = _k.divmod_(self._bits, other._bits)
        return Gf2Poly(q), Gf2Poly(r)

    def __floordiv__(self, other: "Gf2Poly") -> "Gf2Poly":
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return Gf2Poly(_k.divmod_(self._bits, other._bits)[0])

    def __mod__(self, other: "Gf2Poly") -> "Gf2Poly":
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return Gf2Poly(_k.mod_(self._bits, other._bits))

    def square(self) -> "Gf2Poly":
        return Gf2Poly(_k.square(self._bits))

    def is_square(self) -> bool:
        """True iff every odd-exponent coefficient is zero (char-2 squares)."""
        return _k.is_square_(self._bits)

    def sqrt(self) -> "Gf2Poly":
        if not _k.is_square_(self._bits):
            raise ValueError("polynomial is not a square")
        return Gf2Poly(_k.sqrt_(self._bits))

    def derivative(self) -> "Gf2Poly":
        return Gf2Poly(_k.derivative_(self._bits))

    def subst_x_plus_1(self) -> "Gf2Poly":
        """The polynomial S(x+1); a ring automorphism and an involution."""
        return Gf2Poly(_k.subst_x_plus_one(self._bits))

    # -- comparisons, hashing, rendering --------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return self._bits == other._bits

    def __lt__(self, other: "Gf2Poly") -> bool:
        # bitmask order == (degree, then mask) lexicographic order
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return self._bits < other._bits

    def __le__(self, other: "Gf2Poly") -> bool:
        if not isinstance(other, Gf2Poly):
            return NotImplemented
        return self._bits <= other._bits

    def __hash__(self) -> int:
        return hash((Gf2Poly, self._bits))

    def __bool__(self) -> bool:
        return bool(self._bits)

    def __str__(self) -> str:
        b = self._bits
        if b == 0:
            return "0"
        terms = []
        for i in range(b.bit_length() - 1, -1, -1):
            if (b >> i) & 1:
                terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
        return "+".join(terms)

    def __repr__(self) -> str:
        return f"Gf2Poly({str(self)!r})"

    def to_hex(self) -> str:
        return format(self._bits, "#x")

    def __reduce__(self):
        return (Gf2Poly, (self._bits,))


ZERO = Gf2Poly(0)
ONE = Gf2Poly(1)
X = Gf2Poly(2)

_HEX_RE = re.compile(r"0x[0-9a-fA-F]+")
_EXP_RE = re.compile(r"[0-9]+")


def parse(text: str) -> Gf2Poly:
    """Parse sum form (``term ('+' term)*``, terms 0, 1, x, x^k for k >= 2) or hex form."""
    if not isinstance(text, str):
        raise TypeError("polynomial text must be a str")
    n = len(text)
    i = 0
    while i < n and text[i].isspace():
        i += 1
    if i == n:
        raise Gf2ParseError("empty polynomial text", i)
    if text.startswith("0x", i) or text.startswith("0X", i):
        m = _HEX_RE.match(text, i)
        if m is None:
            raise Gf2ParseError("malformed hex polynomial", i + 2)
        j = m.end()
        while j < n and text[j].isspace():
            j += 1
        if j != n:
            raise Gf2ParseError("trailing text after hex polynomial", j)
        return Gf2Poly(int(m.group(0), 16))
    bits = 0
    while True:
        if i >= n:
            raise Gf2ParseError("expected a term", i)
        ch = text[i]
        if ch == "0":
            i += 1
        elif ch == "1":
            bits ^= 1
            i += 1
        elif ch == "x":
            i += 1
            if i < n and text[i] == "^":
                i += 1
                m = _EXP_RE.match(text, i)
                if m is None:
                    raise Gf2ParseError("expected a decimal exponent", i)
                k = int(m.group(0))
                if k < 2:
                    raise Gf2ParseError("x^k form requires k >= 2", i)
                bits ^= 1 << k
                i = m.end()
            else:
                bits ^= 2
        else:
            raise Gf2ParseError("expected a term", i)
        while i < n and text[i].isspace():
            i += 1
        if i == n:
            return Gf2Poly(bits)
        if text[i] != "+":
            raise Gf2ParseError("expected '+'", i)
        i += 1
        while i < n and text[i].isspace():
            i += 1


def add(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    return a + b


def mul(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    return a * b


def square(a: Gf2Poly) -> Gf2Poly:
    return a.square()


def divrem(a: Gf2Poly, d: Gf2Poly) -> tuple[Gf2Poly, Gf2Poly]:
    """Quotient and remainder with deg(remainder) < deg(d); d must be nonzero."""
    return divmod(a, d)


def gcd(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    """Greatest common divisor; gcd(0, 0) = 0.  Monic is automatic over GF(2)."""
    return Gf2Poly(_k.gcd_(a.bits, b.bits))


def derivative(a: Gf2Poly) -> Gf2Poly:
    return a.derivative()


def top_coeff(a: Gf2Poly, l: int) -> int:
    return a.top_coeff(l)


def subst_x_plus_1(a: Gf2Poly) -> Gf2Poly:
    return a.subst_x_plus_1()


def is_square(a: Gf2Poly) -> bool:
    return a.is_square()


def sqrt(a: Gf2Poly) -> Gf2Poly:
    return a.sqrt()


def powmod_frobenius(f: Gf2Poly, k: int) -> Gf2Poly:
    """x^(2^k) mod f, by k successive squarings; f must have degree >= 1."""
    if f.degree < 1:
        raise ValueError("modulus must have degree >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    return Gf2Poly(_k.powmod_x2k(f.bits, k))
