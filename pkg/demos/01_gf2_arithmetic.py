"""Tour of the GF(2)[x] arithmetic layer.

Polynomials are immutable bit-vectors: bit i of the backing int is the
coefficient of x^i.  Addition is XOR, so every element is its own negative.
"""

from gf2sigma import divrem, gcd, parse, powmod_frobenius

s = parse("x^3+x+1")
t = parse("x^2+x+1")
print("s       =", s, " (hex", s.to_hex() + ")")
print("t       =", t)
print("s + t   =", s + t)
print("s * t   =", s * t)
print("s^2     =", s.square(), " (all exponents double in characteristic 2)")

q, r = divrem(parse("x^3+1"), parse("x+1"))
print("x^3+1   = (x+1) *", q, "+", r)
print("gcd(x^2+1, x+1) =", gcd(parse("x^2+1"), parse("x+1")))

# top_coeff(l) reads the coefficient of x^(deg - l): the l-th coefficient
# counted down from the leading term
print("\ntop view of s:", [s.top_coeff(l) for l in range(0, s.degree + 1)])

# substituting x -> x+1 is a ring automorphism and an involution
sbar = s.subst_x_plus_1()
print("s(x+1)  =", sbar, " and back:", sbar.subst_x_plus_1())

# squares are exactly the polynomials supported on even exponents
sq = s.square()
print(sq, "is a square:", sq.is_square(), " sqrt:", sq.sqrt())

# x^(2^k) mod f drives irreducibility testing and factorization
print("x^(2^2) mod x^2+x+1 =", powmod_frobenius(parse("x^2+x+1"), 2))
