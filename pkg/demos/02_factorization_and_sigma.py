"""Factorization over GF(2) and the divisor-sum function sigma.

sigma(A) is the sum of all monic divisors of A; it is multiplicative, with
sigma(P^m) = 1 + P + ... + P^m on prime powers.
"""

from gf2sigma import factor, gcd, is_irreducible, parse, sigma

for text in ("x^3+1", "x^6+x^3+x^2+x+1", "x^4+x^2", "x^10+x^9+x^5+x+1"):
    f = parse(text)
    fact = factor(f)
    pretty = " * ".join(
        f"({p})" + (f"^{m}" if m > 1 else "") for p, m in fact
    )
    print(f"{text}  =  {pretty}")

print()
f = parse("x^2")
print("sigma(x^2) =", sigma(f), " (1 + x + x^2)")

a, b = parse("x^3+x+1"), parse("x^2+x+1")
assert gcd(a, b).degree == 0
print("multiplicativity:", sigma(a * b) == sigma(a) * sigma(b))

m = parse("x^3+x+1")
print("sigma(M^2) for M = x^3+x+1:", sigma(m.square()))
print("  ... which factors as", [(str(p), k) for p, k in factor(sigma(m.square()))])
print("is x^4+x^3+1 irreducible?", is_irreducible(parse("x^4+x^3+1")))
