"""Walking the divisor-sum chain of one (M, p) pair.

For M = 1 + x(x+1)^2 and p = 3 (so h = 1) everything is small enough to
print: sigma(M^2) factors into two Mersenne primes, so applying sigma a
second time collapses to x^u (x+1)^v with even exponent sums.
"""

import json

from gf2sigma import analyze, build, classify

M = build(1, 2)
an = analyze(M, 3)

print("M            =", M.poly)
print("sigma(M^2)   =", an.sigma_even)
print("factors      =", [(str(p), m) for p, m in an.factorization])
print("all Mersenne =", an.all_mersenne, " exponent sums:", an.sum_a, an.sum_b)
print("sigma^2      =", an.double_sigma, " (= x^4 (x+1)^2, a square)")
print("deviation    =", an.deviation)
print("residual     =", an.residual, " square:", an.residual.is_square())
print("degree gap c =", an.degree_gap)
print("least odd/even top marks m, e =", an.least_odd_top, an.least_even_top)

rec = classify(an)
print("\nmembership flags (set 1..4):", rec.flags, " case tag:", rec.case_tag)
print("\nwire record:")
print(json.dumps(an.to_json_dict(), indent=2))

# a deg >= 5 instance at p = 5: the chain is bigger, the record identical in shape
an5 = analyze(build(2, 3), 5)
print("\n(2,3) at p=5: c =", an5.degree_gap, " m =", an5.least_odd_top,
      " in set 1:", classify(an5).in_sigma1)
