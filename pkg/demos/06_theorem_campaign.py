"""Machine verification campaign over a small degree window.

For every Mersenne prime M outside the exception sets, sigma(M^(p-1)) must
be divisible by an irreducible that is NOT of Mersenne form; the campaign
produces a verified witness per instance (divides, irreducible,
unrecognized form) and cross-checks the structural lemma suite.
"""

from gf2sigma import EXCLUDED, HOLDS, run_campaign

verdicts, report = run_campaign([5, 7], 20, parallelism=2)

excluded = [v for v in verdicts if v.status == EXCLUDED]
holds = [v for v in verdicts if v.status == HOLDS]
print(f"{len(verdicts)} instances: {len(holds)} holds, {len(excluded)} excluded")

print("\nexcluded (exception-set members):")
for v in excluded:
    print(f"  (a={v.mersenne.a}, b={v.mersenne.b}) at p={v.p}")

print("\nsample witnesses:")
for v in holds[:5]:
    print(f"  (a={v.mersenne.a}, b={v.mersenne.b}) p={v.p}: witness {v.witness}")

print("\nlemma suite:")
for line in report.lines():
    print(" ", line)
print("\nall lemma checks pass:", report.all_pass)
