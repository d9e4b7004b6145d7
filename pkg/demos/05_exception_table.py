"""Building the exception-set count table.

Each row counts, for one prime p, the Mersenne primes of degree 5..d whose
chain quantities satisfy one of the four exception relations.  The
conditions are restrictive, so the counts stay tiny even over hundreds of
candidates.  (The full reference-scale runs live in the acceptance suite;
this demo keeps d small so it finishes in seconds.)
"""

from gf2sigma import classify_records, render_table, table

rows = table([5, 7, 11, 13], 40, parallelism=2)
print(render_table(rows, "text"))
print()
print(render_table(rows, "markdown"))

print("\nthe p=5 members behind lambda1 = 4:")
for rec in classify_records(5, 40, parallelism=2):
    if rec.in_sigma:
        m = rec.analysis.mersenne
        print(f"  (a={m.a}, b={m.b})  c={rec.analysis.degree_gap} "
              f"m={rec.analysis.least_odd_top}  flags={rec.flags}")
