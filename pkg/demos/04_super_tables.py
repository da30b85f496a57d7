"""Z/2-graded (super) analogues: infinite pure resolutions.

Over a graded-commutative polynomial ring with m even and n odd
variables the pure constructions continue forever.  The generator
degrees follow a simple rule -- after the nonzero parts of the base
weight run out, consecutive degrees differ by 1, so the resolution
becomes linear.  Truncated tables are exact; ranks are dimensions of
super Schur modules.
"""

from pureres import betti_F_super, dim_super, super_degree_data

lam, e1, m, n = (2, 1), 2, 2, 1
sd = super_degree_data(lam, e1)
print(f"base weight {lam}, first jump e_1 = {e1}, ({m}|{n}) variables")
print(f"degree sequence starts {sd.degree_prefix(8)} ...")
print(f"differences {tuple(sd.e(i) for i in range(1, 9))} -> linear tail")

t = betti_F_super(lam, e1, m, n, N=10)
print("\ntruncated F-type table:")
for row in t.rows:
    print(f"  i = {row.i:>2}: twist {row.twist:>2}, weight {row.weight}, "
          f"rank {row.rank}")
print(f"(truncated at index {t.truncated_at}; the true table is infinite)")

print("\nsanity: each rank is the super Schur dimension of its weight")
for row in t.rows[:5]:
    assert row.rank == dim_super(sd.alpha(row.i), m, n)
print("verified for the first five terms")
