"""The finite-length module behind the F construction.

The complex F(d) resolves a finite-length module M(d).  Its Hilbert
function can be computed two independent ways -- as an alternating Euler
sum over the free terms, or by counting the Pieri strips that survive in
each degree -- and the two always agree.  When the difference sequence e
is palindromic the complex is self-dual: palindromic ranks, and the
generator weights of opposite terms are complementary in a rectangle.
"""

from pureres import (
    degrees,
    diffs,
    duality_check,
    hilbert_M_euler,
    hilbert_M_strips,
    module_profile,
)
from pureres.render import young_diagram

d = (0, 3, 4, 7)
p = module_profile(d)
print(f"d = {d}, e = {diffs(d)[1:]}")
print("Hilbert function of M(d):")
for k, v in sorted(p.hf.items()):
    assert v == hilbert_M_euler(d, k) == hilbert_M_strips(d, k)
    print(f"  degree {k}: {v}")
print(f"top degree {p.top_degree}, socle weight {p.socle_weight}, "
      f"socle dimension {p.socle_dim} (= last Betti number)")
print("\nsocle weight as a Young diagram:")
print("\n".join(young_diagram(p.socle_weight)))

print("=" * 60)
for e in ((2, 3, 1, 3, 2), (1, 3, 2)):
    d = degrees((0,) + e)
    r = duality_check(d)
    print(f"e = {e}: d = {d}")
    if not r.is_symmetric:
        print("  e is not palindromic; no self-duality expected")
        continue
    print(f"  self-dual: ranks palindromic = {r.ranks_palindromic}, "
          f"weights complementary in a {r.rectangle[0]} x {r.rectangle[1]} "
          f"rectangle = {r.complements_match}")
