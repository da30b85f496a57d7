"""Walk through the equivariant pure Betti tables for a degree sequence.

For a strictly increasing d = (d_0 < ... < d_m) there are two explicit
GL-equivariant complexes resolving a module purely in those degrees: one
over a polynomial ring in m variables (the F construction) and one over
the coordinate ring of a space of dim F x dim G matrices (the H
construction).  Both land on the unique Herzog-Kuhl ray of Betti vectors,
each at its own integer multiple of the primitive point.
"""

from pureres import (
    betti_F,
    betti_H,
    check_herzog_kuhl,
    herzog_kuhl_primitive,
    multiple_of_primitive,
)
from pureres.render import betti_pretty

for d in ((0, 3, 4, 7), (0, 4, 9, 13), (0, 1, 4, 6)):
    print("=" * 60)
    print(f"degree sequence d = {d}")
    prim = herzog_kuhl_primitive(d)
    print(f"primitive Betti vector on the Herzog-Kuhl ray: {prim}")

    f = betti_F(d)
    h = betti_H(d)
    print(f"\nF construction (polynomial ring, {len(d) - 1} variables)")
    print(betti_pretty(f))
    print(f"H construction (dim F = {h.params['dim_f']}, dim G = {h.params['dim_g']})")
    print(betti_pretty(h))

    print(f"F ranks = {multiple_of_primitive(f)} x primitive")
    print(f"H ranks = {multiple_of_primitive(h)} x primitive")
    m = len(d) - 1
    assert check_herzog_kuhl(f, m) and check_herzog_kuhl(h, h.params["s"])
    print("Herzog-Kuhl equations: verified exactly\n")
