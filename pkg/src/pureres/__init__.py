"""Exact-arithmetic constructions of equivariant pure free resolutions:
Betti tables of the Schur-functor and determinantal complexes, their
Z/2-graded generalizations, Bott cohomology on projective space, and
finite exactness certificates for small instances."""

from .partitions import (
    complement_in_rectangle,
    conjugate,
    contains,
    dim_gl,
    dim_skew,
    dim_super,
    is_horizontal_strip,
    pieri_expand,
)
from .resolutions import (
    alpha,
    base_weight,
    betti_F,
    betti_F_super,
    betti_H,
    betti_H_super,
    check_herzog_kuhl,
    degrees,
    det_setup,
    diffs,
    duality_check,
    gamma,
    herzog_kuhl_primitive,
    hilbert_M_euler,
    hilbert_M_strips,
    module_profile,
    multiple_of_primitive,
    super_degree_data,
)
from .bott import (
    bott_cohomology,
    det_bott_scan,
    line_bundle_oracle,
    pushforward_profile,
    scan_ranks,
)
from .exactness import (
    differential_slice,
    equivariance_spotcheck,
    realize_schur,
    verify_dsquared,
    verify_exactness,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
