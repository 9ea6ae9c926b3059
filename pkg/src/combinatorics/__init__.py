"""
Simplex category combinatorics.
"""

from .simplex import (
    SimplexMap,
    simplex_map,
    identity,
    face,
    degeneracy,
    generator,
    compose,
    is_top_preserving,
    is_injective,
    is_surjective,
    factorize,
    inclusion,
    chi,
    apply_R,
    apply_UR,
    top_extension,
    enumerate_hom,
    mono_epi,
    r_bijection_image
)
