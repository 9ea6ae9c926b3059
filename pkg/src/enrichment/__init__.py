"""
Hom simplicial sets and 2-cells of T-categories.
"""

from .hom import (
    HomSimplex,
    from_morphism,
    to_morphism,
    hom_face,
    hom_degeneracy,
    identity_simplex,
    validate_hom_simplex,
    is_valid,
    enumerate_hom_simplices,
    enumerate_tsimp_morphisms,
    compose_one_simplices,
    two_simplex_index,
    compose_by_search,
    hom_level,
    hom_segal_report,
    hom_segal_check,
    check_composition_laws,
    check_fully_faithful
)
from .two_cells import (
    TNatTransformation,
    HatTwoCell,
    alpha_prime,
    alpha_double_prime,
    validate_two_cell,
    hat_prime,
    hat_double_prime,
    validate_hat_cell,
    hat_to_alpha,
    alpha_to_hat,
    enumerate_two_cells,
    enumerate_hat_cells,
    identity_two_cell,
    vertical_compose,
    whisker,
    check_interchange,
    hat_to_hom,
    hom_to_hat
)
