"""
The comonad K and its coalgebras.
"""

from .comonad_k import (
    Sequence,
    K_levels,
    K_on_morphism,
    K_counit,
    K_comult,
    check_comonad_laws,
    lift_K,
    check_lifted_comonad,
    CoalgebraData,
    zeta_fns,
    tsimp_to_coalgebra,
    coalgebra_to_tsimp,
    check_coalgebra,
    check_roundtrip
)
