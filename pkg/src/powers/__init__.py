"""
Weighted limits and colimits: copowers by finite simplicial sets and the
powers G⋔X and Δ[1]⋔X.
"""

from .simplicial_sets import (
    FiniteSimplicialSet,
    standard_simplex,
    horn,
    check_simplicial_identities
)
from .copower import copower
from .power_g import (
    PowerG,
    power_G,
    shift,
    cylinder_diagram,
    check_power_g,
    u_to_uhat,
    uhat_to_u,
    check_power_correspondence
)
from .delta_one import (
    DeltaOnePower,
    delta1_power,
    universal_simplex,
    check_universal_diagrams,
    check_universal_property,
    check_power_closure,
    check_hexagon_oracle
)
