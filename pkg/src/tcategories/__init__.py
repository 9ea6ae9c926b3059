"""
T-categories, T-simplicial objects and nerves.
"""

from .simplicial import (
    Presheaf,
    TSimplicialObject,
    TSimpMorphism,
    check_sa_axioms,
    check_presheaf_identities,
    check_well_typed,
    summarize,
    segal_report,
    check_segal,
    check_morphism,
    check_presheaf_morphism,
    restrict,
    KleisliSimplicial,
    underlying,
    check_kleisli_identities
)
from .tcat_core import (
    AXIOMS,
    LADDER,
    TGraph,
    TCatData,
    build_X2,
    build_X3,
    induced_maps,
    check_axiom,
    check_all,
    StructureClass,
    classify,
    discrete_tcat,
    chaotic_tcat,
    algebra_violation,
    algebra_tcat,
    bar_resolution,
    check_tfunctor,
    enumerate_tfunctors,
    compose_tfunctors,
    ordinal_category,
    preorder_category
)
from .nerve import nerve, extend_tfunctor, one_truncation
from .ladder import (
    claimed,
    derived_identity_suite,
    claimed_failures,
    random_graph,
    random_composition,
    random_unit,
    random_structure,
    tagged_structure,
    ladder_structure,
    ladder_table
)
from .truncation import (
    CoskeletalStep,
    coskeletal_step,
    coskeletal_comparison,
    DegenerateStep,
    degenerate_step,
    degenerate_comparison
)
