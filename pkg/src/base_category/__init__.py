"""
The computable base category: element values, carriers, maps and finite limits.
"""

from .elements import Tag, ListOf, NOTHING, canonical_key, sort_canonical, render, to_json, flatten_left
from .sets import (
    SetObj,
    FiniteSet,
    FreeCarrier,
    ProductSet,
    Morph,
    finite_set,
    materialize,
    product,
    require_finite,
    evaluate,
    table,
    identity,
    compose,
    projection,
    pairing,
    constant,
    named,
    fiber_of,
    same_carrier,
    agree,
    as_table,
    table_key,
    is_bijection
)
from .limits import (
    Pullback,
    pullback,
    product_with_projections,
    equalizer,
    Diagram,
    finite_limit,
    HexagonLimit,
    limit_hexagon,
    hexagon_diagram,
    is_pullback_square
)
