"""
Copowers A · Y of a T-simplicial object by a finite simplicial set.
"""

import logging

from ..base_category.sets import Morph, product
from ..monads.monad_engine import require_finiteness
from ..tcategories.simplicial import TSimplicialObject

logger = logging.getLogger(__name__)


def copower(A, Y, name=None):
    """
    Z_n = A_n × Y_n, one copy of Y_n for each a in A_n.

    Inner faces and degeneracies act on both coordinates. The last face
    sends (a, y) to T(y' -> (d_n a, y'))(d_n y).

    Args:
        A: FiniteSimplicialSet
        Y: TSimplicialObject

    Returns:
        TSimplicialObject truncated at min(A.depth, Y.depth)
    """
    T = require_finiteness(Y.monad, "copower")
    depth = min(A.depth, Y.depth)
    name = name or f"{A.name}.{Y.name}"
    levels = tuple(product(A.level(n), Y.level(n), name=f"{name}_{n}") for n in range(depth + 1))
    faces, degeneracies = {}, {}
    for n in range(1, depth + 1):
        for i in range(n):
            d_a, d_y = A.face(n, i), Y.face(n, i)
            faces[(n, i)] = Morph(levels[n], levels[n - 1], lambda e, d_a=d_a, d_y=d_y: (d_a(e[0]), d_y(e[1])), f"d{i}")
        d_a, last = A.face(n, n), Y.last_face(n)
        faces[(n, n)] = Morph(
            levels[n], T.obj(levels[n - 1]),
            lambda e, d_a=d_a, last=last: T.fmap(lambda y, a=d_a(e[0]): (a, y), last(e[1])),
            f"d{n}",
        )
    for n in range(depth):
        for i in range(n + 1):
            s_a, s_y = A.degeneracy(n, i), Y.degeneracy(n, i)
            degeneracies[(n, i)] = Morph(
                levels[n], levels[n + 1], lambda e, s_a=s_a, s_y=s_y: (s_a(e[0]), s_y(e[1])), f"s{i}"
            )
    logger.info("copower %s: sizes %s", name, [len(level) for level in levels])
    return TSimplicialObject(T, levels, faces, degeneracies, name)
