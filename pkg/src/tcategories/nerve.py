"""
The nerve of a T-category presentation.

This module handles:
- Building levels as iterated pullbacks X_{n+1} = X_n ×_{TX_{n-1}} TX_n
- Inner faces from the composition and degeneracies from the unit, each
  solved into the pullback (partial presentations give partial nerves)
- Extending a T-functor (f0, f1) to a morphism of nerves
- Recovering a presentation from a Segal T-simplicial object
"""

import logging

from ..base_category.limits import pullback
from ..base_category.sets import Morph
from .simplicial import TSimpMorphism, TSimplicialObject
from .tcat_core import TCatData, TGraph

logger = logging.getLogger(__name__)


def _inner_face(T, X, n, i, level, target):
    """d_i: X_{n+1} -> X_n for 1 <= i <= n, n >= 2."""
    if i < n:
        outer = X.face(n, i - 1)
        T_inner = X.lifted(X.face(n, i))
        return Morph(level, target, lambda e: (outer(e[0]), T_inner(e[1])), f"d{i}")
    outer = X.face(n, n - 1)
    T_last = X.lifted(X.last_face(n))
    return Morph(level, target, lambda e: (outer(e[0]), T.join(T_last(e[1]))), f"d{n}")


def _degeneracy(T, X, n, i, level, target):
    """s_i: X_n -> X_{n+1} for n >= 1, read off from the lower degeneracies."""
    first, last = X.face(n, 0), X.last_face(n)
    if i == 0:
        T_s = X.lifted(X.degeneracy(n - 1, 0))
        return Morph(level, target, lambda x: (x, T_s(last(x))), "s0")
    if i < n:
        s_low = X.degeneracy(n - 1, i - 1)
        T_s = X.lifted(X.degeneracy(n - 1, i))
        return Morph(level, target, lambda x: (s_low(first(x)), T_s(last(x))), f"s{i}")
    s_low = X.degeneracy(n - 1, n - 1)
    return Morph(level, target, lambda x: (s_low(first(x)), T.pure(x)), f"s{n}")


def nerve(data, depth):
    """
    The depth-truncated nerve of a (possibly partial) presentation.

    Inner faces exist only when the composition is given, degeneracies only
    when the unit is given.

    Args:
        data: TCatData
        depth: Highest level to build

    Returns:
        TSimplicialObject
    """
    T = data.monad
    g = data.graph
    levels = [g.X0, g.X1]
    faces = {(1, 0): g.d0, (1, 1): g.d1}
    degeneracies = {}
    if data.unit is not None:
        degeneracies[(0, 0)] = data.unit
    X = TSimplicialObject(T, tuple(levels), faces, degeneracies, data.name)

    for n in range(1, depth):
        # Step 1: the next level is the pullback of the last face against T d0
        if n == 1:
            P = data.X2()
        else:
            P = pullback(faces[(n, n)], X.lifted(faces[(n, 0)]), f"{data.name}_{n + 1}")
        level = P.carrier
        levels.append(level)
        faces[(n + 1, 0)] = Morph(level, levels[n], P.p1, "d0", "projection")
        faces[(n + 1, n + 1)] = Morph(level, T.obj(levels[n]), P.p2, f"d{n + 1}", "projection")

        # Step 2: inner faces, solved into X_n
        if data.comp is not None:
            if n == 1:
                faces[(2, 1)] = Morph(level, levels[1], data.comp, "d1")
            else:
                for i in range(1, n + 1):
                    faces[(n + 1, i)] = _inner_face(T, X, n, i, level, levels[n])

        # Step 3: degeneracies X_n -> X_{n+1}
        if data.unit is not None:
            for i in range(n + 1):
                degeneracies[(n, i)] = _degeneracy(T, X, n, i, levels[n], level)

        X = TSimplicialObject(T, tuple(levels), faces, degeneracies, data.name, X._cache)
        logger.debug("%s: level %d has %d elements", data.name, n + 1, len(level))

    X = X.truncate(depth)
    logger.info("nerve of %s to depth %d: sizes %s", data.name, depth, X.sizes())
    return X


def extend_tfunctor(f0, f1, X, Y):
    """
    The morphism of T-simplicial objects induced by (f0, f1).

    f_{n+1}(x) is the element of Y_{n+1} over (f_n(d_0 x), T f_n(d_{n+1} x)),
    which exists and is unique when Y satisfies the Segal condition.

    Args:
        f0, f1: Components in degrees 0 and 1
        X, Y: TSimplicialObjects

    Returns:
        TSimpMorphism
    """
    components = [f0, f1]
    for n in range(1, min(X.depth, Y.depth)):
        previous = components[n]
        T_previous = Y.lifted(previous)
        first, last = X.face(n + 1, 0), X.last_face(n + 1)
        components.append(Morph(
            X.level(n + 1), Y.level(n + 1),
            lambda x, n=n, previous=previous, T_previous=T_previous, first=first, last=last:
                Y.segal_lift(n + 1, previous(first(x)), T_previous(last(x))),
            f"f{n + 1}",
        ))
    return TSimpMorphism(X, Y, tuple(components))


def one_truncation(X):
    """
    The presentation (X0, X1, d0, d1, comp, unit) of a Segal T-simplicial object.

    comp sends a pair (x, w) of the canonical pullback to d_1 of the element
    of X_2 above it.
    """
    T = X.monad
    graph = TGraph(T, X.level(0), X.level(1), X.face(1, 0), X.last_face(1), X.name)
    data = TCatData(graph)
    P = data.X2()
    inner = X.face(2, 1)
    comp = Morph(P.carrier, X.level(1), lambda e: inner(X.segal_lift(2, e[0], e[1])), "comp")
    return TCatData(graph, comp, X.degeneracy(0, 0), data._derived)
