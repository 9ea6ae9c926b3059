"""
T-graphs, T-category presentations and the axioms CA1-CA4.

This module handles:
- TGraph and TCatData (composition and unit as optional data)
- The derived pullbacks X2 and X3 and the maps they induce
- Elementwise checks of CA1-CA4 and the ladder classification
- The discrete, chaotic and algebra T-categories and the bar resolution
- T-functor checks and exhaustive T-functor enumeration
"""

import logging
from dataclasses import dataclass, field
from itertools import product as cartesian

import pandas as pd

from ..base_category.elements import render
from ..base_category.limits import pullback
from ..base_category.sets import FiniteSet, Morph, compose, identity, projection, require_finite, table
from ..monads.monad_engine import require_finiteness
from ..utils.config import ENUMERATION_LIMIT
from ..utils.errors import AlgebraError, EnumerationLimitError
from .simplicial import TSimplicialObject

logger = logging.getLogger(__name__)

AXIOMS = ("CA1", "CA2", "CA3", "CA4")

LADDER = (
    "T-graph",
    "reflexive T-graph",
    "T-magmoid",
    "reflexive T-magmoid",
    "unital T-magmoid",
    "T-semicategory",
    "reflexive T-semicategory",
    "T-category",
)


@dataclass(frozen=True, eq=False)
class TGraph:
    """X0, X1 with d0: X1 -> X0 (target) and d1: X1 -> T X0 (source)."""

    monad: object
    X0: object
    X1: FiniteSet
    d0: Morph
    d1: Morph
    name: str = "X"


@dataclass(frozen=True, eq=False)
class TCatData:
    """
    A T-graph with optional composition comp: X2 -> X1 and unit: X0 -> X1.

    X2 and X3 are always the canonically computed pullbacks; an element of
    X2 is a pair (x, w) with x in X1 the outer arrow and w in T X1 its inputs.
    """

    graph: TGraph
    comp: Morph | None = None
    unit: Morph | None = None
    _derived: dict = field(default_factory=dict, repr=False)

    @property
    def monad(self):
        return self.graph.monad

    @property
    def name(self):
        return self.graph.name

    def X2(self):
        if "X2" not in self._derived:
            self._derived["X2"] = build_X2(self.graph)
        return self._derived["X2"]

    def X3(self):
        if "X3" not in self._derived:
            self._derived["X3"] = build_X3(self.graph, self.X2())
        return self._derived["X3"]


def build_X2(graph):
    """
    X2 = X1 ×_{TX0} TX1, the pullback of d1 against T d0.

    Returns:
        Pullback whose p1 is d0: X2 -> X1 and p2 is d2: X2 -> T X1
    """
    T = graph.monad
    P = pullback(graph.d1, T.lift(graph.d0), f"{graph.name}_2")
    logger.debug("%s: |X2| = %d", graph.name, len(P.carrier))
    return P


def build_X3(graph, X2):
    """X3 = X2 ×_{TX1} TX2, the pullback of d2 against T d0 on X2."""
    T = graph.monad
    P = pullback(X2.p2, T.lift(X2.p1), f"{graph.name}_3")
    logger.debug("%s: |X3| = %d", graph.name, len(P.carrier))
    return P


def induced_maps(data):
    """
    The maps of low degree solved into the pullbacks X2 and X3.

    Returns:
        dict with "d1_3" and "d2_3" (X3 -> X2 pairs, possibly outside X2 when
        CA1 fails), and "s0_1", "s1_1" (X1 -> X2 pairs)
    """
    T = data.monad
    maps = {}
    if data.comp is not None:
        X2 = data.X2()
        comp = data.comp
        T_comp = T.lift(comp)
        T_p2 = T.lift(X2.p2)
        # d1 on X3: first part d0 z, inputs T comp applied to the outer inputs
        maps["d1_3"] = lambda e: (e[0][0], T_comp(e[1]))
        # d2 on X3: composite of the bottom pair, inputs flattened through m
        maps["d2_3"] = lambda e: (comp(e[0]), T.join(T_p2(e[1])))
    if data.unit is not None:
        unit = data.unit
        T_unit = T.lift(unit)
        d0, d1 = data.graph.d0, data.graph.d1
        maps["s0_1"] = lambda x: (x, T_unit(d1(x)))
        maps["s1_1"] = lambda x: (unit(d0(x)), T.pure(x))
    return maps


def _first_failure(elements, predicate):
    for element in elements:
        if not predicate(element):
            return render(element)
    return None


def check_axiom(data, axiom):
    """
    Verifies one of CA1-CA4 elementwise.

    Args:
        data: TCatData
        axiom: "CA1", "CA2", "CA3" or "CA4"

    Returns:
        dict with keys axiom, available, checked, passed, witness
    """
    T = data.monad
    g = data.graph
    result = {"axiom": axiom, "available": False, "checked": 0, "passed": False, "witness": None}

    if axiom == "CA1":
        if data.comp is None:
            return result
        X2 = data.X2()
        comp = data.comp
        T_d1 = T.lift(g.d1)
        elements = X2.carrier.elements

        def holds(e):
            x, w = e
            return g.d0(comp(e)) == g.d0(x) and g.d1(comp(e)) == T.join(T_d1(w))

    elif axiom == "CA2":
        if data.unit is None:
            return result
        elements = require_finite(g.X0, "CA2").elements

        def holds(a):
            u = data.unit(a)
            return g.d0(u) == a and g.d1(u) == T.pure(a)

    elif axiom == "CA3":
        if data.comp is None:
            return result
        maps = induced_maps(data)
        X2 = data.X2().carrier
        elements = data.X3().carrier.elements

        def holds(e):
            left, right = maps["d1_3"](e), maps["d2_3"](e)
            return X2.contains(left) and X2.contains(right) and data.comp(left) == data.comp(right)

    elif axiom == "CA4":
        if data.comp is None or data.unit is None:
            return result
        maps = induced_maps(data)
        X2 = data.X2().carrier
        elements = g.X1.elements

        def holds(x):
            return all(
                X2.contains(maps[key](x)) and data.comp(maps[key](x)) == x for key in ("s0_1", "s1_1")
            )

    else:
        raise ValueError(f"ERROR: unknown axiom {axiom!r}")

    witness = _first_failure(elements, holds)
    result.update(available=True, checked=len(elements), passed=witness is None, witness=witness)
    return result


def check_all(data):
    """CA1-CA4 as a DataFrame, one row per axiom."""
    report = pd.DataFrame([check_axiom(data, axiom) for axiom in AXIOMS])
    logger.info("%s: axioms %s", data.name, dict(zip(report["axiom"], report["passed"])))
    return report


@dataclass(frozen=True)
class StructureClass:
    """Ladder flags, closed under the implications between structures."""

    flags: frozenset

    def __contains__(self, name):
        return name in self.flags

    def as_dict(self):
        return {name: name in self.flags for name in LADDER}

    @property
    def top(self):
        """Most specific ladder level reached."""
        for name in reversed(LADDER):
            if name in self.flags:
                return name
        return None


def classify(data):
    """
    The ladder flags whose data exist and whose axioms pass.

    Args:
        data: TCatData, possibly without comp and/or unit

    Returns:
        StructureClass
    """
    rows = [check_axiom(data, axiom) for axiom in AXIOMS]
    passed = {row["axiom"]: row["available"] and row["passed"] for row in rows}
    magmoid = passed["CA1"]
    reflexive = passed["CA2"]
    semicategory = magmoid and passed["CA3"]
    unital = magmoid and reflexive and passed["CA4"]

    flags = {"T-graph"}
    if reflexive:
        flags.add("reflexive T-graph")
    if magmoid:
        flags.add("T-magmoid")
    if magmoid and reflexive:
        flags.add("reflexive T-magmoid")
    if unital:
        flags.add("unital T-magmoid")
    if semicategory:
        flags.add("T-semicategory")
    if semicategory and reflexive:
        flags.add("reflexive T-semicategory")
    if semicategory and unital:
        flags.add("T-category")
    return StructureClass(frozenset(flags))


def discrete_tcat(E, T, name="discrete"):
    """(E, E, 1_E, iE) with the only possible composition and units."""
    d0 = identity(E)
    graph = TGraph(T, E, E, d0, T.unit(E), name)
    data = TCatData(graph)
    X2 = data.X2()
    comp = Morph(X2.carrier, E, lambda e: e[0], "comp", "projection")
    return TCatData(graph, comp, identity(E), data._derived)


def chaotic_tcat(E, T, name="chaotic"):
    """
    X1 = TE × E with d1, d0 the projections; composition flattens sources.
    """
    require_finiteness(T, "chaotic_tcat")
    TE = T.obj(E)
    X1 = FiniteSet(tuple((t, e) for t in TE.elements for e in E.elements), f"{name}_1")
    d1 = projection(X1, TE, 0, "d1")
    d0 = projection(X1, E, 1, "d0")
    graph = TGraph(T, E, X1, d0, d1, name)
    data = TCatData(graph)
    X2 = data.X2()
    T_d1 = T.lift(d1)
    comp = Morph(X2.carrier, X1, lambda e: (T.join(T_d1(e[1])), e[0][1]), "comp")
    unit = Morph(E, X1, lambda a: (T.pure(a), a), "unit")
    return TCatData(graph, comp, unit, data._derived)


def algebra_violation(A, a, T):
    """
    First failure of the Eilenberg-Moore laws a∘i = 1 and a∘m = a∘Ta, or None.
    """
    for x in A.elements:
        if a(T.pure(x)) != x:
            return ("unit", x)
    TA = T.obj(A)
    T_a = T.lift(a)
    for tt in T.obj(TA).elements:
        if a(T.join(tt)) != a(T_a(tt)):
            return ("associativity", tt)
    return None


def algebra_tcat(A, a, T, name="algebra"):
    """
    (A, TA, a, 1_TA): composition is m, units are i.

    Raises:
        AlgebraError: if (A, a) is not an Eilenberg-Moore algebra
    """
    require_finiteness(T, "algebra_tcat")
    problem = algebra_violation(A, a, T)
    if problem is not None:
        raise AlgebraError(f"action fails the {problem[0]} law at {render(problem[1])}", witness=problem[1])
    TA = T.obj(A)
    graph = TGraph(T, A, TA, a, identity(TA), name)
    data = TCatData(graph)
    X2 = data.X2()
    comp = Morph(X2.carrier, TA, lambda e: T.join(e[1]), "comp")
    return TCatData(graph, comp, T.unit(A), data._derived)


def bar_resolution(A, a, T, depth, name="bar"):
    """
    X_n = T^n A with d_0 = T^{n-1} a, d_i = T^{n-1-i} m T^{i-1} A,
    d_n the identity into T(T^{n-1} A) and s_i = T^{n-i} i T^i A.
    """
    require_finiteness(T, "bar_resolution")
    problem = algebra_violation(A, a, T)
    if problem is not None:
        raise AlgebraError(f"action fails the {problem[0]} law at {render(problem[1])}", witness=problem[1])
    levels = tuple(T.power(A, n) for n in range(depth + 1))
    faces, degeneracies = {}, {}
    for n in range(1, depth + 1):
        faces[(n, 0)] = T.lift_power(a, n - 1)
        for i in range(1, n):
            faces[(n, i)] = T.lift_power(T.mult(T.power(A, i - 1)), n - 1 - i)
        faces[(n, n)] = identity(levels[n])
    for n in range(depth):
        for i in range(n + 1):
            degeneracies[(n, i)] = T.lift_power(T.unit(T.power(A, i)), n - i)
    logger.info("bar resolution %s: sizes %s", name, [len(level) for level in levels])
    return TSimplicialObject(T, levels, faces, degeneracies, name)


def check_tfunctor(f0, f1, X, Y):
    """
    Checks (f0, f1): X -> Y against the graph, unit and composition squares.

    The map f2 on X2 is solved into Y2 as (f1 x, T f1 w).

    Returns:
        DataFrame with columns square, passed, witness
    """
    T = X.monad
    gx, gy = X.graph, Y.graph
    T_f0, T_f1 = T.lift(f0), T.lift(f1)
    rows = []

    def record(square, elements, holds):
        rows.append({"square": square, "passed": (w := _first_failure(elements, holds)) is None, "witness": w})

    record("d0", gx.X1.elements, lambda x: gy.d0(f1(x)) == f0(gx.d0(x)))
    record("d1", gx.X1.elements, lambda x: gy.d1(f1(x)) == T_f0(gx.d1(x)))
    if X.unit is not None and Y.unit is not None:
        record("unit", gx.X0.elements, lambda a: f1(X.unit(a)) == Y.unit(f0(a)))
    if X.comp is not None and Y.comp is not None:
        Y2 = Y.X2().carrier

        def composes(e):
            image = (f1(e[0]), T_f1(e[1]))
            return Y2.contains(image) and f1(X.comp(e)) == Y.comp(image)

        record("comp", X.X2().carrier.elements, composes)
    return pd.DataFrame(rows, columns=["square", "passed", "witness"])


def enumerate_tfunctors(X, Y, limit=ENUMERATION_LIMIT):
    """
    All T-functors X -> Y, as (f0, f1) pairs of table Morphs.

    f0 ranges over all functions X0 -> Y0; for each, f1 picks per arrow an
    arrow of Y with the required target and source.
    """
    T = X.monad
    gx, gy = X.graph, Y.graph
    X0, Y0 = require_finite(gx.X0, "enumerate_tfunctors"), require_finite(gy.X0, "enumerate_tfunctors")
    by_type = {}
    for y in gy.X1.elements:
        by_type.setdefault((gy.d0(y), gy.d1(y)), []).append(y)
    found = []
    visited = 0
    for values in cartesian(Y0.elements, repeat=len(X0)):
        f0 = table(X0, Y0, zip(X0.elements, values), "f0")
        T_f0 = T.lift(f0)
        choices = [by_type.get((f0(gx.d0(x)), T_f0(gx.d1(x))), []) for x in gx.X1.elements]
        for arrows in cartesian(*choices):
            visited += 1
            if visited > limit:
                raise EnumerationLimitError(f"more than {limit} candidate T-functors {X.name} -> {Y.name}")
            f1 = table(gx.X1, gy.X1, zip(gx.X1.elements, arrows), "f1")
            if check_tfunctor(f0, f1, X, Y)["passed"].all():
                found.append((f0, f1))
    logger.info("%d T-functors %s -> %s (%d candidates)", len(found), X.name, Y.name, visited)
    return found


def compose_tfunctors(g, f):
    """(g0 ∘ f0, g1 ∘ f1)."""
    return compose(g[0], f[0]), compose(g[1], f[1])


def ordinal_category(n, T, name=None):
    """
    The poset [n] as a T-category for the identity monad.

    Arrows are pairs (i, j) with i <= j; d0 is the target j, d1 the source i.
    """
    return preorder_category(range(n + 1), lambda i, j: i <= j, T, name or f"[{n}]")


def preorder_category(objects, relation, T, name="preorder"):
    """The thin category of a reflexive, transitive relation (identity monad only)."""
    X0 = FiniteSet(tuple(objects), f"{name}_0")
    X1 = FiniteSet(tuple((i, j) for i in X0.elements for j in X0.elements if relation(i, j)), f"{name}_1")
    d0 = Morph(X1, X0, lambda x: x[1], "d0", "projection")
    d1 = Morph(X1, T.obj(X0), lambda x: x[0], "d1", "projection")
    graph = TGraph(T, X0, X1, d0, d1, name)
    data = TCatData(graph)
    X2 = data.X2()
    comp = Morph(X2.carrier, X1, lambda e: (e[1][0], e[0][1]), "comp")
    unit = Morph(X0, X1, lambda a: (a, a), "unit")
    return TCatData(graph, comp, unit, data._derived)
