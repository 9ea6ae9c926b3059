"""
The ladder of structures between T-graphs and T-categories.

This module handles:
- Which SA identities each ladder level guarantees for its partial nerve
- The derived identity suite: build the partial nerve and check exactly
  the claimed identities
- Random partial structures for fuzzing (graphs, magmoids, units)
- Tagged structures built to land on a chosen ladder level
"""

import logging
import random
from functools import reduce

import pandas as pd

from ..base_category.sets import FiniteSet, Morph, table
from ..utils.errors import DomainError
from .nerve import nerve
from .simplicial import check_sa_axioms
from .tcat_core import TCatData, TGraph, algebra_tcat, chaotic_tcat, classify, discrete_tcat, ordinal_category

logger = logging.getLogger(__name__)


def claimed(level, axiom, i, j):
    """
    Whether a ladder level guarantees one SA instance.

    Args:
        level: Ladder level name
        axiom: "SA1" ... "SA9"
        i, j: Indices as in the identity report (None where unused)

    Returns:
        bool
    """
    graph_part = axiom == "SA2" and i == 0
    magmoid = level in ("T-magmoid", "reflexive T-magmoid", "unital T-magmoid", "T-semicategory",
                        "reflexive T-semicategory", "T-category")
    semicategory = level in ("T-semicategory", "reflexive T-semicategory", "T-category")
    reflexive = level in ("reflexive T-graph", "reflexive T-magmoid", "unital T-magmoid",
                          "reflexive T-semicategory", "T-category")
    unital = level in ("unital T-magmoid", "T-category")

    if graph_part:
        return True
    if magmoid:
        if axiom == "SA1" and (i == 0 or j - i >= 2 or semicategory):
            return True
        if axiom in ("SA2", "SA3"):
            return True
    if reflexive:
        if axiom == "SA5" and i == 0:
            return True
        if axiom == "SA6" and i == 0 and j == 0:
            return True
        if axiom in ("SA4", "SA7", "SA9"):
            return True
        if magmoid and axiom in ("SA5", "SA8"):
            return True
        if unital and axiom == "SA6":
            return True
    return False


def derived_identity_suite(data, depth=3, level=None):
    """
    Checks on the partial nerve exactly the identities its ladder level claims.

    Args:
        data: TCatData, possibly partial
        depth: Nerve depth
        level: Ladder level to test against (defaults to the classified one)

    Returns:
        DataFrame of the SA report restricted to claimed instances, with an
        extra column `claimed`; unclaimed instances are kept with claimed=False
    """
    level = level or classify(data).top
    X = nerve(data, depth)
    report = check_sa_axioms(X)
    report["claimed"] = [claimed(level, a, i, j) for a, i, j in zip(report["axiom"], report["i"], report["j"])]
    report["level"] = level
    logger.info("%s at level %s: %d claimed instances", data.name, level, int(report["claimed"].sum()))
    return report


def claimed_failures(report):
    """Rows claimed by the ladder level that nevertheless fail."""
    return report[report["claimed"] & ~report["passed"]]


def random_graph(T, rng, max_objects=2, duplicated=2, name="random"):
    """
    A random T-graph with at least one arrow of every type (target, source).

    Arrows of up to `duplicated` random types are doubled so that composition
    is not forced.
    """
    X0 = FiniteSet(tuple(f"o{k}" for k in range(rng.randint(1, max_objects))), f"{name}_0")
    TX0 = T.obj(X0)
    types = [(target, source) for target in X0.elements for source in TX0.elements]
    doubled = set(rng.sample(range(len(types)), min(duplicated, len(types))))
    arrows, d0, d1 = [], {}, {}
    for k, (target, source) in enumerate(types):
        for copy in range(2 if k in doubled else 1):
            arrow = f"e{k}" + ("'" * copy)
            arrows.append(arrow)
            d0[arrow], d1[arrow] = target, source
    X1 = FiniteSet(tuple(arrows), f"{name}_1")
    return TGraph(T, X0, X1, table(X1, X0, d0, "d0"), table(X1, TX0, d1, "d1"), name)


def random_composition(graph, rng):
    """A composition satisfying CA1, chosen at random among admissible arrows."""
    T = graph.monad
    data = TCatData(graph)
    X2 = data.X2()
    T_d1 = T.lift(graph.d1)
    by_type = {}
    for x in graph.X1.elements:
        by_type.setdefault((graph.d0(x), graph.d1(x)), []).append(x)
    values = {}
    for x, w in X2.carrier.elements:
        values[(x, w)] = rng.choice(by_type[(graph.d0(x), T.join(T_d1(w)))])
    return table(X2.carrier, graph.X1, values, "comp"), data._derived


def random_unit(graph, rng):
    """A unit satisfying CA2, chosen at random."""
    T = graph.monad
    values = {}
    for a in graph.X0.elements:
        candidates = [x for x in graph.X1.elements if graph.d0(x) == a and graph.d1(x) == T.pure(a)]
        values[a] = rng.choice(candidates)
    return table(graph.X0, graph.X1, values, "unit")


def random_structure(T, seed, with_comp=True, with_unit=True, duplicated=2):
    """
    A random partial structure for fuzzing.

    Returns:
        TCatData
    """
    rng = random.Random(seed)
    graph = random_graph(T, rng, duplicated=duplicated, name=f"r{seed}")
    comp, derived = (None, {})
    if with_comp:
        comp, derived = random_composition(graph, rng)
    unit = random_unit(graph, rng) if with_unit else None
    return TCatData(graph, comp, unit, derived)


# Tag rule and unit mode per level: "monoid" rules are associative with
# identity tag 0, "magma" rules are unital but not associative, and a
# "shifted" unit carries tag 1 so that the unit laws fail.
LEVEL_RECIPES = {
    "T-graph": (None, None),
    "reflexive T-graph": (None, "unit"),
    "T-magmoid": ("magma", None),
    "reflexive T-magmoid": ("magma", "shifted"),
    "unital T-magmoid": ("magma", "unit"),
    "T-semicategory": ("monoid", None),
    "reflexive T-semicategory": ("monoid", "shifted"),
    "T-category": ("monoid", "unit"),
}


def support(T, t):
    """The elements of X occurring in t in TX, in traversal order."""
    found = []
    T.fmap(lambda x: found.append(x) or x, t)
    return found


def tagged_structure(base, tags, rule=None, unit_tag=None, name=None):
    """
    Arrows of a T-category tagged by the elements of `tags`.

    An arrow is a pair (x, t) with the target and source of x. Composites
    compose the underlying arrows in `base` and tag the result with
    rule(t, s), where s folds the input tags with `rule` starting from tags[0].

    Args:
        base: A T-category (TCatData with comp and unit)
        tags: Tuple of tags; tags[0] must be an identity for `rule`
        rule: Binary operation on tags, or None for no composition
        unit_tag: Tag of the units, or None for no units
        name: Structure name

    Returns:
        TCatData
    """
    T = base.monad
    g = base.graph
    name = name or f"tagged {base.name}"
    X1 = FiniteSet(tuple((x, t) for x in g.X1.elements for t in tags), f"{name}_1")
    d0 = Morph(X1, g.X0, lambda e: g.d0(e[0]), "d0")
    d1 = Morph(X1, T.obj(g.X0), lambda e: g.d1(e[0]), "d1")
    graph = TGraph(T, g.X0, X1, d0, d1, name)
    data = TCatData(graph)
    comp = unit = None
    if rule is not None:
        X2 = data.X2()

        def composite(e):
            (x, t), w = e
            inputs = reduce(rule, (arrow[1] for arrow in support(T, w)), tags[0])
            return (base.comp((x, T.fmap(lambda arrow: arrow[0], w))), rule(t, inputs))

        comp = Morph(X2.carrier, X1, composite, "comp")
    if unit_tag is not None:
        unit = Morph(g.X0, X1, lambda a: (base.unit(a), unit_tag), "unit")
    return TCatData(graph, comp, unit, data._derived)


def random_base(T, rng, name="base"):
    """
    A small T-category to tag: discrete for every monad, plus chaotic and
    ordinal ones for the identity monad, chaotic on a point for maybe and
    the trivial action algebra for writer monads.
    """
    E = FiniteSet(tuple(f"o{k}" for k in range(rng.randint(1, 2))), f"{name}_0")
    builders = [lambda: discrete_tcat(E, T, name)]
    if T.name == "identity":
        builders.append(lambda: chaotic_tcat(E, T, name))
        builders.append(lambda: ordinal_category(1, T, name))
    elif T.name == "maybe":
        builders.append(lambda: chaotic_tcat(FiniteSet(("o0",), f"{name}_0"), T, name))
    elif T.monoid is not None:
        action = Morph(T.obj(E), E, lambda t: support(T, t)[0], "a")
        builders.append(lambda: algebra_tcat(E, action, T, name))
    return rng.choice(builders)()


def random_magma(rng, tags=(0, 1, 2)):
    """A unital, non-associative operation on `tags` with identity tags[0]."""
    e, rest = tags[0], tags[1:]
    while True:
        values = {(a, b): rng.choice(tags) for a in rest for b in rest}
        values.update({(e, a): a for a in tags})
        values.update({(a, e): a for a in tags})
        if any(values[(values[(a, b)], c)] != values[(a, values[(b, c)])] for a in tags for b in tags for c in tags):
            return lambda a, b: values[(a, b)]


def ladder_structure(T, level, seed):
    """
    A random structure whose classification is exactly `level`.

    Raises:
        DomainError: for a name outside the ladder
    """
    if level not in LEVEL_RECIPES:
        raise DomainError(f"unknown ladder level {level!r}")
    rng = random.Random(seed)
    kind, unit_mode = LEVEL_RECIPES[level]
    base = random_base(T, rng, f"s{seed}")
    if kind == "magma":
        tags, rule = (0, 1, 2), random_magma(rng)
    elif kind == "monoid":
        tags, rule = (0, 1), rng.choice([lambda a, b: a | b, lambda a, b: a ^ b])
    else:
        tags, rule = (0, 1), None
    unit_tag = {"unit": 0, "shifted": 1}.get(unit_mode)
    return tagged_structure(base, tags, rule, unit_tag, f"s{seed}")


def ladder_table(structures, depth=3):
    """
    One row per structure: classified level and the number of claimed failures.
    """
    rows = []
    for data in structures:
        report = derived_identity_suite(data, depth)
        rows.append({
            "structure": data.name,
            "level": report["level"].iloc[0] if len(report) else classify(data).top,
            "claimed": int(report["claimed"].sum()),
            "claimed_failures": len(claimed_failures(report)),
            "unclaimed_failures": int((~report["claimed"] & ~report["passed"]).sum()),
        })
    return pd.DataFrame(rows)
