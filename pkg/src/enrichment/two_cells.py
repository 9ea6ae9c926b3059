"""
T-natural transformations between T-functors.

This module handles:
- TNatTransformation (α: A_0 -> B_1) and HatTwoCell (α̂: A_1 -> B_1), each
  validated through the derived 2-simplices α', α'' and α̂', α̂''
- The mutually inverse passages α = α̂ s_0 and α̂ = d_1 α'
- Exhaustive enumeration of both kinds of 2-cells
- Identities, vertical composition, whiskering and the interchange law
- The correspondence between hat 2-cells and 1-simplices of the hom

T-functors are given as pairs (f0, f1) and T-categories through their
nerves, which must satisfy the Segal condition up to degree 2.
"""

import logging
from dataclasses import dataclass
from itertools import product as cartesian

import pandas as pd

from ..base_category.elements import render
from ..base_category.sets import Morph, compose, table, table_key
from ..combinatorics.simplex import SimplexMap, enumerate_hom
from ..tcategories.nerve import extend_tfunctor
from ..tcategories.tcat_core import compose_tfunctors
from ..utils.config import ENUMERATION_LIMIT
from ..utils.errors import DomainError, EnumerationLimitError, ExtensionError
from .hom import STORED_DEGREE, HomSimplex

logger = logging.getLogger(__name__)

CHECK_COLUMNS = ["condition", "passed", "witness"]


@dataclass(frozen=True, eq=False)
class TNatTransformation:
    """α: f => g for T-functors f, g: A -> B, with α: A_0 -> B_1."""

    source: object
    target: object
    f: tuple
    g: tuple
    alpha: Morph

    def key(self):
        return table_key(self.alpha)


@dataclass(frozen=True, eq=False)
class HatTwoCell:
    """The same 2-cell presented by α̂: A_1 -> B_1."""

    source: object
    target: object
    f: tuple
    g: tuple
    hat_alpha: Morph

    def key(self):
        return table_key(self.hat_alpha)


def _first_failure(elements, holds):
    for element in elements:
        try:
            if not holds(element):
                return element
        except ExtensionError:
            return element
    return None


def _row(condition, elements, holds):
    witness = _first_failure(elements, holds)
    return {"condition": condition, "passed": witness is None,
            "witness": None if witness is None else render(witness)}


def alpha_prime(t):
    """α'(a) for a in A_1: the 2-simplex of B over (α(d_0 a), i(f_1 a))."""
    A, B = t.source, t.target
    T = B.monad
    d0 = A.face(1, 0)
    f1 = t.f[1]
    return Morph(A.level(1), B.level(2), lambda a: B.segal_lift(2, t.alpha(d0(a)), T.pure(f1(a))), "alpha'")


def alpha_double_prime(t):
    """α''(a) for a in A_1: the 2-simplex of B over (g_1 a, Tα(d_1 a))."""
    A, B = t.source, t.target
    T_alpha = B.monad.lift(t.alpha)
    d1 = A.last_face(1)
    g1 = t.g[1]
    return Morph(A.level(1), B.level(2), lambda a: B.segal_lift(2, g1(a), T_alpha(d1(a))), "alpha''")


def validate_two_cell(t):
    """
    Checks a T-natural transformation.

    α(a) must run from f_0 a to g_0 a, and d_1 α' = d_1 α'' on A_1.

    Returns:
        DataFrame with columns condition, passed, witness
    """
    A, B = t.source, t.target
    T = B.monad
    f0, g0 = t.f[0], t.g[0]
    d0, d1 = B.face(1, 0), B.last_face(1)
    rows = [
        _row("target", A.level(0).elements, lambda a: d0(t.alpha(a)) == g0(a)),
        _row("source", A.level(0).elements, lambda a: d1(t.alpha(a)) == T.pure(f0(a))),
    ]
    if all(row["passed"] for row in rows):
        inner = B.face(2, 1)
        first, second = alpha_prime(t), alpha_double_prime(t)
        rows.append(_row("naturality", A.level(1).elements, lambda a: inner(first(a)) == inner(second(a))))
    return pd.DataFrame(rows, columns=CHECK_COLUMNS)


def hat_prime(c):
    """α̂'(z) for z in A_2: the element of B_2 over (α̂(d_0 z), T f_1(d_2 z))."""
    A, B = c.source, c.target
    T_f1 = B.monad.lift(c.f[1])
    d0, d2 = A.face(2, 0), A.last_face(2)
    return Morph(A.level(2), B.level(2), lambda z: B.segal_lift(2, c.hat_alpha(d0(z)), T_f1(d2(z))), "hat'")


def hat_double_prime(c):
    """α̂''(z) for z in A_2: the element of B_2 over (g_1(d_0 z), Tα̂(d_2 z))."""
    A, B = c.source, c.target
    T_hat = B.monad.lift(c.hat_alpha)
    d0, d2 = A.face(2, 0), A.last_face(2)
    g1 = c.g[1]
    return Morph(A.level(2), B.level(2), lambda z: B.segal_lift(2, g1(d0(z)), T_hat(d2(z))), "hat''")


def validate_hat_cell(c):
    """
    Checks a hat 2-cell: typing, then d_1 α̂' = α̂ d_1 = d_1 α̂'' on A_2.

    Returns:
        DataFrame with columns condition, passed, witness
    """
    A, B = c.source, c.target
    T_f0 = B.monad.lift(c.f[0])
    g0 = c.g[0]
    rows = [
        _row("target", A.level(1).elements, lambda a: B.face(1, 0)(c.hat_alpha(a)) == g0(A.face(1, 0)(a))),
        _row("source", A.level(1).elements, lambda a: B.last_face(1)(c.hat_alpha(a)) == T_f0(A.last_face(1)(a))),
    ]
    if all(row["passed"] for row in rows):
        inner_a, inner_b = A.face(2, 1), B.face(2, 1)
        first, second = hat_prime(c), hat_double_prime(c)
        rows.append(_row("left", A.level(2).elements, lambda z: inner_b(first(z)) == c.hat_alpha(inner_a(z))))
        rows.append(_row("right", A.level(2).elements, lambda z: inner_b(second(z)) == c.hat_alpha(inner_a(z))))
    return pd.DataFrame(rows, columns=CHECK_COLUMNS)


def _require(report, what):
    if not report["passed"].all():
        failed = report[~report["passed"]].iloc[0]
        raise DomainError(f"{what} fails its {failed['condition']} condition at {failed['witness']}")


def hat_to_alpha(c):
    """α = α̂ ∘ s_0."""
    _require(validate_hat_cell(c), "hat 2-cell")
    A = c.source
    s0 = A.degeneracy(0, 0)
    alpha = table(A.level(0), c.target.level(1), {a: c.hat_alpha(s0(a)) for a in A.level(0).elements}, "alpha")
    return TNatTransformation(A, c.target, c.f, c.g, alpha)


def alpha_to_hat(t):
    """
    α̂ = d_1 ∘ α', after checking the common value d_1 α' = d_1 α''.

    Raises:
        ExtensionError: when the two derived 2-simplices disagree
    """
    report = validate_two_cell(t)
    if not report["passed"].all():
        failed = report[~report["passed"]].iloc[0]
        if failed["condition"] == "naturality":
            raise ExtensionError(f"d1 alpha' and d1 alpha'' differ at {failed['witness']}")
        _require(report, "T-natural transformation")
    A, B = t.source, t.target
    inner = B.face(2, 1)
    first = alpha_prime(t)
    hat = table(A.level(1), B.level(1), {a: inner(first(a)) for a in A.level(1).elements}, "hat_alpha")
    return HatTwoCell(A, B, t.f, t.g, hat)


def _candidates(B, targets, sources):
    """Arrows of B grouped by (d_0, d_1)."""
    index = {}
    for x in B.level(1).elements:
        index.setdefault((B.face(1, 0)(x), B.last_face(1)(x)), []).append(x)
    return [index.get(pair, []) for pair in zip(targets, sources)]


def enumerate_two_cells(A, B, f, g, limit=ENUMERATION_LIMIT):
    """
    All T-natural transformations f => g.

    Each α(a) is drawn from the arrows from f_0 a to g_0 a.

    Returns:
        List of TNatTransformation
    """
    T = B.monad
    elements = A.level(0).elements
    choices = _candidates(B, [g[0](a) for a in elements], [T.pure(f[0](a)) for a in elements])
    found, visited = [], 0
    for values in cartesian(*choices):
        visited += 1
        if visited > limit:
            raise EnumerationLimitError(f"more than {limit} candidate 2-cells")
        t = TNatTransformation(A, B, f, g, table(A.level(0), B.level(1), zip(elements, values), "alpha"))
        if validate_two_cell(t)["passed"].all():
            found.append(t)
    logger.info("%d T-natural transformations %s -> %s (%d candidates)", len(found), A.name, B.name, visited)
    return found


def enumerate_hat_cells(A, B, f, g, limit=ENUMERATION_LIMIT):
    """All hat 2-cells f => g; α̂(a) runs from T f_0(d_1 a) to g_0(d_0 a)."""
    T_f0 = B.monad.lift(f[0])
    elements = A.level(1).elements
    d0, d1 = A.face(1, 0), A.last_face(1)
    choices = _candidates(B, [g[0](d0(a)) for a in elements], [T_f0(d1(a)) for a in elements])
    found, visited = [], 0
    for values in cartesian(*choices):
        visited += 1
        if visited > limit:
            raise EnumerationLimitError(f"more than {limit} candidate hat 2-cells")
        c = HatTwoCell(A, B, f, g, table(A.level(1), B.level(1), zip(elements, values), "hat_alpha"))
        if validate_hat_cell(c)["passed"].all():
            found.append(c)
    logger.info("%d hat 2-cells %s -> %s (%d candidates)", len(found), A.name, B.name, visited)
    return found


def identity_two_cell(A, B, f):
    """The identity on f: α = s_0 ∘ f_0."""
    s0 = B.degeneracy(0, 0)
    alpha = table(A.level(0), B.level(1), {a: s0(f[0](a)) for a in A.level(0).elements}, "alpha")
    return TNatTransformation(A, B, f, f, alpha)


def vertical_compose(beta, alpha):
    """
    β · α for α: f => g and β: g => h.

    (β · α)(a) is d_1 of the 2-simplex of B over (β(a), i(α(a))).
    """
    if alpha.target is not beta.target or alpha.source is not beta.source:
        raise DomainError("2-cells between different T-categories")
    if table_key(alpha.g[0]) != table_key(beta.f[0]) or table_key(alpha.g[1]) != table_key(beta.f[1]):
        raise DomainError("codomain of the first 2-cell is not the domain of the second")
    A, B = alpha.source, alpha.target
    T = B.monad
    inner = B.face(2, 1)
    values = {a: inner(B.segal_lift(2, beta.alpha(a), T.pure(alpha.alpha(a)))) for a in A.level(0).elements}
    return TNatTransformation(A, B, alpha.f, beta.g, table(A.level(0), B.level(1), values, "alpha"))


def whisker(t, h, side, other):
    """
    Whiskers a 2-cell by a T-functor h.

    Args:
        t: TNatTransformation f => g: A -> B
        h: T-functor (h0, h1), B -> C for side "post" or W -> A for "pre"
        side: "post" (h_1 ∘ α between h f and h g) or "pre" (α ∘ h_0 between f h and g h)
        other: The nerve of C (post) or of W (pre)

    Returns:
        TNatTransformation
    """
    A, B = t.source, t.target
    if side == "post":
        alpha = table(A.level(0), other.level(1), {a: h[1](t.alpha(a)) for a in A.level(0).elements}, "alpha")
        return TNatTransformation(A, other, compose_tfunctors(h, t.f), compose_tfunctors(h, t.g), alpha)
    if side == "pre":
        alpha = table(other.level(0), B.level(1), {w: t.alpha(h[0](w)) for w in other.level(0).elements}, "alpha")
        return TNatTransformation(other, B, compose_tfunctors(t.f, h), compose_tfunctors(t.g, h), alpha)
    raise DomainError(f"unknown whiskering side {side!r}")


def check_interchange(alpha, gamma, C):
    """
    (γ g) · (k α) = (l α) · (γ f) for α: f => g: A -> B and γ: k => l: B -> C.

    Returns:
        DataFrame with one row: condition, passed, witness
    """
    k, l = gamma.f, gamma.g
    left = vertical_compose(whisker(gamma, alpha.g, "pre", alpha.source), whisker(alpha, k, "post", C))
    right = vertical_compose(whisker(alpha, l, "post", C), whisker(gamma, alpha.f, "pre", alpha.source))
    row = _row("interchange", alpha.source.level(0).elements, lambda a: left.alpha(a) == right.alpha(a))
    return pd.DataFrame([row], columns=CHECK_COLUMNS)


def _functor_components(A, B, f):
    """f_m for m <= 2 on the nerves."""
    return extend_tfunctor(f[0], f[1], A, B).components


def hat_to_hom(c):
    """
    The 1-simplex of hom(A, B) given by a hat 2-cell.

    Components at maps constant at 0 are those of f, at maps constant at 1
    those of g; x_(0,1) = α̂, x_(0,0,1) = α̂' and x_(0,1,1) = α̂''.
    """
    A, B = c.source, c.target
    f_parts, g_parts = _functor_components(A, B, c.f), _functor_components(A, B, c.g)
    special = {(0, 1): c.hat_alpha, (0, 0, 1): hat_prime(c), (0, 1, 1): hat_double_prime(c)}
    components = {}
    for m in range(STORED_DEGREE + 1):
        for phi in enumerate_hom(m, 1):
            if set(phi.values) == {0}:
                part = f_parts[m]
            elif set(phi.values) == {1}:
                part = g_parts[m]
            else:
                part = special[phi.values]
            components[phi] = table(A.level(m), B.level(m), {a: part(a) for a in A.level(m).elements}, f"x{phi.values}")
    return HomSimplex(1, A, B, components)


def hom_to_hat(x, f, g):
    """The hat 2-cell x_(0,1) of a 1-simplex from f to g."""
    if x.degree != 1:
        raise DomainError(f"2-cells are 1-simplices, got degree {x.degree}")
    return HatTwoCell(x.source, x.target, f, g, x.component(SimplexMap(1, 1, (0, 1))))
