"""
The presheaf G⋔X of cylinders in a Δ_r^op-presheaf.

This module handles:
- Levels (G⋔X)_n as flat tuples (x_0, ..., x_n) of (n+1)-simplices glued
  along d_j x_j = d_j x_{j-1}, built by iterated pullbacks
- Inner faces and degeneracies, the maps g: G⋔X -> XR and t: G⋔X -> X
- The brute-force finite_limit oracle for each level
- The correspondence between 1-simplices u of the hom and maps û: Y -> G⋔X
"""

import logging
from dataclasses import dataclass

import pandas as pd

from ..base_category.limits import Diagram, finite_limit, pullback
from ..base_category.sets import FiniteSet, Morph, compose, table
from ..combinatorics.simplex import chi
from ..enrichment.hom import STORED_DEGREE, HomSimplex
from ..tcategories.simplicial import Presheaf, TSimpMorphism, check_presheaf_identities, check_presheaf_morphism
from ..utils.errors import DepthError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PowerG:
    """G⋔X with its projections to the (n+1)-simplices of X."""

    presheaf: Presheaf
    source: object
    g: tuple
    t: tuple

    @property
    def depth(self):
        return self.presheaf.depth

    def level(self, n):
        return self.presheaf.level(n)

    def projection(self, n, k):
        """π_k: (G⋔X)_n -> X_{n+1}."""
        return Morph(self.level(n), self.source.level(n + 1), lambda xi: xi[k], f"pi{k}", "projection")


def _cylinders(X, n, name):
    """Tuples (x_0, ..., x_n) in X_{n+1} with d_j x_j = d_j x_{j-1} for 1 <= j <= n."""
    carrier = FiniteSet(tuple((x,) for x in X.level(n + 1).elements), name)
    for j in range(1, n + 1):
        d = X.face(n + 1, j)
        previous = Morph(carrier, X.level(n), lambda t, d=d: d(t[-1]), f"d{j}.last")
        P = pullback(previous, d)
        carrier = FiniteSet(tuple(t + (x,) for t, x in P.carrier.elements), name)
    return carrier


def shift(X):
    """XR: (XR)_n = X_{n+1} with the inner faces and degeneracies of X."""
    depth = X.depth - 1
    levels = tuple(X.level(n + 1) for n in range(depth + 1))
    faces = {(n, i): X.face(n + 1, i) for n in range(1, depth + 1) for i in range(n)}
    degeneracies = {(n, i): X.degeneracy(n + 1, i) for n in range(depth) for i in range(n + 1)}
    return Presheaf(levels, faces, degeneracies, f"{X.name}R")


def power_G(X, depth=None):
    """
    Builds G⋔X up to depth (default X.depth - 1).

    Faces (G⋔X)_{n+1} -> (G⋔X)_n for i <= n:
        (d_{i+1} x_0, ..., d_{i+1} x_{i-1}, d_i x_{i+1}, ..., d_i x_{n+1})
    Degeneracies (G⋔X)_{n-1} -> (G⋔X)_n for i <= n-1:
        (s_{i+1} x_0, ..., s_{i+1} x_i, s_i x_i, ..., s_i x_{n-1})

    Args:
        X: TSimplicialObject or Presheaf

    Returns:
        PowerG
    """
    depth = X.depth - 1 if depth is None else depth
    if depth < 0 or depth > X.depth - 1:
        raise DepthError(f"G⋔{X.name} at depth {depth} needs {X.name} at depth {depth + 1}")
    name = f"G^{X.name}"
    levels = tuple(_cylinders(X, n, f"{name}_{n}") for n in range(depth + 1))

    faces = {}
    for n in range(depth):
        for i in range(n + 1):
            upper, lower = X.face(n + 2, i + 1), X.face(n + 2, i)
            faces[(n + 1, i)] = Morph(
                levels[n + 1], levels[n],
                lambda xi, i=i, upper=upper, lower=lower: (
                    tuple(upper(x) for x in xi[:i]) + tuple(lower(x) for x in xi[i + 1:])
                ),
                f"d{i}",
            )
    degeneracies = {}
    for n in range(1, depth + 1):
        for i in range(n):
            upper, lower = X.degeneracy(n, i + 1), X.degeneracy(n, i)
            degeneracies[(n - 1, i)] = Morph(
                levels[n - 1], levels[n],
                lambda xi, i=i, upper=upper, lower=lower: (
                    tuple(upper(x) for x in xi[: i + 1]) + tuple(lower(x) for x in xi[i:])
                ),
                f"s{i}",
            )

    presheaf = Presheaf(levels, faces, degeneracies, name)
    g = tuple(Morph(levels[n], X.level(n + 1), lambda xi: xi[-1], f"g{n}", "projection") for n in range(depth + 1))
    t = tuple(
        Morph(levels[n], X.level(n), lambda xi, d0=X.face(n + 1, 0): d0(xi[0]), f"t{n}")
        for n in range(depth + 1)
    )
    logger.info("%s: sizes %s", name, [len(level) for level in levels])
    return PowerG(presheaf, X, g, t)


def cylinder_diagram(X, n):
    """
    The level (G⋔X)_n as a finite diagram: vertices x0..xn in X_{n+1} and
    y1..yn in X_n with d_j: x_{j-1} -> y_j and d_j: x_j -> y_j.
    """
    vertices = {f"x{k}": X.level(n + 1) for k in range(n + 1)}
    edges = []
    for j in range(1, n + 1):
        vertices[f"y{j}"] = X.level(n)
        edges.append((f"x{j - 1}", f"y{j}", X.face(n + 1, j)))
        edges.append((f"x{j}", f"y{j}", X.face(n + 1, j)))
    order = [f"x{k}" for k in range(n + 1)] + [f"y{j}" for j in range(1, n + 1)]
    return Diagram({v: vertices[v] for v in order}, tuple(edges))


def check_power_g(PG):
    """
    Presheaf identities of G⋔X, naturality of g and t, and each level
    against the finite_limit oracle.

    Returns:
        DataFrame with columns check, n, passed, witness
    """
    X = PG.source
    rows = []
    identities = check_presheaf_identities(PG.presheaf)
    for n, group in identities.groupby("n"):
        failed = group[~group["passed"]]
        rows.append({"check": "identities", "n": n, "passed": failed.empty,
                     "witness": None if failed.empty else failed["witness"].iloc[0]})
    for label, maps, target in (("g", PG.g, shift(X)), ("t", PG.t, X)):
        report = check_presheaf_morphism(TSimpMorphism(PG.presheaf, target, maps))
        for n, group in report.groupby("n"):
            failed = group[~group["passed"]]
            rows.append({"check": f"{label} natural", "n": n, "passed": failed.empty,
                         "witness": None if failed.empty else failed["witness"].iloc[0]})
    for n in range(PG.depth + 1):
        carrier, _ = finite_limit(cylinder_diagram(X, n))
        oracle = {solution[: n + 1] for solution in carrier.elements}
        built = set(PG.level(n).elements)
        difference = sorted(oracle ^ built, key=repr)
        rows.append({"check": "oracle", "n": n, "passed": not difference,
                     "witness": repr(difference[0]) if difference else None})
    return pd.DataFrame(rows, columns=["check", "n", "passed", "witness"])


def u_to_uhat(x, PG):
    """
    û_m(y) = (u_{m+1,k+1}(s_k y))_{k <= m} with u_{m,k} = x_{χ^m_k}.

    Args:
        x: HomSimplex of degree 1 from Y to X
        PG: PowerG of X

    Returns:
        TSimpMorphism of presheaves Y -> G⋔X
    """
    Y = x.source
    depth = min(PG.depth, Y.depth - 1)
    components = []
    for m in range(depth + 1):
        columns = [(x.component(chi(m + 1, k + 1)), Y.degeneracy(m, k)) for k in range(m + 1)]
        components.append(table(
            Y.level(m), PG.level(m),
            {y: tuple(u(s(y)) for u, s in columns) for y in Y.level(m).elements},
            f"uhat{m}",
        ))
    return TSimpMorphism(Y.presheaf(), PG.presheaf, tuple(components))


def uhat_to_u(uhat, v, Y, X):
    """
    The 1-simplex with u_{m,k} = d_k π_k û_m for k <= m and u_{m,m+1} = v_m.

    Args:
        uhat: components Y_m -> (G⋔X)_m for m <= 2
        v: components Y_m -> X_m for m <= 2 (the source morphism)
    """
    if len(uhat) <= STORED_DEGREE or len(v) <= STORED_DEGREE:
        raise DepthError(f"1-simplices need components up to degree {STORED_DEGREE}")
    components = {}
    for m in range(STORED_DEGREE + 1):
        elements = Y.level(m).elements
        for k in range(m + 1):
            d = X.face(m + 1, k)
            components[chi(m, k)] = table(
                Y.level(m), X.level(m), {y: d(uhat[m](y)[k]) for y in elements}, f"u{m},{k}"
            )
        components[chi(m, m + 1)] = table(Y.level(m), X.level(m), {y: v[m](y) for y in elements}, f"u{m},{m + 1}")
    return HomSimplex(1, Y, X, components)


def check_power_correspondence(Y, X, PG, simplices):
    """
    u -> û -> u on the given 1-simplices, and naturality of every û.

    Returns:
        DataFrame with columns simplex, natural, roundtrip, passed
    """
    rows = []
    for position, x in enumerate(simplices):
        uhat = u_to_uhat(x, PG)
        natural = bool(check_presheaf_morphism(uhat)["passed"].all())
        source = tuple(x.component(chi(m, m + 1)) for m in range(STORED_DEGREE + 1))
        back = uhat_to_u(uhat.components, source, Y, X)
        roundtrip = back.key() == x.key()
        rows.append({"simplex": position, "natural": natural, "roundtrip": roundtrip,
                     "passed": natural and roundtrip})
    return pd.DataFrame(rows, columns=["simplex", "natural", "roundtrip", "passed"])


def composite_components(f, h):
    """Componentwise f_m ∘ h_m."""
    return tuple(compose(fm, hm) for fm, hm in zip(f, h))
