"""
Candidates for level n+1 from a tower truncated at n.

This module handles:
- The coskeletal candidate (C_n X)_{n+1}: a finite limit over the injective
  maps into [n+1] of dimensions n and n-1
- The degenerate candidate (D_n X)_{n+1}: a finite colimit over the
  surjections out of [n+1], computed by union-find
- The comparison maps from an existing level n+1 into both candidates
"""

import logging
from dataclasses import dataclass

from ..base_category.limits import Diagram, finite_limit
from ..base_category.sets import FiniteSet, Morph, product, projection
from ..base_category.elements import canonical_key
from ..combinatorics.simplex import compose, enumerate_hom, face, is_injective, is_surjective, degeneracy
from ..monads.monad_engine import require_finiteness
from ..utils.errors import DepthError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CoskeletalStep:
    """(C_n X)_{n+1} with its faces d_0..d_n (into X_n) and last face (into T X_n)."""

    level: FiniteSet
    faces: dict
    vertices: tuple


def _injections(n):
    """Injective maps into [n+1] of dimension n, then of dimension n-1."""
    top = [phi for phi in enumerate_hom(n, n + 1) if is_injective(phi)]
    lower = [phi for phi in enumerate_hom(n - 1, n + 1) if is_injective(phi)] if n >= 1 else []
    return top, lower


def coskeletal_step(X, n):
    """
    The limit candidate for level n+1.

    For n = 0 this is X_0 × T X_0. For n >= 1 the vertex of an injection φ
    of dimension m is X_m when φ preserves the top and T X_m otherwise; the
    edge φ -> φ∘δ_j is the inner face, the last face, T of an inner face or
    m∘T of the last face, as the two ends require.

    Args:
        X: TSimplicialObject with depth >= n
        n: Truncation level

    Returns:
        CoskeletalStep
    """
    T = require_finiteness(X.monad, "coskeletal_step")
    if X.depth < n:
        raise DepthError(f"{X.name} has depth {X.depth} < {n}")

    if n == 0:
        level = product(X.level(0), T.obj(X.level(0)), name=f"C0{X.name}_1")
        faces = {0: projection(level, X.level(0), 0, "d0"), 1: projection(level, T.obj(X.level(0)), 1, "d1")}
        return CoskeletalStep(level, faces, ())

    top, lower = _injections(n)
    vertices = {}
    for phi in top + lower:
        m = phi.dom
        vertices[phi] = X.level(m) if phi.values[-1] == n + 1 else T.obj(X.level(m))

    edges = []
    for phi in top:
        preserves = phi.values[-1] == n + 1
        for j in range(n + 1):
            target = compose(phi, face(n - 1, j))
            target_preserves = target.values[-1] == n + 1
            if preserves and target_preserves:
                edge = X.face(n, j)
            elif preserves:
                edge = X.last_face(n)
            elif j < n:
                edge = X.lifted(X.face(n, j))
            else:
                T_last = X.lifted(X.last_face(n))
                edge = Morph(T.obj(X.level(n)), T.obj(X.level(n - 1)), lambda t, T_last=T_last: T.join(T_last(t)), "mTd")
            edges.append((phi, target, edge))

    carrier, projections = finite_limit(Diagram(vertices, tuple(edges)), f"C{n}{X.name}_{n + 1}")
    faces = {i: projections[face(n, i)] for i in range(n + 2)}
    logger.info("C_%d of %s: %d elements", n, X.name, len(carrier))
    return CoskeletalStep(carrier, faces, tuple(vertices))


def coskeletal_comparison(X, n, step):
    """
    X_{n+1} -> (C_n X)_{n+1}, x -> (φ* x)_φ with φ* the Kleisli restriction.
    """
    if n == 0:
        return Morph(X.level(1), step.level, lambda x: (X.face(1, 0)(x), X.last_face(1)(x)), "comparison")
    T = X.monad

    def restrict(phi, x):
        # Apply faces of [n+1] that φ skips, largest first; once the top is
        # skipped the remaining faces act under T
        missing = [c for c in range(n + 2) if c not in phi.image]
        level, lifted, value = n + 1, False, x
        for c in reversed(missing):
            if lifted:
                f = X.lifted(X.face(level, c)) if c < level else None
                value = f(value) if f is not None else T.join(X.lifted(X.last_face(level))(value))
            elif c == level:
                value = X.last_face(level)(value)
                lifted = True
            else:
                value = X.face(level, c)(value)
            level -= 1
        return value

    return Morph(X.level(n + 1), step.level, lambda x: tuple(restrict(phi, x) for phi in step.vertices), "comparison")


@dataclass(frozen=True, eq=False)
class DegenerateStep:
    """(D_n X)_{n+1} with the coprojections s_i: X_n -> (D_n X)_{n+1}."""

    level: FiniteSet
    degeneracies: dict
    representative: dict


def degenerate_step(X, n):
    """
    The colimit candidate for level n+1.

    Elements of the coproduct are (ψ values, x) for surjections ψ: [n+1] ->
    [m], m in {n, n-1}, and x in X_m. The relation (ψ', x) ~ (ψ, s_j x) for
    ψ' = σ_j∘ψ is closed by union-find; each class is named by its least
    element in canonical order.
    """
    if X.depth < n:
        raise DepthError(f"{X.name} has depth {X.depth} < {n}")
    if n == 0:
        level = X.level(0)
        s0 = Morph(X.level(0), level, lambda x: x, "s0")
        return DegenerateStep(level, {0: s0}, {x: x for x in level.elements})

    top = [psi for psi in enumerate_hom(n + 1, n) if is_surjective(psi)]
    lower = [psi for psi in enumerate_hom(n + 1, n - 1) if is_surjective(psi)]
    parent = {}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            if canonical_key(rb) < canonical_key(ra):
                ra, rb = rb, ra
            parent[rb] = ra

    for psi in top:
        for x in X.level(n).elements:
            parent[(psi.values, x)] = (psi.values, x)
    for psi in lower:
        for x in X.level(n - 1).elements:
            parent[(psi.values, x)] = (psi.values, x)

    for psi in top:
        for j in range(n):
            psi_low = compose(degeneracy(n - 1, j), psi)
            s_j = X.degeneracy(n - 1, j)
            for x in X.level(n - 1).elements:
                union((psi_low.values, x), (psi.values, s_j(x)))

    representative = {a: find(a) for a in parent}
    level = FiniteSet(tuple(set(representative.values())), f"D{n}{X.name}_{n + 1}")
    coprojections = {}
    for i in range(n + 1):
        sigma = degeneracy(n, i)
        coprojections[i] = Morph(
            X.level(n), level, lambda x, values=sigma.values: representative[(values, x)], f"s{i}"
        )
    logger.info("D_%d of %s: %d classes", n, X.name, len(level))
    return DegenerateStep(level, coprojections, representative)


def degenerate_comparison(X, n, step):
    """(D_n X)_{n+1} -> X_{n+1}, sending the class of (σ_i, x) to s_i x."""
    if n == 0:
        return Morph(step.level, X.level(1), X.degeneracy(0, 0), "comparison")
    table = {}
    for (values, x), rep in step.representative.items():
        if len(set(values)) == n + 1:
            i = next(k for k in range(n + 1) if values[k] == values[k + 1])
            table.setdefault(rep, X.degeneracy(n, i)(x))
    return Morph(step.level, X.level(n + 1), table.__getitem__, "comparison")
