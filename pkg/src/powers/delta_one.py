"""
The power Δ[1] ⋔ X of a T-simplicial object.

This module handles:
- L_0 as the pullback of d_1 π_0: (G⋔X)_0 -> TX_0 against i: X_0 -> TX_0
- L_{n+1} as a hexagon limit over T L_n, X_{n+1} and (G⋔X)_{n+1}
- The T-simplicial structure of L, the maps p: L -> X and q: L -> G⋔X
- The universal 1-simplex, the universal property against sample objects,
  closure of Segal objects and the hexagon oracle
"""

import logging
from dataclasses import dataclass

import pandas as pd

from ..base_category.elements import render
from ..base_category.limits import finite_limit, hexagon_diagram, limit_hexagon, pullback
from ..base_category.sets import Morph, ProductSet, identity
from ..enrichment.hom import enumerate_hom_simplices, enumerate_tsimp_morphisms, validate_hom_simplex
from ..monads.monad_engine import require_finiteness
from ..tcategories.simplicial import (
    TSimpMorphism,
    TSimplicialObject,
    check_morphism,
    check_presheaf_morphism,
    check_sa_axioms,
    segal_report,
)
from ..utils.errors import DepthError, ExtensionError
from .power_g import composite_components, power_G, uhat_to_u

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class DeltaOnePower:
    """L = Δ[1] ⋔ X with p: L -> X (source) and q: L -> G⋔X."""

    L: TSimplicialObject
    p: TSimpMorphism
    q: TSimpMorphism
    power_g: object
    hexagons: dict

    @property
    def source(self):
        return self.p.target


def _element(level, n, beta, x, xi):
    """The element of L_n with last face beta, p = x and q = xi."""
    element = (xi, x) if n == 0 else ((xi, beta), (x, beta))
    if not level.contains(element):
        raise ExtensionError(f"no element of {level.name} over p = {render(x)}, q = {render(xi)}", witness=element)
    return element


def _p_of(n):
    return (lambda e: e[1]) if n == 0 else (lambda e: e[1][0])


def _q_of(n):
    return (lambda e: e[0]) if n == 0 else (lambda e: e[0][0])


def delta1_power(X, depth=None):
    """
    Builds Δ[1] ⋔ X up to depth (default X.depth - 1).

    The hexagon for L_{n+1} has corners
    - B = T L_n, A = ∏_{k<=n} T X_{n+1}, C = T X_n
    - D = X_{n+1}, E = T X_{n+1}, F = (G⋔X)_{n+1}, G = T X_n
    with legs a(β) = (T(π_k q_n) β)_k, b = T p_n, c = d_{n+1}, d = i,
    e = d_{n+2} π_{n+1}, f(ξ) = (d_{n+2} ξ_k)_{k<=n},
    g(η) = m T d_{n+1}(η_n), h = 1 and i = m T d_{n+1}.

    Args:
        X: TSimplicialObject over a finiteness-preserving monad

    Returns:
        DeltaOnePower
    """
    T = require_finiteness(X.monad, "delta1_power")
    depth = X.depth - 1 if depth is None else depth
    if X.depth < depth + 1:
        raise DepthError(f"Δ[1]⋔{X.name} at depth {depth} needs {X.name} at depth {depth + 1}")
    name = f"D1^{X.name}"
    PG = power_G(X, depth)

    # Step 1: L_0, arrows of X whose source is a plain object
    evaluation = Morph(PG.level(0), T.obj(X.level(0)), lambda xi: X.last_face(1)(xi[0]), "d1.pi0")
    P0 = pullback(evaluation, T.unit(X.level(0)), f"{name}_0")
    levels = [P0.carrier]
    p = [Morph(P0.carrier, X.level(0), _p_of(0), "p0", "projection")]
    q = [Morph(P0.carrier, PG.level(0), _q_of(0), "q0", "projection")]
    faces, degeneracies, hexagons = {}, {}, {}

    for n in range(depth):
        # Step 2: the hexagon for L_{n+1}
        Ln = levels[n]
        TLn = T.obj(Ln)
        TXn, TXn1 = T.obj(X.level(n)), T.obj(X.level(n + 1))
        last_n1, last_n2 = X.last_face(n + 1), X.last_face(n + 2)
        A = ProductSet(tuple(TXn1 for _ in range(n + 1)), f"A{n + 1}")
        q_n = q[n]
        legs = (
            Morph(TLn, A, lambda beta, q_n=q_n, n=n: tuple(
                T.fmap(lambda l, k=k: q_n(l)[k], beta) for k in range(n + 1)
            ), "a"),
            T.lift(p[n]),
            last_n1,
            T.unit(X.level(n + 1)),
            Morph(PG.level(n + 1), TXn1, lambda xi, last=last_n2, n=n: last(xi[n + 1]), "e"),
            Morph(PG.level(n + 1), A, lambda xi, last=last_n2, n=n: tuple(last(xi[k]) for k in range(n + 1)), "f"),
            Morph(A, TXn, lambda eta, last=last_n1, n=n: T.join(T.fmap(last, eta[n])), "g"),
            identity(TXn),
            Morph(TXn1, TXn, lambda t, last=last_n1: T.join(T.fmap(last, t)), "i"),
        )
        H = limit_hexagon(*legs, name=f"{name}_{n + 1}")
        hexagons[n + 1] = legs
        levels.append(H.carrier)
        faces[(n + 1, n + 1)] = Morph(H.carrier, TLn, H.projB.fn, f"d{n + 1}")
        p.append(Morph(H.carrier, X.level(n + 1), _p_of(n + 1), f"p{n + 1}", "projection"))
        q.append(Morph(H.carrier, PG.level(n + 1), _q_of(n + 1), f"q{n + 1}", "projection"))

        # Step 3: inner faces L_{n+1} -> L_n
        for i in range(n + 1):
            faces[(n + 1, i)] = Morph(
                H.carrier, Ln, _face_fn(T, X, PG, faces, levels, n, i), f"d{i}"
            )
        # Step 4: degeneracies L_n -> L_{n+1}
        for i in range(n + 1):
            degeneracies[(n, i)] = Morph(
                Ln, H.carrier, _degeneracy_fn(T, X, PG, faces, degeneracies, levels, p, q, n, i), f"s{i}"
            )

    L = TSimplicialObject(T, tuple(levels), faces, degeneracies, name)
    presheaf_L = L.presheaf()
    logger.info("%s: sizes %s", name, L.sizes())
    return DeltaOnePower(
        L,
        TSimpMorphism(L, X, tuple(p)),
        TSimpMorphism(presheaf_L, PG.presheaf, tuple(q)),
        PG,
        hexagons,
    )


def _face_fn(T, X, PG, faces, levels, n, i):
    """d_i: L_{n+1} -> L_n for i <= n."""
    d_x, d_g = X.face(n + 1, i), PG.presheaf.face(n + 1, i)
    target = levels[n]

    def fn(element):
        (xi, beta), (x, _) = element
        if n == 0:
            new_beta = None
        elif i < n:
            new_beta = T.fmap(faces[(n, i)], beta)
        else:
            new_beta = T.join(T.fmap(faces[(n, n)], beta))
        return _element(target, n, new_beta, d_x(x), d_g(xi))

    return fn


def _degeneracy_fn(T, X, PG, faces, degeneracies, levels, p, q, n, i):
    """s_i: L_n -> L_{n+1} for i <= n."""
    s_x, s_g = X.degeneracy(n, i), PG.presheaf.degeneracy(n, i)
    p_n, q_n = p[n], q[n]

    def fn(element):
        if i == n:
            new_beta = T.pure(element)
        else:
            new_beta = T.fmap(degeneracies[(n - 1, i)], faces[(n, n)](element))
        return _element(levels[n + 1], n + 1, new_beta, s_x(p_n(element)), s_g(q_n(element)))

    return fn


def universal_simplex(P):
    """
    The 1-simplex L -> X with u_{m,k} = d_k π_k q_m for k <= m and
    u_{m,m+1} = p_m.
    """
    return uhat_to_u(P.q.components, P.p.components, P.L, P.source)


def check_universal_diagrams(P):
    """
    p is a morphism of T-simplicial objects, q a morphism of presheaves, and
    the induced 1-simplex L -> X is valid.

    Returns:
        DataFrame with columns diagram, checked, passed, witness
    """
    rows = []
    for label, report in (
        ("p", check_morphism(P.p)),
        ("q", check_presheaf_morphism(P.q)),
        ("universal simplex", validate_hom_simplex(universal_simplex(P))),
    ):
        failed = report[~report["passed"]]
        rows.append({"diagram": label, "checked": len(report), "passed": failed.empty,
                     "witness": None if failed.empty else failed["witness"].iloc[0]})
    return pd.DataFrame(rows, columns=["diagram", "checked", "passed", "witness"])


def check_universal_property(P, samples):
    """
    For each sample Y, h -> (q h, p h) must send the morphisms Y -> L
    bijectively onto the 1-simplices of the hom from Y to X.

    Args:
        P: DeltaOnePower
        samples: TSimplicialObjects of depth >= 3

    Returns:
        DataFrame with columns sample, morphisms, simplices, passed
    """
    X = P.source
    rows = []
    for Y in samples:
        morphisms = enumerate_tsimp_morphisms(Y, P.L)
        images = {
            uhat_to_u(
                composite_components(P.q.components, h.components),
                composite_components(P.p.components, h.components),
                Y, X,
            ).key()
            for h in morphisms
        }
        simplices = {x.key() for x in enumerate_hom_simplices(Y, X, 1)}
        passed = images == simplices and len(images) == len(morphisms)
        logger.info("universal property at %s: %d morphisms, %d simplices", Y.name, len(morphisms), len(simplices))
        rows.append({"sample": Y.name, "morphisms": len(morphisms), "simplices": len(simplices), "passed": passed})
    return pd.DataFrame(rows, columns=["sample", "morphisms", "simplices", "passed"])


def check_power_closure(P):
    """
    The identities and Segal squares of L.

    Returns:
        Tuple (identities report, segal report)
    """
    return check_sa_axioms(P.L), segal_report(P.L)


def check_hexagon_oracle(P):
    """
    Each hexagon level against finite_limit, compared on (B, D, F).

    Returns:
        DataFrame with columns n, size, oracle_size, passed
    """
    rows = []
    for n, legs in sorted(P.hexagons.items()):
        carrier, _ = finite_limit(hexagon_diagram(*legs))
        oracle = {(solution[0], solution[5], solution[3]) for solution in carrier.elements}
        built = {(l[0][1], l[1][0], l[0][0]) for l in P.L.level(n).elements}
        rows.append({"n": n, "size": len(built), "oracle_size": len(oracle), "passed": oracle == built})
    return pd.DataFrame(rows, columns=["n", "size", "oracle_size", "passed"])
