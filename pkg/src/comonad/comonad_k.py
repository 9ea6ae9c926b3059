"""
The comonad K on sequences and T-simplicial objects as its coalgebras.

This module handles:
- K(X)_0 = X_0 and K(X)_{n+1} = X_{n+1} × T K(X)_n, with counit ε and
  comultiplication δ, and the comonad laws checked elementwise
- The lift K̂ of K to Δ_r^op-presheaves (faces and degeneracies on K levels)
- ζ: X -> K̂X built from the last faces of a T-simplicial object, and the
  way back from a coalgebra to last faces
- Naturality of ζ, reported per case (top face, top degeneracy, the rest)

Only finiteness-preserving monads are accepted: K(X)_1 = X_1 × T X_0 must
be materialized.
"""

import logging
from dataclasses import dataclass

import pandas as pd

from ..base_category.elements import render
from ..base_category.sets import FreeCarrier, Morph, ProductSet, product
from ..monads.monad_engine import require_finiteness
from ..tcategories.simplicial import Presheaf, TSimplicialObject, check_presheaf_identities
from ..utils.errors import DepthError

logger = logging.getLogger(__name__)

CHECK_COLUMNS = ["law", "case", "n", "i", "checked", "passed", "witness"]


@dataclass(frozen=True, eq=False)
class Sequence:
    """Levels X_0..X_N with no structure maps."""

    levels: tuple
    name: str = "X"

    @property
    def depth(self):
        return len(self.levels) - 1


def _levels(X):
    return tuple(X.levels) if hasattr(X, "levels") else tuple(X)


def K_levels(X, T, name=None):
    """
    The materialized levels of K(X).

    Args:
        X: Sequence, Presheaf, TSimplicialObject or a tuple of FiniteSets
        T: Finiteness-preserving Monad

    Returns:
        Sequence with K(X)_{n+1} made of pairs (x, t), t in T K(X)_n
    """
    T = require_finiteness(T, "K_levels")
    levels = _levels(X)
    name = name or f"K{getattr(X, 'name', 'X')}"
    result = [levels[0]]
    for n in range(len(levels) - 1):
        result.append(product(levels[n + 1], T.obj(result[n]), name=f"{name}_{n + 1}"))
    logger.debug("%s: sizes %s", name, [len(level) for level in result])
    return Sequence(tuple(result), name)


def _lazy_K(levels, T, name):
    """K of a sequence of carriers without materializing anything."""
    result = [levels[0]]
    for n in range(len(levels) - 1):
        T_previous = FreeCarrier(T.name, result[n], T.member, f"{T.name}({result[n].name})")
        result.append(ProductSet((levels[n + 1], T_previous), f"{name}_{n + 1}"))
    return tuple(result)


def _counit_fns(depth):
    return [lambda k: k] + [lambda k: k[0] for _ in range(depth)]


def _comult_fns(depth, T):
    fns = [lambda k: k]
    for n in range(depth):
        fns.append(lambda k, below=fns[n]: (k, T.fmap(below, k[1])))
    return fns


def _K_on_fns(fns, T):
    """K(f)_0 = f_0 and K(f)_{n+1}(x, t) = (f_{n+1} x, T K(f)_n t)."""
    result = [fns[0]]
    for n in range(len(fns) - 1):
        result.append(lambda k, top=fns[n + 1], below=result[n]: (top(k[0]), T.fmap(below, k[1])))
    return result


def K_on_morphism(components, X, Y, T):
    """
    K applied to a levelwise family f_n: X_n -> Y_n.

    Returns:
        List of Morphs K(X)_n -> K(Y)_n
    """
    KX, KY = K_levels(X, T), K_levels(Y, T)
    fns = _K_on_fns(list(components), T)
    return [Morph(KX.levels[n], KY.levels[n], fns[n], f"K{n}") for n in range(len(fns))]


def K_counit(X, T):
    """ε_0 = 1 and ε_{n+1} = π_1, as Morphs K(X)_n -> X_n."""
    KX, levels = K_levels(X, T), _levels(X)
    return [Morph(KX.levels[n], levels[n], fn, f"eps{n}") for n, fn in enumerate(_counit_fns(KX.depth))]


def K_comult(X, T):
    """
    δ_0 = 1 and δ_{n+1}(k) = (k, T δ_n(π_2 k)).

    The codomains KK(X)_n are described, not materialized.
    """
    KX = K_levels(X, T)
    KK = _lazy_K(KX.levels, T, f"K{KX.name}")
    return [Morph(KX.levels[n], KK[n], fn, f"delta{n}") for n, fn in enumerate(_comult_fns(KX.depth, T))]


def _law_row(law, case, n, i, elements, lhs, rhs):
    witness = None
    for k in elements:
        if lhs(k) != rhs(k):
            witness = render(k)
            break
    return {"law": law, "case": case, "n": n, "i": i, "checked": len(elements),
            "passed": witness is None, "witness": witness}


def check_comonad_laws(X, T):
    """
    ε K ∘ δ = 1, K ε ∘ δ = 1 and δ K ∘ δ = K δ ∘ δ on every level of K(X).

    Returns:
        DataFrame with columns law, case, n, i, checked, passed, witness
    """
    KX = K_levels(X, T)
    depth = KX.depth
    eps, delta = _counit_fns(depth), _comult_fns(depth, T)
    K_eps, K_delta = _K_on_fns(eps, T), _K_on_fns(delta, T)
    rows = []
    for n, level in enumerate(KX.levels):
        elements = level.elements
        rows.append(_law_row("left counit", "", n, None, elements, lambda k: eps[n](delta[n](k)), lambda k: k))
        rows.append(_law_row("right counit", "", n, None, elements, lambda k: K_eps[n](delta[n](k)), lambda k: k))
        rows.append(_law_row("coassociativity", "", n, None, elements,
                             lambda k: delta[n](delta[n](k)), lambda k: K_delta[n](delta[n](k))))
    report = pd.DataFrame(rows, columns=CHECK_COLUMNS)
    logger.info("comonad laws on %s: %d rows, %d failing", KX.name, len(report), int((~report["passed"]).sum()))
    return report


def _lifted_fns(face, degeneracy, depth, T):
    """
    Faces and degeneracies of K̂ as element functions.

    face(n, i) and degeneracy(n, i) are those of the input presheaf.

    Returns:
        Tuple (faces, degeneracies) of dicts keyed by (n, i)
    """
    faces, degeneracies = {}, {}
    for n in range(1, depth + 1):
        for i in range(n):
            d = face(n, i)
            if n == 1:
                faces[(1, 0)] = lambda k, d=d: d(k[0])
            elif i == n - 1:
                # t in T K_{n-1}; π_2 lands in T K_{n-2}
                faces[(n, i)] = lambda k, d=d: (d(k[0]), T.join(T.fmap(lambda e: e[1], k[1])))
            else:
                faces[(n, i)] = lambda k, d=d, below=faces[(n - 1, i)]: (d(k[0]), T.fmap(below, k[1]))
    for n in range(depth):
        for i in range(n + 1):
            s = degeneracy(n, i)
            if i == n:
                counit = (lambda k: k) if n == 0 else (lambda k: k[0])
                degeneracies[(n, i)] = lambda k, s=s, counit=counit: (s(counit(k)), T.pure(k))
            else:
                degeneracies[(n, i)] = lambda k, s=s, below=degeneracies[(n - 1, i)]: (s(k[0]), T.fmap(below, k[1]))
    return faces, degeneracies


def lift_K(P, T, name=None):
    """
    K̂P: the Δ_r^op-presheaf on the levels of K(P).

    - d_0 on K_1 is d_0 ∘ π_1
    - the top inner face on K_{n+1} is (d_n x, m(T π_2 t))
    - the other faces are (d_i x, T d_i t)
    - s_n on K_n is (s_n ε k, i k), the others (s_i x, T s_i t)

    Args:
        P: Presheaf (or the presheaf of a TSimplicialObject)
        T: Finiteness-preserving Monad

    Returns:
        Presheaf
    """
    if isinstance(P, TSimplicialObject):
        P = P.presheaf()
    KP = K_levels(P, T, name or f"K^{P.name}")
    faces, degeneracies = _lifted_fns(P.face, P.degeneracy, P.depth, T)
    levels = KP.levels
    face_maps = {key: Morph(levels[key[0]], levels[key[0] - 1], fn, f"d{key[1]}") for key, fn in faces.items()}
    degeneracy_maps = {key: Morph(levels[key[0]], levels[key[0] + 1], fn, f"s{key[1]}")
                       for key, fn in degeneracies.items()}
    return Presheaf(levels, face_maps, degeneracy_maps, KP.name)


def check_lifted_comonad(P, T):
    """
    K̂P is a presheaf and ε, δ commute with its faces and degeneracies.

    The faces of K̂K̂P are evaluated elementwise on the images of δ, never
    materialized.

    Returns:
        DataFrame with columns law, case, n, i, checked, passed, witness
    """
    if isinstance(P, TSimplicialObject):
        P = P.presheaf()
    KP = lift_K(P, T)
    identities = check_presheaf_identities(KP)
    rows = [
        {"law": "presheaf", "case": axiom, "n": n, "i": i, "checked": checked, "passed": passed, "witness": witness}
        for axiom, n, i, checked, passed, witness in zip(
            identities["axiom"], identities["n"], identities["i"],
            identities["checked"], identities["passed"], identities["witness"])
    ]
    depth = P.depth
    eps, delta = _counit_fns(depth), _comult_fns(depth, T)
    KK_faces, KK_degeneracies = _lifted_fns(KP.face, KP.degeneracy, depth, T)
    for (n, i), d in KP.faces.items():
        elements = KP.level(n).elements
        rows.append(_law_row("counit natural", "face", n, i, elements,
                             lambda k, n=n, d=d: eps[n - 1](d(k)), lambda k, n=n, i=i: P.face(n, i)(eps[n](k))))
        rows.append(_law_row("comult natural", "face", n, i, elements,
                             lambda k, n=n, d=d: delta[n - 1](d(k)), lambda k, n=n, i=i: KK_faces[(n, i)](delta[n](k))))
    for (n, i), s in KP.degeneracies.items():
        elements = KP.level(n).elements
        rows.append(_law_row("counit natural", "degeneracy", n, i, elements,
                             lambda k, n=n, s=s: eps[n + 1](s(k)), lambda k, n=n, i=i: P.degeneracy(n, i)(eps[n](k))))
        rows.append(_law_row("comult natural", "degeneracy", n, i, elements,
                             lambda k, n=n, s=s: delta[n + 1](s(k)),
                             lambda k, n=n, i=i: KK_degeneracies[(n, i)](delta[n](k))))
    return pd.DataFrame(rows, columns=CHECK_COLUMNS)


@dataclass(frozen=True, eq=False)
class CoalgebraData:
    """A Δ_r^op-presheaf with ζ_n: X_n -> K̂X_n."""

    carrier: Presheaf
    zeta: tuple
    monad: object


def zeta_fns(last_face, depth, T):
    """ζ_0 = 1 and ζ_{n+1}(x) = (x, T ζ_n(d_{n+1} x))."""
    fns = [lambda x: x]
    for n in range(depth):
        d = last_face(n + 1)
        fns.append(lambda x, d=d, below=fns[n]: (x, T.fmap(below, d(x))))
    return fns


def tsimp_to_coalgebra(X):
    """
    The K̂-coalgebra of a T-simplicial object.

    Returns:
        CoalgebraData on the underlying presheaf of X
    """
    T = require_finiteness(X.monad, "tsimp_to_coalgebra")
    P = X.presheaf()
    KP = K_levels(P, T)
    zeta = tuple(
        Morph(P.level(n), KP.levels[n], fn, f"zeta{n}")
        for n, fn in enumerate(zeta_fns(X.last_face, X.depth, T))
    )
    return CoalgebraData(P, zeta, T)


def coalgebra_to_tsimp(C, name=None):
    """
    The T-simplicial object of a coalgebra: d_{n+1} = T ε_n ∘ π_2 ∘ ζ_{n+1}.
    """
    T = require_finiteness(C.monad, "coalgebra_to_tsimp")
    P = C.carrier
    if len(C.zeta) < P.depth + 1:
        raise DepthError(f"ζ has {len(C.zeta)} components for depth {P.depth}")
    eps = _counit_fns(P.depth)
    faces = dict(P.faces)
    for n in range(P.depth):
        zeta, counit = C.zeta[n + 1], eps[n]
        faces[(n + 1, n + 1)] = Morph(
            P.level(n + 1), T.obj(P.level(n)), lambda x, zeta=zeta, counit=counit: T.fmap(counit, zeta(x)[1]),
            f"d{n + 1}",
        )
    return TSimplicialObject(T, P.levels, faces, dict(P.degeneracies), name or P.name)


def _naturality_case(kind, n, i):
    """delta: top inner face; sigma: top degeneracy; phi+1: every other generator."""
    if kind == "face" and i == n - 1:
        return "delta"
    if kind == "degeneracy" and i == n:
        return "sigma"
    return "phi+1"


def check_coalgebra(C):
    """
    Counit, coassociativity and naturality of ζ.

    Naturality rows are labelled "delta" (top inner face), "sigma" (top
    degeneracy) or "phi+1" (the rest).

    Returns:
        DataFrame with columns law, case, n, i, checked, passed, witness
    """
    T = C.monad
    P = C.carrier
    depth = P.depth
    eps, delta = _counit_fns(depth), _comult_fns(depth, T)
    zeta = [z.fn for z in C.zeta]
    K_zeta = _K_on_fns(zeta, T)
    faces, degeneracies = _lifted_fns(P.face, P.degeneracy, depth, T)
    rows = []
    for n in range(depth + 1):
        elements = P.level(n).elements
        rows.append(_law_row("counit", "", n, None, elements, lambda x, n=n: eps[n](zeta[n](x)), lambda x: x))
        rows.append(_law_row("coassociativity", "", n, None, elements,
                             lambda x, n=n: K_zeta[n](zeta[n](x)), lambda x, n=n: delta[n](zeta[n](x))))
    for (n, i), d in sorted(P.faces.items()):
        rows.append(_law_row("naturality", _naturality_case("face", n, i), n, i, P.level(n).elements,
                             lambda x, n=n, d=d: zeta[n - 1](d(x)), lambda x, n=n, i=i: faces[(n, i)](zeta[n](x))))
    for (n, i), s in sorted(P.degeneracies.items()):
        rows.append(_law_row("naturality", _naturality_case("degeneracy", n, i), n, i, P.level(n).elements,
                             lambda x, n=n, s=s: zeta[n + 1](s(x)),
                             lambda x, n=n, i=i: degeneracies[(n, i)](zeta[n](x))))
    report = pd.DataFrame(rows, columns=CHECK_COLUMNS)
    logger.info("coalgebra on %s: %d failing rows", P.name, int((~report["passed"]).sum()))
    return report


def check_roundtrip(X):
    """
    X -> coalgebra -> X gives back the last faces, and the rebuilt coalgebra
    has the same ζ.

    Returns:
        DataFrame with columns law, case, n, i, checked, passed, witness
    """
    C = tsimp_to_coalgebra(X)
    Y = coalgebra_to_tsimp(C, X.name)
    D = tsimp_to_coalgebra(Y)
    rows = []
    for n in range(1, X.depth + 1):
        rows.append(_law_row("roundtrip", "last face", n, n, X.level(n).elements, X.last_face(n), Y.last_face(n)))
    for n in range(X.depth + 1):
        rows.append(_law_row("roundtrip", "zeta", n, None, X.level(n).elements, C.zeta[n], D.zeta[n]))
    return pd.DataFrame(rows, columns=CHECK_COLUMNS)
