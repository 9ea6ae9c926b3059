"""
Hom simplicial sets between T-simplicial objects.

This module handles:
- HomSimplex: an n-simplex of the hom simplicial set, stored by its
  components x_φ: Y_m -> X_m for m <= 2 and extended through the Segal
  inverse of the target above that
- Validation against the two compatibility conditions, faces and
  degeneracies of hom simplices
- Exhaustive enumeration of hom simplices of small degree
- Composition of 1-simplices (constructive and by search) and the Segal
  check of the hom simplicial set
- The comparison between T-functors and 0-simplices between nerves
"""

import logging
from dataclasses import dataclass, field
from itertools import product as cartesian

import pandas as pd

from ..base_category.elements import render
from ..base_category.limits import is_pullback_square
from ..base_category.sets import FiniteSet, Morph, table, table_key
from ..combinatorics.simplex import SimplexMap, compose, degeneracy, enumerate_hom, face
from ..tcategories.nerve import extend_tfunctor, nerve
from ..tcategories.simplicial import TSimpMorphism
from ..tcategories.tcat_core import enumerate_tfunctors
from ..utils.config import ENUMERATION_LIMIT
from ..utils.errors import DepthError, DomainError, EnumerationLimitError, ExtensionError

logger = logging.getLogger(__name__)

STORED_DEGREE = 2

VALIDATION_COLUMNS = ["condition", "m", "phi", "i", "passed", "witness"]


def _tabulate(dom, cod, fn, label):
    return table(dom, cod, {y: fn(y) for y in dom.elements}, label)


def _constant(m, n, value):
    return SimplexMap(m, n, (value,) * (m + 1))


@dataclass(frozen=True, eq=False)
class HomSimplex:
    """
    An n-simplex of the hom simplicial set from Y to X.

    components maps every φ: [m] -> [n] with m <= 2 to a table Morph
    Y_m -> X_m. Higher components are computed on demand and need X to
    satisfy the Segal condition.
    """

    degree: int
    source: object
    target: object
    components: dict
    _extended: dict = field(default_factory=dict, repr=False)

    def component(self, phi):
        if phi.dom <= STORED_DEGREE:
            return self.components[phi]
        if phi not in self._extended:
            self._extended[phi] = _extend(self, phi)
        return self._extended[phi]

    def key(self):
        """Canonical hashable form: the stored component tables in map order."""
        return tuple((phi.values, table_key(f)) for phi, f in sorted(self.components.items()))


def _extend(x, phi):
    """x_φ for dim φ > 2, the element of X_m over (x_{φδ0} d_0, T x_{φδm} d_m)."""
    m = phi.dom
    Y, X = x.source, x.target
    if m > min(Y.depth, X.depth):
        raise DepthError(f"component at degree {m} is beyond depth {min(Y.depth, X.depth)}")
    first = x.component(compose(phi, face(m - 1, 0)))
    T_last = X.monad.lift(x.component(compose(phi, face(m - 1, m))))
    d0, dm = Y.face(m, 0), Y.last_face(m)
    return _tabulate(
        Y.level(m), X.level(m), lambda y: X.segal_lift(m, first(d0(y)), T_last(dm(y))), f"x{phi.values}"
    )


def from_morphism(f):
    """The 0-simplex whose components are those of a morphism f."""
    components = {}
    for m in range(STORED_DEGREE + 1):
        components[_constant(m, 0, 0)] = f[m]
    return HomSimplex(0, f.source, f.target, components)


def to_morphism(x):
    """The morphism of T-simplicial objects given by a 0-simplex."""
    if x.degree != 0:
        raise DomainError(f"only 0-simplices are morphisms, got degree {x.degree}")
    depth = min(x.source.depth, x.target.depth)
    return TSimpMorphism(x.source, x.target, tuple(x.component(_constant(m, 0, 0)) for m in range(depth + 1)))


def hom_face(z, i):
    """(d_i z)_φ = z_{δ_i φ}."""
    n = z.degree
    if not 0 <= i <= n or n == 0:
        raise DomainError(f"no face d_{i} on a {n}-simplex")
    delta = face(n - 1, i)
    components = {
        phi: z.components[compose(delta, phi)]
        for m in range(STORED_DEGREE + 1)
        for phi in enumerate_hom(m, n - 1)
    }
    return HomSimplex(n - 1, z.source, z.target, components)


def hom_degeneracy(x, i):
    """(s_i x)_φ = x_{σ_i φ}."""
    n = x.degree
    if not 0 <= i <= n:
        raise DomainError(f"no degeneracy s_{i} on a {n}-simplex")
    sigma = degeneracy(n, i)
    components = {
        phi: x.components[compose(sigma, phi)]
        for m in range(STORED_DEGREE + 1)
        for phi in enumerate_hom(m, n + 1)
    }
    return HomSimplex(n + 1, x.source, x.target, components)


def identity_simplex(f):
    """The degenerate 1-simplex on a morphism f."""
    return hom_degeneracy(from_morphism(f), 0)


def _conditions(x, up_to):
    """
    Yields (condition, m, φ, i, lhs, rhs, elements) for every compatibility
    square up to degree `up_to`; lhs and rhs are maps applied left to right.
    """
    Y, X = x.source, x.target
    T = X.monad
    depth = min(Y.depth, X.depth)
    for m in range(up_to + 1):
        for phi in enumerate_hom(m, x.degree):
            here = x.component(phi)
            elements = Y.level(m).elements
            for i in range(m):
                below = x.component(compose(phi, face(m - 1, i)))
                yield "face", m, phi, i, [here, X.face(m, i)], [Y.face(m, i), below], elements
            if m >= 1:
                below = x.component(compose(phi, face(m - 1, m)))
                yield "last face", m, phi, m, [here, X.last_face(m)], [Y.last_face(m), T.lift(below)], elements
            if m < depth:
                for i in range(m + 1):
                    s_y, s_x = Y.degeneracy(m, i), X.degeneracy(m, i)
                    if s_y is None or s_x is None:
                        continue
                    above = x.component(compose(phi, degeneracy(m, i)))
                    yield "degeneracy", m, phi, i, [here, s_x], [s_y, above], elements


def _first_difference(lhs, rhs, elements):
    for y in elements:
        left, right = y, y
        for f in lhs:
            left = f(left)
        for f in rhs:
            right = f(right)
        if left != right:
            return y
    return None


def validate_hom_simplex(x, up_to=STORED_DEGREE):
    """
    Checks the Δ_r-naturality and last-face conditions of a hom simplex.

    Components above degree 2 are extended through the Segal inverse of the
    target; an impossible extension is reported as a failing row.

    Args:
        x: HomSimplex
        up_to: Highest component degree to check

    Returns:
        DataFrame with columns condition, m, phi, i, passed, witness
    """
    rows = []
    try:
        for condition, m, phi, i, lhs, rhs, elements in _conditions(x, up_to):
            witness = _first_difference(lhs, rhs, elements)
            rows.append({"condition": condition, "m": m, "phi": str(phi.values), "i": i,
                         "passed": witness is None, "witness": None if witness is None else render(witness)})
    except ExtensionError as exc:
        rows.append({"condition": "extension", "m": None, "phi": None, "i": None,
                     "passed": False, "witness": render(exc.witness)})
    return pd.DataFrame(rows, columns=VALIDATION_COLUMNS)


def is_valid(x, up_to=STORED_DEGREE):
    """Short-circuiting form of validate_hom_simplex."""
    try:
        return all(
            _first_difference(lhs, rhs, elements) is None
            for _, _, _, _, lhs, rhs, elements in _conditions(x, up_to)
        )
    except ExtensionError:
        return False


def enumerate_hom_simplices(Y, X, n, limit=ENUMERATION_LIMIT):
    """
    All valid n-simplices of the hom simplicial set from Y to X.

    Degree-0 components range over all functions Y_0 -> X_0. In degrees 1
    and 2 each element y of Y_m is sent into the fiber of (d_0, d_m) over
    (x_{φδ0}(d_0 y), T x_{φδm}(d_m y)), then every candidate is validated.

    Args:
        Y, X: TSimplicialObjects of depth >= 3
        n: Simplex degree
        limit: Maximum number of candidates to visit

    Returns:
        List of HomSimplex in enumeration order
    """
    if min(Y.depth, X.depth) < STORED_DEGREE + 1:
        raise DepthError(f"hom simplices need depth >= {STORED_DEGREE + 1}")
    T = X.monad
    phis = {m: enumerate_hom(m, n) for m in range(STORED_DEGREE + 1)}
    Y0, X0 = Y.level(0), X.level(0)
    functions = [
        table(Y0, X0, zip(Y0.elements, values), "x")
        for values in cartesian(X0.elements, repeat=len(Y0))
    ]
    lifts = {}
    visited = 0
    found = []

    def lifted(f):
        if id(f) not in lifts:
            lifts[id(f)] = (f, T.lift(f))
        return lifts[id(f)][1]

    def fill(m, components):
        if m > STORED_DEGREE:
            yield components
            return
        elements = Y.level(m).elements
        index = X.comparison_index(m)
        d0, dm = Y.face(m, 0), Y.last_face(m)
        slots = []
        for phi in phis[m]:
            first = components[compose(phi, face(m - 1, 0))]
            T_last = lifted(components[compose(phi, face(m - 1, m))])
            slots.append([index.get((first(d0(y)), T_last(dm(y))), []) for y in elements])
        for picks in cartesian(*(cartesian(*per_element) for per_element in slots)):
            extended = dict(components)
            for phi, values in zip(phis[m], picks):
                extended[phi] = table(Y.level(m), X.level(m), zip(elements, values), f"x{phi.values}")
            yield from fill(m + 1, extended)

    for choice in cartesian(functions, repeat=len(phis[0])):
        for components in fill(1, dict(zip(phis[0], choice))):
            visited += 1
            if visited > limit:
                raise EnumerationLimitError(f"more than {limit} candidate {n}-simplices {Y.name} -> {X.name}")
            x = HomSimplex(n, Y, X, components)
            if is_valid(x):
                found.append(x)
    logger.info("hom(%s, %s)_%d: %d simplices (%d candidates)", Y.name, X.name, n, len(found), visited)
    return found


def enumerate_tsimp_morphisms(Y, X, limit=ENUMERATION_LIMIT):
    """Morphisms Y -> X, read off from the 0-simplices of the hom."""
    return [to_morphism(x) for x in enumerate_hom_simplices(Y, X, 0, limit)]


def compose_one_simplices(x, y):
    """
    Composes 1-simplices x and y with d_0 x = d_1 y.

    Builds the 2-simplex z with d_2 z = x and d_0 z = y componentwise:
    - φ(0) > 0: z_φ = y_{σ0 φ}
    - φ(m) < 2: z_φ = x_{σ1 φ}
    - 1 in the image (otherwise): the element of X_m over
      (z_{φδ0} d_0, T z_{φδm} d_m)
    - image {0, 2}: z_φ = d_i z_{φ'} s_i with i the first position of 2
      and φ' the map with 1 inserted there

    Args:
        x, y: HomSimplex of degree 1 between the same objects

    Returns:
        Tuple (z, composite) with composite = d_1 z
    """
    if x.degree != 1 or y.degree != 1:
        raise DomainError("composition takes two 1-simplices")
    if x.source is not y.source or x.target is not y.target:
        raise DomainError("1-simplices live in different hom objects")
    if hom_face(x, 0).key() != hom_face(y, 1).key():
        raise DomainError("d_0 x and d_1 y differ")
    Y, X = x.source, x.target
    if min(Y.depth, X.depth) < STORED_DEGREE + 1:
        raise DepthError(f"composition needs depth >= {STORED_DEGREE + 1}")
    T = X.monad
    built = {}

    def z(phi):
        if phi in built:
            return built[phi]
        values, m = phi.values, phi.dom
        if values[0] > 0:
            result = y.component(compose(degeneracy(1, 0), phi))
        elif values[-1] < 2:
            result = x.component(compose(degeneracy(1, 1), phi))
        elif 1 in values:
            first = z(compose(phi, face(m - 1, 0)))
            T_last = T.lift(z(compose(phi, face(m - 1, m))))
            d0, dm = Y.face(m, 0), Y.last_face(m)
            result = _tabulate(
                Y.level(m), X.level(m), lambda a: X.segal_lift(m, first(d0(a)), T_last(dm(a))), f"z{values}"
            )
        else:
            i = values.index(2)
            raised = z(SimplexMap(m + 1, 2, values[:i] + (1,) + values[i:]))
            s_i, d_i = Y.degeneracy(m, i), X.face(m + 1, i)
            result = _tabulate(Y.level(m), X.level(m), lambda a: d_i(raised(s_i(a))), f"z{values}")
        built[phi] = result
        return result

    components = {phi: z(phi) for m in range(STORED_DEGREE + 1) for phi in enumerate_hom(m, 2)}
    simplex = HomSimplex(2, Y, X, components)
    return simplex, hom_face(simplex, 1)


def two_simplex_index(Y, X, limit=ENUMERATION_LIMIT):
    """All 2-simplices grouped by (d_0 z, d_2 z)."""
    index = {}
    for z in enumerate_hom_simplices(Y, X, 2, limit):
        index.setdefault((hom_face(z, 0).key(), hom_face(z, 2).key()), []).append(z)
    return index


def compose_by_search(x, y, index=None):
    """
    The composite of x and y found by exhaustive search over 2-simplices.

    Raises:
        ExtensionError: unless exactly one 2-simplex has d_2 z = x and d_0 z = y
    """
    index = index if index is not None else two_simplex_index(x.source, x.target)
    matches = index.get((y.key(), x.key()), [])
    if len(matches) != 1:
        raise ExtensionError(f"{len(matches)} 2-simplices fill the pair", witness=(x.key(), y.key()))
    return matches[0], hom_face(matches[0], 1)


def hom_level(Y, X, n, limit=ENUMERATION_LIMIT):
    """
    The n-simplices as a FiniteSet of keys.

    Returns:
        Tuple (FiniteSet of keys, dict key -> HomSimplex)
    """
    simplices = {x.key(): x for x in enumerate_hom_simplices(Y, X, n, limit)}
    return FiniteSet(tuple(simplices), f"hom({Y.name},{X.name})_{n}"), simplices


def hom_segal_report(Y, X, degree=2, limit=ENUMERATION_LIMIT):
    """
    Level sizes of the hom simplicial set and its Segal squares.

    For 2 <= n <= degree the square (d_0, d_n; d_{n-1}, d_0) of sets is
    tested for being a pullback.

    Returns:
        DataFrame with columns n, simplices, passed, witness
    """
    levels = [hom_level(Y, X, n, limit) for n in range(degree + 1)]
    rows = []
    for n, (carrier, simplices) in enumerate(levels):
        row = {"n": n, "simplices": len(carrier), "passed": True, "witness": None}
        if n >= 2:
            below, below_simplices = levels[n - 1]
            bottom_carrier = levels[n - 2][0]

            def face_map(dom, cod, lookup, i, label):
                return Morph(dom, cod, lambda k: hom_face(lookup[k], i).key(), label)

            top = face_map(carrier, below, simplices, 0, "d0")
            left = face_map(carrier, below, simplices, n, f"d{n}")
            right = face_map(below, bottom_carrier, below_simplices, n - 1, f"d{n - 1}")
            bottom = face_map(below, bottom_carrier, below_simplices, 0, "d0")
            ok, witness = is_pullback_square(top, left, right, bottom)
            row.update(passed=ok, witness=None if witness is None else render(witness))
        rows.append(row)
    return pd.DataFrame(rows, columns=["n", "simplices", "passed", "witness"])


def hom_segal_check(Y, X, degree=2, limit=ENUMERATION_LIMIT):
    """True iff every Segal square of the hom simplicial set up to `degree` is a pullback."""
    return bool(hom_segal_report(Y, X, degree, limit)["passed"].all())


def check_composition_laws(Y, X, limit=ENUMERATION_LIMIT):
    """
    Unit and associativity laws of 1-simplex composition, exhaustively.

    Returns:
        DataFrame with columns law, checked, passed, witness
    """
    ones = enumerate_hom_simplices(Y, X, 1, limit)
    target = {x.key(): hom_face(x, 0).key() for x in ones}
    source = {x.key(): hom_face(x, 1).key() for x in ones}

    def composite(x, y):
        return compose_one_simplices(x, y)[1]

    rows = []
    for law, side in (("left unit", 1), ("right unit", 0)):
        witness = None
        for x in ones:
            unit = hom_degeneracy(hom_face(x, side), 0)
            result = composite(unit, x) if side == 1 else composite(x, unit)
            if result.key() != x.key():
                witness = str(x.key())
                break
        rows.append({"law": law, "checked": len(ones), "passed": witness is None, "witness": witness})

    checked, witness = 0, None
    for x in ones:
        for y in ones:
            if target[x.key()] != source[y.key()]:
                continue
            xy = composite(x, y)
            for w in ones:
                if target[y.key()] != source[w.key()]:
                    continue
                checked += 1
                if composite(xy, w).key() != composite(x, composite(y, w)).key() and witness is None:
                    witness = str((x.key(), y.key(), w.key()))
    rows.append({"law": "associativity", "checked": checked, "passed": witness is None, "witness": witness})
    logger.info("composition laws on hom(%s, %s): %d arrows, %d triples", Y.name, X.name, len(ones), checked)
    return pd.DataFrame(rows, columns=["law", "checked", "passed", "witness"])


def check_fully_faithful(A, B, depth=3, limit=ENUMERATION_LIMIT):
    """
    Compares T-functors A -> B with morphisms between their nerves.

    Each T-functor is extended to a morphism of nerves; the resulting set of
    0-simplices must equal the enumerated hom at degree 0.

    Returns:
        DataFrame with one row: source, target, tfunctors, morphisms, passed
    """
    NA, NB = nerve(A, depth), nerve(B, depth)
    functors = enumerate_tfunctors(A, B, limit)
    from_functors = {from_morphism(extend_tfunctor(f0, f1, NA, NB)).key() for f0, f1 in functors}
    morphisms = {x.key() for x in enumerate_hom_simplices(NA, NB, 0, limit)}
    return pd.DataFrame([{
        "source": A.name, "target": B.name, "tfunctors": len(functors),
        "morphisms": len(morphisms), "passed": from_functors == morphisms and len(from_functors) == len(functors),
    }])
