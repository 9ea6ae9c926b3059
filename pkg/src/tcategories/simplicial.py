"""
Truncated T-simplicial objects and Δ_r-presheaves.

This module handles:
- TSimplicialObject: levels, inner faces, last faces into T, degeneracies
- Presheaf: the underlying Δ_r^op-presheaf (no last faces)
- The SA1-SA9 identity checker and the Segal (nerve) condition
- Morphism checks, the presheaf action of Δ_r maps, and the underlying
  Kleisli simplicial object
"""

import logging
from dataclasses import dataclass, field

import pandas as pd

from ..base_category.elements import render
from ..base_category.sets import Morph, compose, identity
from ..base_category.limits import is_pullback_square
from ..combinatorics.simplex import is_top_preserving, mono_epi
from ..monads.monad_engine import KleisliMorph, kleisli_compose
from ..utils.errors import DiagramError, DomainError, ExtensionError

logger = logging.getLogger(__name__)

CHECK_COLUMNS = ["axiom", "n", "i", "j", "checked", "passed", "witness"]


@dataclass(frozen=True, eq=False)
class Presheaf:
    """
    A truncated Δ_r^op-presheaf.

    faces[(n, i)]: X_n -> X_{n-1} for 0 <= i < n
    degeneracies[(n, i)]: X_n -> X_{n+1} for 0 <= i <= n < depth
    """

    levels: tuple
    faces: dict
    degeneracies: dict
    name: str = "P"

    @property
    def depth(self):
        return len(self.levels) - 1

    def level(self, n):
        return self.levels[n]

    def face(self, n, i):
        return self.faces.get((n, i)) if i < n else None

    def last_face(self, n):
        return None

    def degeneracy(self, n, i):
        return self.degeneracies.get((n, i))

    @property
    def monad(self):
        return None


@dataclass(frozen=True, eq=False)
class TSimplicialObject:
    """
    A depth-truncated T-simplicial object.

    faces[(n, i)] holds the inner faces X_n -> X_{n-1} for i < n and the last
    face X_n -> T X_{n-1} for i = n. Partial structures may omit maps; checks
    skip identities whose maps are absent.
    """

    monad: object
    levels: tuple
    faces: dict
    degeneracies: dict
    name: str = "X"
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def depth(self):
        return len(self.levels) - 1

    def level(self, n):
        return self.levels[n]

    def face(self, n, i):
        return self.faces.get((n, i)) if i < n else None

    def last_face(self, n):
        return self.faces.get((n, n))

    def degeneracy(self, n, i):
        return self.degeneracies.get((n, i))

    def lifted(self, f):
        """T(f), cached per morphism."""
        key = ("lift", id(f))
        cached = self._cache.get(key)
        if cached is None or cached[0] is not f:
            cached = (f, self.monad.lift(f))
            self._cache[key] = cached
        return cached[1]

    def comparison_index(self, n):
        """Groups X_n by the pair (d_0 x, d_n x)."""
        key = ("comparison", n)
        if key not in self._cache:
            first, last = self.face(n, 0), self.last_face(n)
            index = {}
            for x in self.levels[n].elements:
                index.setdefault((first(x), last(x)), []).append(x)
            self._cache[key] = index
        return self._cache[key]

    def segal_lift(self, n, first, last):
        """
        The unique x in X_n with d_0 x = first and d_n x = last.

        Raises:
            ExtensionError: when there is no such element or more than one
        """
        candidates = self.comparison_index(n).get((first, last), [])
        if len(candidates) != 1:
            raise ExtensionError(
                f"{len(candidates)} elements of {self.name}_{n} over ({render(first)}, {render(last)})",
                witness=(first, last),
            )
        return candidates[0]

    def presheaf(self):
        """The underlying Δ_r^op-presheaf (last faces dropped)."""
        inner = {key: f for key, f in self.faces.items() if key[1] < key[0]}
        return Presheaf(self.levels, inner, dict(self.degeneracies), self.name)

    def truncate(self, depth):
        faces = {key: f for key, f in self.faces.items() if key[0] <= depth}
        degeneracies = {key: s for key, s in self.degeneracies.items() if key[0] < depth}
        return TSimplicialObject(self.monad, self.levels[: depth + 1], faces, degeneracies, self.name)

    def sizes(self):
        return [len(level) for level in self.levels]


@dataclass(frozen=True, eq=False)
class TSimpMorphism:
    """Components f_n: X_n -> Y_n of a morphism of (T-simplicial objects or presheaves)."""

    source: object
    target: object
    components: tuple

    def __getitem__(self, n):
        return self.components[n]


def _lift(X, f):
    return X.lifted(f) if isinstance(X, TSimplicialObject) else X.monad.lift(f)


def _sa_instances(X):
    """
    Yields (axiom, n, i, j, level, lhs, rhs) for every SA identity in range.

    lhs and rhs are lists of maps applied left to right; None marks an
    instance whose maps are absent.
    """
    N = X.depth
    d, last, s = X.face, X.last_face, X.degeneracy
    T = X.monad

    def chain(*maps):
        return None if any(m is None for m in maps) else list(maps)

    for n in range(2, N + 1):
        for j in range(n):
            for i in range(j):
                yield "SA1", n, i, j, n, chain(d(n, i), d(n - 1, j - 1)), chain(d(n, j), d(n - 1, i))
        for i in range(n - 1):
            lhs = chain(d(n, i), last(n - 1))
            rhs = chain(last(n), d(n - 1, i))
            if rhs is not None:
                rhs = [last(n), _lift(X, d(n - 1, i))]
            yield "SA2", n, i, None, n, lhs, rhs
        lhs = chain(d(n, n - 1), last(n - 1))
        rhs = None
        if last(n) is not None and last(n - 1) is not None:
            rhs = [last(n), _lift(X, last(n - 1)), T.mult(X.level(n - 2))]
        yield "SA3", n, n - 1, None, n, lhs, rhs

    for n in range(0, N - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                yield "SA4", n, i, j, n, chain(s(n, i), s(n + 1, j + 1)), chain(s(n, j), s(n + 1, i))

    for n in range(0, N):
        for j in range(n + 1):
            if n >= 1 and j >= 1:
                for i in range(j):
                    yield "SA5", n, i, j, n, chain(s(n, j), d(n + 1, i)), chain(d(n, i), s(n - 1, j - 1))
            for i in (j, j + 1):
                if i != n + 1:
                    yield "SA6", n, i, j, n, chain(s(n, j), d(n + 1, i)), []
            if n >= 2 and j <= n - 2:
                for i in range(j + 2, n + 1):
                    yield "SA8", n, i, j, n, chain(s(n, j), d(n + 1, i)), chain(d(n, i - 1), s(n - 1, j))
            if n >= 1 and j < n:
                lhs = chain(s(n, j), last(n + 1))
                rhs = None
                if last(n) is not None and s(n - 1, j) is not None:
                    rhs = [last(n), _lift(X, s(n - 1, j))]
                yield "SA9", n, None, j, n, lhs, rhs
        lhs = chain(s(n, n), last(n + 1))
        rhs = [T.unit(X.level(n))] if T is not None else None
        yield "SA7", n, n, None, n, lhs, rhs


def _run(maps, element):
    for f in maps:
        element = f(element)
    return element


def check_sa_axioms(X, axioms=None):
    """
    Verifies the SA1-SA9 identities elementwise within depth.

    A Presheaf input has no last faces, so only SA1, SA4, SA5, SA6 and SA8
    are checked for it.

    Args:
        X: TSimplicialObject or Presheaf
        axioms: Optional collection of axiom names to restrict to

    Returns:
        DataFrame with columns axiom, n, i, j, checked, passed, witness
    """
    rows = []
    for axiom, n, i, j, level, lhs, rhs in _sa_instances(X):
        if axioms is not None and axiom not in axioms:
            continue
        if lhs is None or rhs is None:
            continue
        witness = None
        elements = X.level(level).elements
        for x in elements:
            if _run(lhs, x) != _run(rhs, x):
                witness = render(x)
                break
        rows.append({
            "axiom": axiom, "n": n, "i": i, "j": j,
            "checked": len(elements), "passed": witness is None, "witness": witness,
        })
    report = pd.DataFrame(rows, columns=CHECK_COLUMNS)
    failures = int((~report["passed"]).sum()) if len(report) else 0
    logger.info("%s: %d identity instances checked, %d failing", X.name, len(report), failures)
    return report


def check_presheaf_identities(P):
    return check_sa_axioms(P, axioms={"SA1", "SA4", "SA5", "SA6", "SA8"})


def check_well_typed(X):
    """Every structure map sends its domain into its codomain."""
    rows = []
    for kind, maps in (("face", X.faces), ("degeneracy", X.degeneracies)):
        for (n, i), f in sorted(maps.items()):
            witness = None
            for x in f.dom.elements:
                if not f.cod.contains(f(x)):
                    witness = render(x)
                    break
            rows.append({"axiom": f"{kind} typing", "n": n, "i": i, "j": None,
                         "checked": len(f.dom), "passed": witness is None, "witness": witness})
    return pd.DataFrame(rows, columns=CHECK_COLUMNS)


def summarize(report):
    """Pass counts per axiom, in the groupby style used for every report."""
    if report.empty:
        return pd.DataFrame(columns=["axiom", "instances", "failures"])
    return (
        report.groupby("axiom", sort=True)
        .agg(instances=("passed", "size"), failures=("passed", lambda p: int((~p).sum())))
        .reset_index()
    )


def segal_report(X):
    """
    Tests each square (d_0, d_n; d_{n-1}, T d_0) for 2 <= n <= depth.

    Returns:
        DataFrame with columns n, passed, witness
    """
    rows = []
    for n in range(2, X.depth + 1):
        try:
            ok, witness = is_pullback_square(
                X.face(n, 0), X.last_face(n), X.last_face(n - 1), _lift(X, X.face(n - 1, 0))
            )
        except DiagramError as exc:
            ok, witness = False, exc.witness
        rows.append({"n": n, "passed": ok, "witness": None if witness is None else render(witness)})
    return pd.DataFrame(rows, columns=["n", "passed", "witness"])


def check_segal(X):
    """True iff every Segal square within depth is a pullback."""
    return bool(segal_report(X)["passed"].all())


def check_morphism(f):
    """
    Checks that components commute with faces, last faces and degeneracies.

    Returns:
        DataFrame with columns square, n, i, passed, witness
    """
    X, Y = f.source, f.target
    depth = min(X.depth, Y.depth, len(f.components) - 1)
    rows = []

    def record(square, n, i, lhs, rhs, elements):
        witness = None
        for x in elements:
            if _run(lhs, x) != _run(rhs, x):
                witness = render(x)
                break
        rows.append({"square": square, "n": n, "i": i, "passed": witness is None, "witness": witness})

    for n in range(1, depth + 1):
        for i in range(n):
            if X.face(n, i) is not None and Y.face(n, i) is not None:
                record("face", n, i, [X.face(n, i), f[n - 1]], [f[n], Y.face(n, i)], X.level(n).elements)
        if X.last_face(n) is not None and Y.last_face(n) is not None:
            record("last face", n, n, [X.last_face(n), _lift(Y, f[n - 1])], [f[n], Y.last_face(n)], X.level(n).elements)
    for n in range(0, depth):
        for i in range(n + 1):
            if X.degeneracy(n, i) is not None and Y.degeneracy(n, i) is not None:
                record("degeneracy", n, i, [X.degeneracy(n, i), f[n + 1]], [f[n], Y.degeneracy(n, i)], X.level(n).elements)
    return pd.DataFrame(rows, columns=["square", "n", "i", "passed", "witness"])


def restrict(X, psi):
    """
    The presheaf action ψ*: X_n -> X_m of a top-preserving ψ: [m] -> [n].

    ψ = μ∘ε is split into a mono and an epi; faces for the values μ skips are
    applied largest first, then degeneracies for the positions ε repeats,
    smallest first.
    """
    if not is_top_preserving(psi):
        raise DomainError(f"{psi} is not top-preserving")
    missing, repeats = mono_epi(psi)
    maps = []
    level = psi.cod
    for c in reversed(missing):
        maps.append(X.face(level, c))
        level -= 1
    for j in repeats:
        maps.append(X.degeneracy(level, j))
        level += 1
    if not maps:
        return identity(X.level(psi.cod))
    return compose(*reversed(maps))


@dataclass(frozen=True, eq=False)
class KleisliSimplicial:
    """A truncated simplicial object in the Kleisli category of a monad."""

    monad: object
    levels: tuple
    faces: dict
    degeneracies: dict

    @property
    def depth(self):
        return len(self.levels) - 1


def underlying(X):
    """
    The two underlying objects of a T-simplicial object.

    Returns:
        Tuple (presheaf, kleisli): the Δ_r^op-presheaf, and the simplicial
        object in the Kleisli category whose inner faces and degeneracies are
        post-composed with the unit and whose last faces are kept as they are
    """
    T = X.monad

    def kleisli(f):
        body = Morph(f.dom, T.obj(f.cod), lambda e, f=f: T.pure(f(e)), f"i.{f.label}", "composite")
        return KleisliMorph(T, f.dom, f.cod, body)

    faces = {}
    for (n, i), f in X.faces.items():
        if i < n:
            faces[(n, i)] = kleisli(f)
        else:
            faces[(n, i)] = KleisliMorph(T, f.dom, X.level(n - 1), f)
    degeneracies = {key: kleisli(s) for key, s in X.degeneracies.items()}
    return X.presheaf(), KleisliSimplicial(T, X.levels, faces, degeneracies)


def check_kleisli_identities(K):
    """
    Checks the five families of simplicial identities in the Kleisli category.

    Returns:
        DataFrame with columns axiom, n, i, j, checked, passed, witness
    """
    rows = []
    d, s = K.faces.get, K.degeneracies.get
    N = K.depth

    def record(axiom, n, i, j, lhs, rhs):
        if any(m is None for m in lhs + rhs):
            return
        left = lhs[0] if len(lhs) == 1 else kleisli_compose(lhs[1], lhs[0])
        right = rhs[0] if len(rhs) == 1 else kleisli_compose(rhs[1], rhs[0])
        witness = None
        for x in K.levels[n].elements:
            if left(x) != right(x):
                witness = render(x)
                break
        rows.append({"axiom": axiom, "n": n, "i": i, "j": j, "checked": len(K.levels[n]),
                     "passed": witness is None, "witness": witness})

    for n in range(2, N + 1):
        for j in range(n + 1):
            for i in range(j):
                record("dd", n, i, j, [d((n, j)), d((n - 1, i))], [d((n, i)), d((n - 1, j - 1))])
    for n in range(0, N):
        for j in range(n + 1):
            identity_k = [KleisliMorph(K.monad, K.levels[n], K.levels[n], K.monad.unit(K.levels[n]))]
            for i in range(n + 2):
                if i < j:
                    if n >= 1:
                        record("ds", n, i, j, [s((n, j)), d((n + 1, i))], [d((n, i)), s((n - 1, j - 1))])
                elif i in (j, j + 1):
                    record("ds=1", n, i, j, [s((n, j)), d((n + 1, i))], identity_k)
                else:
                    record("ds", n, i, j, [s((n, j)), d((n + 1, i))], [d((n, i - 1)), s((n - 1, j))])
    for n in range(0, N - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                record("ss", n, i, j, [s((n, j)), s((n + 1, i))], [s((n, i)), s((n + 1, j + 1))])
    return pd.DataFrame(rows, columns=CHECK_COLUMNS)


def check_presheaf_morphism(f):
    """The face and degeneracy squares of a morphism of Δ_r^op-presheaves."""
    report = check_morphism(f)
    return report[report["square"] != "last face"].reset_index(drop=True)
