"""
Finitary monads on the computable base category.

This module handles:
- The Monad value: object action, structural map action, unit, multiplication
- Built-in monads: identity, maybe, writer over a finite monoid, reader over a
  finite set, and the (non finiteness-preserving) list monad
- Monoid validation for writer monads
- Monad law checks reported as DataFrames
- Kleisli morphisms and their composition
"""

import logging
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Callable

import pandas as pd

from ..base_category.elements import NOTHING, ListOf, Tag, render, sort_canonical
from ..base_category.sets import FiniteSet, FreeCarrier, Morph, fiber_of, same_carrier
from ..utils.config import LIST_LENGTH_BOUND
from ..utils.errors import CapabilityError, DomainError, MonoidError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Monoid:
    """A finite monoid given by its multiplication table."""

    elements: tuple
    unit: str
    table: dict = field(hash=False)

    def multiply(self, a, b):
        return self.table[(a, b)]

    def violation(self):
        """
        Finds the first failure of the monoid laws.

        Returns:
            None, or a tuple (law, witness) where the witness is a triple for
            associativity, a single element for the unit laws, or a pair for
            an undefined or out-of-range product
        """
        for a in self.elements:
            for b in self.elements:
                if (a, b) not in self.table or self.table[(a, b)] not in self.elements:
                    return "closure", (a, b)
        if self.unit not in self.elements:
            return "unit", self.unit
        for a in self.elements:
            if self.multiply(self.unit, a) != a or self.multiply(a, self.unit) != a:
                return "unit", a
        for a in self.elements:
            for b in self.elements:
                for c in self.elements:
                    if self.multiply(self.multiply(a, b), c) != self.multiply(a, self.multiply(b, c)):
                        return "associativity", (a, b, c)
        return None

    def validate(self):
        problem = self.violation()
        if problem is not None:
            law, witness = problem
            raise MonoidError(f"monoid table fails {law} at {witness}", witness=witness)
        return self


def cyclic_monoid(order, names=None):
    """ℤ/order with elements named "1", "g", "g2", ... unless names are given."""
    names = names or ["1"] + [("g" if k == 1 else f"g{k}") for k in range(1, order)]
    table = {(names[a], names[b]): names[(a + b) % order] for a in range(order) for b in range(order)}
    return Monoid(tuple(names), names[0], table)


@dataclass(frozen=True, eq=False)
class Monad:
    """
    A monad T = (T, m, i) acting on element values.

    Args:
        name: Identifier used in reports
        carrier: X -> elements of TX for a finite X (None for non-finite monads)
        fmap: (f, t) -> T(f)(t) for a plain function f
        pure: x -> i(x)
        join: tt -> m(tt)
        member: (t, base_contains) -> bool, membership of t in TX
        preserves_finiteness: whether TX is finite for finite X
        lift_fiber: optional (fiber of f) -> (fiber of Tf)
    """

    name: str
    carrier: Callable | None = field(repr=False)
    fmap: Callable = field(repr=False)
    pure: Callable = field(repr=False)
    join: Callable = field(repr=False)
    member: Callable = field(repr=False)
    preserves_finiteness: bool = True
    lift_fiber: Callable | None = field(default=None, repr=False)
    monoid: Monoid | None = None
    index_set: tuple | None = None

    def obj(self, X):
        """
        T applied to a carrier.

        Finite carriers under a finiteness-preserving monad are materialized
        (and cached on X); everything else becomes a FreeCarrier.
        """
        cached = X._images.get(id(self))
        if cached is not None and cached[0] is self:
            return cached[1]
        if self.name == "identity":
            result = X
        elif self.preserves_finiteness and X.is_finite:
            result = FiniteSet(tuple(self.carrier(X.elements)), f"{self.name}({X.name})")
        else:
            result = FreeCarrier(self.name, X, self.member, f"{self.name}({X.name})")
        X._images[id(self)] = (self, result)
        return result

    def lift(self, f):
        """T(f): T(dom) -> T(cod), with a fiber oracle when one can be derived."""
        fiber = None
        if self.lift_fiber is not None and (f.fiber is not None or f.dom.is_finite):
            fiber = self.lift_fiber(fiber_of(f))
        return Morph(self.obj(f.dom), self.obj(f.cod), lambda t: self.fmap(f, t), f"T{f.label}", "lift", fiber)

    def unit(self, X):
        return Morph(X, self.obj(X), self.pure, f"i{X.name}", "unit")

    def mult(self, X):
        return Morph(self.obj(self.obj(X)), self.obj(X), self.join, f"m{X.name}", "mult")

    def power(self, X, n):
        """T^n X."""
        for _ in range(n):
            X = self.obj(X)
        return X

    def lift_power(self, f, n):
        """T^n f."""
        for _ in range(n):
            f = self.lift(f)
        return f

    def __repr__(self):
        return f"Monad({self.name})"


def identity_monad():
    return Monad(
        name="identity",
        carrier=lambda xs: xs,
        fmap=lambda f, t: f(t),
        pure=lambda x: x,
        join=lambda t: t,
        member=lambda t, contains: contains(t),
        lift_fiber=lambda fiber: fiber,
    )


def maybe_monad():
    def fmap(f, t):
        return NOTHING if t == NOTHING else Tag("just", f(t.value))

    def join(t):
        return NOTHING if t == NOTHING else t.value

    def member(t, contains):
        return t == NOTHING or (isinstance(t, Tag) and t.label == "just" and contains(t.value))

    def lift_fiber(fiber):
        return lambda t: [NOTHING] if t == NOTHING else [Tag("just", b) for b in fiber(t.value)]

    return Monad(
        name="maybe",
        carrier=lambda xs: [NOTHING] + [Tag("just", x) for x in xs],
        fmap=fmap,
        pure=lambda x: Tag("just", x),
        join=join,
        member=member,
        lift_fiber=lift_fiber,
    )


def writer_monad(monoid, validate=True):
    """
    T X = M × X with i(x) = (1, x) and m(a, (b, x)) = (a·b, x).

    Args:
        monoid: Monoid
        validate: Reject tables failing the monoid laws

    Returns:
        Monad
    """
    if validate:
        monoid.validate()

    def member(t, contains):
        return isinstance(t, tuple) and len(t) == 2 and t[0] in monoid.elements and contains(t[1])

    def lift_fiber(fiber):
        return lambda t: [(t[0], b) for b in fiber(t[1])]

    return Monad(
        name=f"writer[{len(monoid.elements)}]",
        carrier=lambda xs: [(a, x) for a in monoid.elements for x in xs],
        fmap=lambda f, t: (t[0], f(t[1])),
        pure=lambda x: (monoid.unit, x),
        join=lambda t: (monoid.multiply(t[0], t[1][0]), t[1][1]),
        member=member,
        lift_fiber=lift_fiber,
        monoid=monoid,
    )


def reader_monad(index_set):
    """
    T X = X^S as tuples indexed by S in canonical order; m takes the diagonal.
    """
    index = tuple(index_set)
    size = len(index)

    def member(t, contains):
        return isinstance(t, tuple) and len(t) == size and all(contains(x) for x in t)

    def lift_fiber(fiber):
        return lambda t: [tuple(choice) for choice in cartesian(*(fiber(c) for c in t))]

    return Monad(
        name=f"reader[{size}]",
        carrier=lambda xs: list(cartesian(xs, repeat=size)),
        fmap=lambda f, t: tuple(f(x) for x in t),
        pure=lambda x: (x,) * size,
        join=lambda t: tuple(t[k][k] for k in range(size)),
        member=member,
        lift_fiber=lift_fiber,
        index_set=index,
    )


def list_monad():
    """The free monoid monad; TX is never materialized."""

    def member(t, contains):
        return isinstance(t, ListOf) and all(contains(x) for x in t.items)

    def lift_fiber(fiber):
        # Fiber of T f over [c_1..c_k] is the product of the fibers of f
        return lambda t: [ListOf(tuple(choice)) for choice in cartesian(*(fiber(c) for c in t.items))]

    return Monad(
        name="list",
        carrier=None,
        fmap=lambda f, t: ListOf(tuple(f(x) for x in t.items)),
        pure=lambda x: ListOf((x,)),
        join=lambda t: ListOf(tuple(x for inner in t.items for x in inner.items)),
        member=member,
        preserves_finiteness=False,
        lift_fiber=lift_fiber,
    )


def builtin(name, monoid=None, index_set=None):
    """
    Looks up a built-in monad.

    Args:
        name: identity, maybe, writer, reader or list
        monoid: Monoid for writer
        index_set: Finite iterable for reader

    Returns:
        Monad
    """
    if name == "identity":
        return identity_monad()
    if name == "maybe":
        return maybe_monad()
    if name == "writer":
        if monoid is None:
            raise DomainError("writer monad needs a monoid")
        return writer_monad(monoid)
    if name == "reader":
        if not index_set:
            raise DomainError("reader monad needs a non-empty index set")
        return reader_monad(sort_canonical(index_set))
    if name == "list":
        return list_monad()
    raise DomainError(f"unknown monad {name!r}")


def require_finiteness(T, context):
    if not T.preserves_finiteness:
        raise CapabilityError(f"{context} needs a finiteness-preserving monad, {T.name} is not")
    return T


def bounded_elements(T, X, level, bound=LIST_LENGTH_BOUND):
    """
    Elements of T^level X, truncated to lists of length <= bound for the list monad.
    """
    if level == 0:
        return list(X.elements)
    inner = bounded_elements(T, X, level - 1, bound)
    if T.preserves_finiteness:
        return list(T.carrier(inner)) if T.name != "identity" else inner
    result = []
    for length in range(bound + 1):
        result.extend(ListOf(tuple(items)) for items in cartesian(inner, repeat=length))
    return result


def check_monad_laws(T, X, bound=LIST_LENGTH_BOUND):
    """
    Checks the unit and associativity laws of T on a finite set.

    Args:
        T: Monad
        X: FiniteSet
        bound: List length bound for the list monad

    Returns:
        DataFrame with one row per law: law, checked, passed, witness
    """
    rows = []

    def record(law, elements, lhs, rhs):
        checked = 0
        witness = None
        for t in elements:
            checked += 1
            if lhs(t) != rhs(t):
                witness = render(t)
                break
        rows.append({"law": law, "checked": checked, "passed": witness is None, "witness": witness})

    ident = lambda x: x
    TX = bounded_elements(T, X, 1, bound)
    TTTX = bounded_elements(T, X, 3, bound)

    # Step 1: unit laws m∘iT = id = m∘Ti on TX
    record("left unit", TX, lambda t: T.join(T.pure(t)), ident)
    record("right unit", TX, lambda t: T.join(T.fmap(T.pure, t)), ident)

    # Step 2: associativity m∘Tm = m∘mT on T³X
    record("associativity", TTTX, lambda t: T.join(T.fmap(T.join, t)), lambda t: T.join(T.join(t)))

    # Step 3: T preserves identities
    record("functor identity", TX, lambda t: T.fmap(ident, t), ident)

    if T.monoid is not None:
        problem = T.monoid.violation()
        rows.append({
            "law": "monoid",
            "checked": len(T.monoid.elements) ** 3,
            "passed": problem is None,
            "witness": None if problem is None else f"{problem[0]} {problem[1]}",
        })

    report = pd.DataFrame(rows)
    logger.info("monad %s: %d/%d laws pass on %s", T.name, report["passed"].sum(), len(report), X.name)
    return report


@dataclass(frozen=True, eq=False)
class KleisliMorph:
    """A morphism dom -> cod of the Kleisli category, i.e. body: dom -> T cod."""

    monad: Monad
    dom: object
    cod: object
    body: Morph

    def __call__(self, element):
        return self.body(element)


def kleisli_identity(T, X):
    return KleisliMorph(T, X, X, T.unit(X))


def kleisli_from_morph(T, f):
    """The Kleisli morphism i∘f of a plain morphism."""
    return KleisliMorph(T, f.dom, f.cod, Morph(f.dom, T.obj(f.cod), lambda e: T.pure(f(e)), f"i.{f.label}", "composite"))


def kleisli_compose(g, f):
    """
    g ∘ f in the Kleisli category: m ∘ T(g.body) ∘ f.body.
    """
    if f.monad is not g.monad:
        raise DomainError("Kleisli morphisms over different monads")
    if not same_carrier(f.cod, g.dom):
        raise DomainError(f"cannot compose {g.body.label} after {f.body.label}")
    T = f.monad
    body = Morph(f.dom, T.obj(g.cod), lambda e: T.join(T.fmap(g.body, f.body(e))), f"{g.body.label}*{f.body.label}", "composite")
    return KleisliMorph(T, f.dom, g.cod, body)


def check_naturality(T, f):
    """
    Witness of a failure of unit or multiplication naturality along f, or None.
    """
    for x in f.dom.elements:
        if T.pure(f(x)) != T.fmap(f, T.pure(x)):
            return ("unit", x)
    for tt in bounded_elements(T, f.dom, 2):
        if T.join(T.fmap(lambda t: T.fmap(f, t), tt)) != T.fmap(f, T.join(tt)):
            return ("mult", tt)
    return None
