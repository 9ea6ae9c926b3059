"""
Objects and morphisms of the computable base category.

This module handles:
- FiniteSet: an explicit, canonically ordered carrier
- FreeCarrier: a described but never enumerated carrier T(X)
- ProductSet: a lazy cartesian product used for codomains too large to list
- Morph: an evaluable map with an optional fiber oracle
- Basic morphism constructors (tables, identities, composites, projections,
  pairings, constants), carrier equality and elementwise comparison
"""

import logging
from dataclasses import dataclass, field
from itertools import product as cartesian
from math import prod
from typing import Callable

from ..utils.errors import CapabilityError, DomainError
from .elements import canonical_key, render

logger = logging.getLogger(__name__)


class SetObj:
    """Common interface of carriers."""

    name = "X"

    @property
    def is_finite(self):
        return False

    def contains(self, element):
        raise NotImplementedError

    def __contains__(self, element):
        return self.contains(element)


@dataclass(frozen=True, eq=False)
class FiniteSet(SetObj):
    """
    A finite carrier with elements in canonical order.

    Duplicates are dropped and the order is fixed on construction.
    """

    items: tuple
    name: str = "X"
    _members: frozenset = field(init=False, repr=False)
    _images: dict = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        members = frozenset(self.items)
        object.__setattr__(self, "_members", members)
        object.__setattr__(self, "items", tuple(sorted(members, key=canonical_key)))

    @property
    def is_finite(self):
        return True

    @property
    def elements(self):
        return self.items

    def contains(self, element):
        try:
            return element in self._members
        except TypeError:
            return False

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __repr__(self):
        return f"FiniteSet({self.name}, {len(self.items)} elements)"


@dataclass(frozen=True, eq=False)
class FreeCarrier(SetObj):
    """
    T(base) for a monad whose image is not materialized.

    Membership is decided structurally by the monad; enumeration is refused.
    """

    monad_name: str
    base: SetObj
    member: Callable = field(repr=False)
    name: str = "TX"
    _images: dict = field(default_factory=dict, init=False, repr=False)

    def contains(self, element):
        return self.member(element, self.base.contains)

    @property
    def elements(self):
        raise CapabilityError(f"cannot enumerate the free carrier {self.monad_name}({self.base.name})")

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        raise CapabilityError(f"free carrier {self.monad_name}({self.base.name}) has no finite size")


@dataclass(frozen=True, eq=False)
class ProductSet(SetObj):
    """Lazy product of carriers; elements are tuples."""

    factors: tuple
    name: str = "P"
    _images: dict = field(default_factory=dict, init=False, repr=False)

    @property
    def is_finite(self):
        return all(f.is_finite for f in self.factors)

    def contains(self, element):
        return (
            isinstance(element, tuple)
            and len(element) == len(self.factors)
            and all(f.contains(e) for f, e in zip(self.factors, element))
        )

    @property
    def elements(self):
        if not self.is_finite:
            raise CapabilityError(f"cannot enumerate the product {self.name}")
        return tuple(cartesian(*(f.elements for f in self.factors)))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return prod(len(f) for f in self.factors)


def finite_set(elements, name="X"):
    return FiniteSet(tuple(elements), name)


def materialize(carrier, name=None):
    """Returns a FiniteSet with the elements of any finite carrier."""
    if isinstance(carrier, FiniteSet):
        return carrier
    result = FiniteSet(tuple(carrier.elements), name or carrier.name)
    logger.debug("materialized %s with %d elements", result.name, len(result))
    return result


def product(*sets, name="P"):
    """Finite product as an explicit set of tuples, or lazy if any factor is infinite."""
    if all(s.is_finite for s in sets):
        return FiniteSet(tuple(cartesian(*(s.elements for s in sets))), name)
    return ProductSet(tuple(sets), name)


def require_finite(carrier, context):
    if not carrier.is_finite:
        raise CapabilityError(f"{context} needs a finite carrier, got {carrier!r}")
    return carrier


@dataclass(frozen=True, eq=False)
class Morph:
    """
    An evaluable map dom -> cod.

    `kind` records how the map was built (table, identity, composite, lift,
    unit, mult, projection, pairing, constant, named). `fiber`, when set,
    enumerates preimages without scanning the domain.
    """

    dom: SetObj
    cod: SetObj
    fn: Callable = field(repr=False)
    label: str = "f"
    kind: str = "named"
    fiber: Callable | None = field(default=None, repr=False)
    _index: dict = field(default_factory=dict, init=False, repr=False)

    def __call__(self, element):
        return self.fn(element)

    def __repr__(self):
        return f"Morph({self.label}: {self.dom.name} -> {self.cod.name})"


def evaluate(f, element):
    """
    Applies f to an element, checking both domain and codomain membership.

    Args:
        f: Morph
        element: A member of f.dom

    Returns:
        f(element), a member of f.cod
    """
    if not f.dom.contains(element):
        raise DomainError(f"{render(element)} is not in the domain {f.dom.name} of {f.label}")
    value = f(element)
    if not f.cod.contains(value):
        raise DomainError(
            f"{f.label} sends {render(element)} to {render(value)} outside {f.cod.name}",
            witness=element,
        )
    return value


def table(dom, cod, mapping, label="f"):
    """Morph given by an explicit association; every domain element must appear."""
    mapping = dict(mapping)
    if dom.is_finite:
        missing = [e for e in dom.elements if e not in mapping]
        if missing:
            raise DomainError(f"table {label} has no value for {render(missing[0])}", witness=missing[0])

    def lookup(element):
        try:
            return mapping[element]
        except KeyError:
            raise DomainError(f"table {label} has no value for {render(element)}", witness=element) from None

    return Morph(dom, cod, lookup, label, "table")


def identity(carrier):
    return Morph(carrier, carrier, lambda e: e, f"1_{carrier.name}", "identity", lambda c: [c])


def compose(*maps):
    """
    Composite of maps listed outermost first: compose(h, g, f) = h ∘ g ∘ f.
    """
    if not maps:
        raise DomainError("empty composite")
    chain = tuple(reversed(maps))

    def run(element):
        for f in chain:
            element = f(element)
        return element

    label = ".".join(f.label for f in maps)
    return Morph(maps[-1].dom, maps[0].cod, run, label, "composite")


def projection(dom, cod, index, label=None):
    """π_index on tuples; π_0 is the first component."""
    return Morph(dom, cod, lambda e: e[index], label or f"pi{index}", "projection")


def pairing(dom, cod, maps, label=None):
    """x -> (f_0 x, ..., f_k x)."""
    maps = tuple(maps)
    return Morph(dom, cod, lambda e: tuple(f(e) for f in maps), label or "pair", "pairing")


def constant(dom, cod, value, label=None):
    return Morph(dom, cod, lambda e: value, label or f"const_{render(value)}", "constant")


def named(dom, cod, fn, label):
    return Morph(dom, cod, fn, label, "named")


def _inverse_index(f):
    if "inverse" not in f._index:
        index = {}
        for element in f.dom.elements:
            index.setdefault(f(element), []).append(element)
        f._index["inverse"] = index
    return f._index["inverse"]


def fiber_of(f):
    """
    Fiber oracle of f: c -> list of b with f(b) = c.

    Uses f's own oracle if it has one, otherwise an inverse index over a finite domain.
    """
    if f.fiber is not None:
        return f.fiber
    if not f.dom.is_finite:
        raise CapabilityError(f"no fiber oracle for {f.label} out of the infinite carrier {f.dom.name}")
    index = _inverse_index(f)
    return lambda c: index.get(c, [])


def same_carrier(A, B):
    """
    Whether two carriers describe the same set.

    Finite carriers are compared by their elements, free carriers by monad
    and base, products factorwise. Anything else must be the same object.
    """
    if A is B:
        return True
    if isinstance(A, FiniteSet) and isinstance(B, FiniteSet):
        return A._members == B._members
    if isinstance(A, FreeCarrier) and isinstance(B, FreeCarrier):
        return A.monad_name == B.monad_name and same_carrier(A.base, B.base)
    if isinstance(A, ProductSet) and isinstance(B, ProductSet):
        return len(A.factors) == len(B.factors) and all(map(same_carrier, A.factors, B.factors))
    return False


def agree(f, g, domain=None):
    """
    Compares two maps elementwise.

    Args:
        f, g: Morphs with a common finite domain
        domain: Optional iterable of elements to test instead of f.dom

    Returns:
        The first element on which they differ, or None
    """
    elements = f.dom.elements if domain is None else domain
    for element in elements:
        if f(element) != g(element):
            return element
    return None


def as_table(f):
    """The graph of f over its finite domain as a dict."""
    return {e: f(e) for e in require_finite(f.dom, f"tabulating {f.label}").elements}


def table_key(f):
    """Hashable canonical form of a map over a finite domain."""
    return tuple(f(e) for e in f.dom.elements)


def is_bijection(f):
    """Returns (bijective, witness) for a map between finite sets."""
    seen = {}
    for element in f.dom.elements:
        value = f(element)
        if value in seen:
            return False, (seen[value], element)
        seen[value] = element
    for element in f.cod.elements:
        if element not in seen:
            return False, element
    return True, None
