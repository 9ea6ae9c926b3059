"""
Finite limits in the computable base category.

This module handles:
- Pullbacks along maps with fiber oracles (elements are pairs (a, b))
- Products, equalizers and the generic brute-force finite limit
- The hexagon limit assembled from three pullbacks and a fourth
- Pullback-square recognition by the canonical comparison map
"""

import logging
from dataclasses import dataclass, field

from ..utils.errors import CapabilityError, DiagramError, ExtensionError
from .elements import render
from .sets import FiniteSet, Morph, compose, fiber_of, is_bijection, projection, require_finite

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Pullback:
    """P = A ×_C B with projections p1: P -> A, p2: P -> B."""

    carrier: FiniteSet
    p1: Morph
    p2: Morph
    f: Morph = field(repr=False)
    g: Morph = field(repr=False)

    def __iter__(self):
        return iter((self.carrier, self.p1, self.p2))

    def lift(self, a, b):
        """The element induced by a cone (a, b); raises if f(a) != g(b)."""
        if self.f(a) != self.g(b):
            raise ExtensionError(f"({render(a)}, {render(b)}) is not a cone over {self.f.label}, {self.g.label}")
        return (a, b)


def pullback(f, g, name="P"):
    """
    Pullback of f: A -> C against g: B -> C.

    A must be finite; the fibers of g are read from its oracle, so B may be a
    free carrier.

    Args:
        f: Morph out of a finite set
        g: Morph with a fiber oracle (or a finite domain)
        name: Name for the resulting carrier

    Returns:
        Pullback with elements (a, b) such that f(a) = g(b)
    """
    require_finite(f.dom, f"pullback along {f.label}")
    fiber = fiber_of(g)
    # Step 1: for each a, pair it with the g-fiber over f(a)
    elements = []
    for a in f.dom.elements:
        for b in fiber(f(a)):
            elements.append((a, b))
    carrier = FiniteSet(tuple(elements), name)
    p1 = projection(carrier, f.dom, 0, "p1")
    p2 = projection(carrier, g.dom, 1, "p2")
    logger.debug("pullback %s of %s and %s has %d elements", name, f.label, g.label, len(carrier))
    return Pullback(carrier, p1, p2, f, g)


def product_with_projections(a, b, name="P"):
    """Binary product with projections, as a pullback over the terminal set."""
    require_finite(a, "product")
    require_finite(b, "product")
    elements = tuple((x, y) for x in a.elements for y in b.elements)
    carrier = FiniteSet(elements, name)
    return carrier, projection(carrier, a, 0, "p1"), projection(carrier, b, 1, "p2")


def equalizer(f, g, name="E"):
    """The subset of the finite domain where f and g agree, with its inclusion."""
    require_finite(f.dom, "equalizer")
    carrier = FiniteSet(tuple(e for e in f.dom.elements if f(e) == g(e)), name)
    inclusion = Morph(carrier, f.dom, lambda e: e, "incl", "identity")
    return carrier, inclusion


@dataclass(frozen=True)
class Diagram:
    """
    A finite diagram: vertex names mapped to carriers and edges
    (source, target, morph).
    """

    vertices: dict
    edges: tuple = ()


def finite_limit(diagram, name="L"):
    """
    Brute-force limit of a finite diagram.

    Elements are tuples indexed by the vertex order of the diagram. A vertex
    reached by an edge from an already assigned vertex is forced, otherwise
    all its elements are tried.

    Returns:
        Tuple (carrier, projections) with projections a dict vertex -> Morph
    """
    names = list(diagram.vertices)
    position = {v: k for k, v in enumerate(names)}
    for v in names:
        if not diagram.vertices[v].is_finite:
            raise CapabilityError(f"finite_limit needs finite vertices, {v} is not")

    incoming = {v: [] for v in names}
    checks = {v: [] for v in names}
    for source, target, morph in diagram.edges:
        later = source if position[source] > position[target] else target
        checks[later].append((source, target, morph))
        if position[source] < position[target]:
            incoming[target].append((source, morph))

    solutions = []

    def extend(assigned):
        k = len(assigned)
        if k == len(names):
            solutions.append(tuple(assigned))
            return
        vertex = names[k]
        carrier = diagram.vertices[vertex]
        if incoming[vertex]:
            source, morph = incoming[vertex][0]
            value = morph(assigned[position[source]])
            candidates = [value] if carrier.contains(value) else []
        else:
            candidates = carrier.elements
        for candidate in candidates:
            assigned.append(candidate)
            if all(
                m(assigned[position[s]]) == assigned[position[t]]
                for s, t, m in checks[vertex]
            ):
                extend(assigned)
            assigned.pop()

    extend([])
    carrier = FiniteSet(tuple(solutions), name)
    projections = {
        v: projection(carrier, diagram.vertices[v], position[v], f"pi_{v}") for v in names
    }
    return carrier, projections


@dataclass(frozen=True, eq=False)
class HexagonLimit:
    carrier: FiniteSet
    projB: Morph
    projD: Morph
    projF: Morph


def limit_hexagon(a, b, c, d, e, f, g, h, i, name="L"):
    """
    Limit of the hexagon B -> A <- F -> E <- D -> C <- B over G.

    Built as follows:
    - U = pullback of f and a, V = pullback of c and b
    - W = pullback of i and g∘a = h∘b
    - x: U -> W, (φ, β) -> (e φ, β) and y: V -> W, (x, β) -> (d x, β)
    - L = pullback of x and y, elements ((φ, β), (x, β))

    Args:
        a: B -> A, b: B -> C, c: D -> C, d: D -> E, e: F -> E, f: F -> A,
        g: A -> G, h: C -> G, i: E -> G

    Returns:
        HexagonLimit with projections to B, D and F
    """
    # Step 1: the three composites into G must agree where they meet
    for source, left, right, label in (
        (b.dom, compose(g, a), compose(h, b), "g.a = h.b"),
        (c.dom, compose(h, c), compose(i, d), "h.c = i.d"),
        (f.dom, compose(g, f), compose(i, e), "g.f = i.e"),
    ):
        if source.is_finite:
            for element in source.elements:
                if left(element) != right(element):
                    raise DiagramError(f"hexagon does not commute: {label} fails at {render(element)}", witness=element)

    # Step 2: the three corner pullbacks
    U = pullback(f, a, f"{name}_U")
    V = pullback(c, b, f"{name}_V")
    W = pullback(i, compose(g, a), f"{name}_W")

    # Step 3: induced maps into W and their pullback
    x = Morph(U.carrier, W.carrier, lambda u: (e(u[0]), u[1]), "x")
    y_map = Morph(V.carrier, W.carrier, lambda v: (d(v[0]), v[1]), "y")
    L = pullback(x, y_map, name)

    carrier = L.carrier
    projB = Morph(carrier, b.dom, lambda l: l[0][1], "projB", "projection")
    projD = Morph(carrier, d.dom, lambda l: l[1][0], "projD", "projection")
    projF = Morph(carrier, f.dom, lambda l: l[0][0], "projF", "projection")
    logger.debug("hexagon %s: |U|=%d |V|=%d |W|=%d |L|=%d", name, len(U.carrier), len(V.carrier), len(W.carrier), len(carrier))
    return HexagonLimit(carrier, projB, projD, projF)


def hexagon_diagram(a, b, c, d, e, f, g, h, i):
    """
    The hexagon (without G) as a Diagram for the finite_limit oracle.

    Corners A, C, E that are not materialized are replaced by the images of
    the two legs into them, which leaves the limit unchanged.
    """

    def corner(carrier, *legs):
        if carrier.is_finite:
            return carrier
        return FiniteSet(tuple(leg(x) for leg in legs for x in leg.dom.elements), carrier.name)

    vertices = {
        "B": a.dom,
        "A": corner(a.cod, a, f),
        "C": corner(b.cod, b, c),
        "F": f.dom,
        "E": corner(e.cod, e, d),
        "D": c.dom,
    }
    edges = (("B", "A", a), ("B", "C", b), ("D", "C", c), ("D", "E", d), ("F", "E", e), ("F", "A", f))
    return Diagram(vertices, edges)


def is_pullback_square(top, left, right, bottom):
    """
    Decides whether a commuting square is a pullback.

    The square is apex -top-> A -right-> C and apex -left-> B -bottom-> C.
    The comparison apex -> A ×_C B is tested for bijectivity.

    Returns:
        Tuple (is_pullback, witness)
    """
    apex = require_finite(top.dom, "pullback square apex")
    for element in apex.elements:
        if right(top(element)) != bottom(left(element)):
            raise DiagramError(f"square does not commute at {render(element)}", witness=element)
    P = pullback(right, bottom)
    comparison = Morph(apex, P.carrier, lambda z: (top(z), left(z)), "comparison")
    return is_bijection(comparison)
