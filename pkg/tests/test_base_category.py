import gc
import weakref

import pytest

from src.base_category.elements import NOTHING, ListOf, Tag, flatten_left, render, sort_canonical, to_json
from src.base_category.limits import (
    Diagram,
    equalizer,
    finite_limit,
    hexagon_diagram,
    is_pullback_square,
    limit_hexagon,
    pullback,
)
from src.base_category.sets import (
    FiniteSet,
    Morph,
    compose,
    constant,
    evaluate,
    fiber_of,
    identity,
    is_bijection,
    product,
    same_carrier,
    table,
)
from src.monads.monad_engine import list_monad, maybe_monad
from src.utils.errors import CapabilityError, DiagramError, DomainError, ExtensionError


def test_canonical_order_across_shapes():
    elements = ["b", 1, ("a",), "a", 0, Tag("just", "a"), ListOf(()), ("a", "b")]
    assert sort_canonical(elements) == (0, 1, "a", "b", ("a",), ("a", "b"), Tag("just", "a"), ListOf(()))


def test_render_and_json():
    assert render(Tag("just", "x")) == "just(x)"
    assert render(NOTHING) == "nothing"
    assert render(ListOf(("a", "b"))) == "[a, b]"
    assert render((1, ("a", 2))) == "(1, (a, 2))"
    assert to_json(("1", "x")) == ["1", "x"]
    assert to_json(ListOf(("a",))) == {"list": ["a"]}


def test_flatten_left():
    assert flatten_left(((1, 2), 3), 2) == (1, 2, 3)
    assert flatten_left(7, 0) == (7,)


def test_finite_set_is_canonical():
    X = FiniteSet(("b", "a", "b"), "X")
    assert X.elements == ("a", "b")
    assert len(X) == 2
    assert "a" in X and "c" not in X
    assert not X.contains([1])


def test_table_requires_every_value():
    X, Y = FiniteSet(("a", "b")), FiniteSet((0, 1))
    with pytest.raises(DomainError) as info:
        table(X, Y, {"a": 0})
    assert info.value.witness == "b"
    assert str(info.value).startswith("ERROR: ")


def test_evaluate_checks_codomain():
    X, Y = FiniteSet(("a",)), FiniteSet((0,))
    f = Morph(X, Y, lambda x: 1, "bad")
    with pytest.raises(DomainError):
        evaluate(f, "a")
    with pytest.raises(DomainError):
        evaluate(identity(X), "z")


def test_compose_is_outermost_first():
    X = FiniteSet((0, 1, 2))
    double = Morph(X, X, lambda x: (2 * x) % 3, "double")
    succ = Morph(X, X, lambda x: (x + 1) % 3, "succ")
    assert compose(double, succ)(1) == 1
    assert compose(succ, double)(1) == 0


def test_fiber_and_bijection():
    X, Y = FiniteSet((1, 2, 3)), FiniteSet((0, 1))
    parity = Morph(X, Y, lambda x: x % 2, "parity")
    assert sorted(fiber_of(parity)(1)) == [1, 3]
    assert fiber_of(parity)(5) == []
    ok, witness = is_bijection(parity)
    assert not ok and witness == (1, 3)
    assert is_bijection(identity(X)) == (True, None)


def test_fiber_index_does_not_outlive_the_map():
    X, Y = FiniteSet((1, 2, 3)), FiniteSet((0, 1))
    parity = Morph(X, Y, lambda x: x % 2, "parity")
    fiber = fiber_of(parity)
    assert fiber_of(parity)(0) == [2]
    alive = weakref.ref(parity)
    del parity
    gc.collect()
    assert alive() is None
    assert sorted(fiber(1)) == [1, 3]


def test_lifted_carriers_are_released_with_their_base():
    T = maybe_monad()
    X = FiniteSet(("a", "b"), "X")
    TX = T.obj(X)
    assert T.obj(X) is TX
    alive = weakref.ref(X)
    del X
    gc.collect()
    assert alive() is None
    assert len(TX) == 3


def test_same_carrier_compares_contents():
    A, B = FiniteSet(("a", "b"), "X"), FiniteSet(("b", "a"), "Y")
    assert same_carrier(A, B)
    assert not same_carrier(A, FiniteSet(("a", "c"), "X"))
    assert same_carrier(product(A, A), product(B, B))
    assert not same_carrier(list_monad().obj(A), list_monad().obj(FiniteSet(("a",), "X")))
    assert same_carrier(list_monad().obj(A), list_monad().obj(B))


def test_free_carrier_refuses_enumeration():
    TX = list_monad().obj(FiniteSet(("a",)))
    assert TX.contains(ListOf(("a", "a")))
    assert not TX.contains(ListOf(("b",)))
    with pytest.raises(CapabilityError):
        TX.elements
    with pytest.raises(CapabilityError):
        len(TX)


def test_product_sizes():
    X, Y = FiniteSet(("a", "b")), FiniteSet((0, 1, 2))
    assert len(product(X, Y)) == 6
    assert product(X, Y).contains(("a", 2))


def test_pullback_elements_and_lift():
    A, B, C = FiniteSet((1, 2, 3)), FiniteSet(("x", "y")), FiniteSet((0, 1))
    f = Morph(A, C, lambda a: a % 2, "f")
    g = table(B, C, {"x": 1, "y": 0}, "g")
    P = pullback(f, g)
    assert P.carrier.elements == ((1, "x"), (2, "y"), (3, "x"))
    assert P.lift(2, "y") == (2, "y")
    with pytest.raises(ExtensionError):
        P.lift(2, "x")


def test_pullback_against_free_carrier():
    T = list_monad()
    X = FiniteSet(("a",))
    n = FiniteSet((0, 1, 2))
    length = Morph(T.obj(X), n, len, "length", fiber=lambda k: [ListOf(("a",) * k)])
    P = pullback(identity(n), length)
    assert len(P.carrier) == 3


def test_finite_limit_matches_pullback():
    A, B, C = FiniteSet((1, 2, 3, 4)), FiniteSet(("x", "y")), FiniteSet((0, 1))
    f = Morph(A, C, lambda a: a % 2, "f")
    g = table(B, C, {"x": 1, "y": 0}, "g")
    carrier, projections = finite_limit(Diagram({"A": A, "B": B, "C": C}, (("A", "C", f), ("B", "C", g))))
    assert {(a, b) for a, b, _ in carrier.elements} == set(pullback(f, g).carrier.elements)
    assert projections["B"](carrier.elements[0]) == carrier.elements[0][1]


def test_equalizer():
    X = FiniteSet((0, 1, 2, 3))
    E, inclusion = equalizer(Morph(X, X, lambda x: x * x % 4, "sq"), identity(X))
    assert E.elements == (0, 1)
    assert inclusion(1) == 1


def _hexagon(g_value=0, h_value=0):
    S = FiniteSet((0, 1), "S")
    G = FiniteSet((0, 1), "G")
    one = identity(S)
    return (one, one, one, one, one, one,
            constant(S, G, g_value), constant(S, G, h_value), constant(S, G, 0))


def test_hexagon_limit_against_oracle():
    legs = _hexagon()
    H = limit_hexagon(*legs)
    assert len(H.carrier) == 2
    carrier, _ = finite_limit(hexagon_diagram(*legs))
    assert {(s[0], s[5], s[3]) for s in carrier.elements} == {
        (H.projB(l), H.projD(l), H.projF(l)) for l in H.carrier.elements
    }


def test_hexagon_must_commute():
    with pytest.raises(DiagramError):
        limit_hexagon(*_hexagon(g_value=0, h_value=1))


def test_pullback_square_recognition():
    A, C = FiniteSet((1, 2)), FiniteSet((0,))
    to_point = constant(A, C, 0)
    assert is_pullback_square(identity(A), identity(A), to_point, to_point) == (False, (1, 2))
    assert is_pullback_square(identity(A), identity(A), identity(A), identity(A)) == (True, None)
