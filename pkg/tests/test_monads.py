import pytest

from src.base_category.elements import NOTHING, ListOf, Tag
from src.base_category.sets import FiniteSet, Morph, table
from src.monads.monad_engine import (
    KleisliMorph,
    Monoid,
    builtin,
    check_monad_laws,
    check_naturality,
    cyclic_monoid,
    identity_monad,
    kleisli_compose,
    kleisli_from_morph,
    kleisli_identity,
    list_monad,
    maybe_monad,
    reader_monad,
    require_finiteness,
    writer_monad,
)
from src.utils.errors import CapabilityError, DomainError, MonoidError

X = FiniteSet(("a", "b"), "X")


def corrupted_monoid():
    rows = {
        ("1", "1"): "1", ("1", "a"): "a", ("1", "b"): "b",
        ("a", "1"): "a", ("a", "a"): "b", ("a", "b"): "1",
        ("b", "1"): "b", ("b", "a"): "a", ("b", "b"): "b",
    }
    return Monoid(("1", "a", "b"), "1", rows)


@pytest.mark.parametrize("T", [
    identity_monad(),
    maybe_monad(),
    writer_monad(cyclic_monoid(3)),
    reader_monad((0, 1)),
    list_monad(),
], ids=lambda T: T.name)
def test_monad_laws(T):
    report = check_monad_laws(T, X)
    assert report["passed"].all()
    assert set(report["law"]) >= {"left unit", "right unit", "associativity"}


def test_materialized_carriers():
    assert len(maybe_monad().obj(X)) == 3
    assert len(writer_monad(cyclic_monoid(2)).obj(X)) == 4
    assert len(reader_monad((0, 1, 2)).obj(X)) == 8
    assert identity_monad().obj(X) is X


def test_obj_is_cached():
    T = maybe_monad()
    assert T.obj(X) is T.obj(X)


def test_corrupted_monoid_witness():
    with pytest.raises(MonoidError) as info:
        corrupted_monoid().validate()
    assert info.value.witness == ("a", "a", "a")
    assert info.value.exit_code == 2


def test_writer_rejects_bad_monoid():
    with pytest.raises(MonoidError):
        writer_monad(corrupted_monoid())


def test_list_is_not_finiteness_preserving():
    with pytest.raises(CapabilityError):
        require_finiteness(list_monad(), "test")
    assert require_finiteness(maybe_monad(), "test").name == "maybe"


def test_lifted_fibers():
    T = maybe_monad()
    Y = FiniteSet((0,), "Y")
    f = table(X, Y, {"a": 0, "b": 0}, "f")
    fiber = T.lift(f).fiber
    assert sorted(fiber(Tag("just", 0)), key=lambda t: t.value) == [Tag("just", "a"), Tag("just", "b")]
    assert fiber(NOTHING) == [NOTHING]

    L = list_monad()
    assert len(L.lift(f).fiber(ListOf((0, 0)))) == 4


def test_builtin_lookup():
    assert builtin("identity").name == "identity"
    assert builtin("reader", index_set=[1, "a"]).index_set == (1, "a")
    with pytest.raises(DomainError):
        builtin("writer")
    with pytest.raises(DomainError):
        builtin("state")


def test_kleisli_category():
    T = maybe_monad()
    f = kleisli_from_morph(T, Morph(X, X, lambda x: "b", "to_b"))
    partial = Morph(X, T.obj(X), lambda x: NOTHING if x == "a" else Tag("just", "a"), "partial")
    g = KleisliMorph(T, X, X, partial)

    left = kleisli_compose(kleisli_identity(T, X), f)
    right = kleisli_compose(f, kleisli_identity(T, X))
    for x in X.elements:
        assert left(x) == f(x) == right(x)
    composite = kleisli_compose(g, f)
    assert composite("a") == Tag("just", "a")
    assert kleisli_compose(f, g)("a") == NOTHING


def test_kleisli_compose_checks_carriers_not_names():
    T = maybe_monad()
    other = FiniteSet(("a", "c"), "X")
    f = kleisli_from_morph(T, Morph(X, X, lambda x: "a", "to_a"))
    h = kleisli_from_morph(T, Morph(other, other, lambda x: "c", "to_c"))
    with pytest.raises(DomainError):
        kleisli_compose(h, f)
    same = FiniteSet(("b", "a"), "copy")
    k = kleisli_from_morph(T, Morph(same, same, lambda x: x, "id"))
    assert kleisli_compose(k, f)("b") == Tag("just", "a")


@pytest.mark.parametrize("T", [maybe_monad(), writer_monad(cyclic_monoid(2)), list_monad()], ids=lambda T: T.name)
def test_unit_and_multiplication_are_natural(T):
    f = Morph(X, X, lambda x: "a", "const")
    assert check_naturality(T, f) is None


def test_monoid_law_row_for_writer():
    report = check_monad_laws(writer_monad(cyclic_monoid(2)), X)
    assert "monoid" in set(report["law"])
