import pytest

from src.cli.documents import load_document
from src.combinatorics.simplex import enumerate_hom, simplex_map
from src.tcategories.nerve import extend_tfunctor, nerve, one_truncation
from src.tcategories.simplicial import (
    check_kleisli_identities,
    check_morphism,
    check_sa_axioms,
    check_segal,
    check_well_typed,
    restrict,
    segal_report,
    summarize,
    underlying,
)
from src.tcategories.tcat_core import classify, enumerate_tfunctors
from src.utils.errors import DomainError, ExtensionError


def test_nerve_sizes(arrow, chain, discrete_ab):
    assert nerve(arrow, 4).sizes() == [2, 3, 4, 5, 6]
    assert nerve(chain, 3).sizes() == [3, 6, 10, 15]
    assert nerve(discrete_ab, 3).sizes() == [2, 2, 2, 2]


@pytest.mark.parametrize("name", ["arrow", "chain", "discrete_ab", "z2_point"])
def test_nerve_satisfies_identities_and_segal(name, request):
    X = nerve(request.getfixturevalue(name), 3)
    assert check_well_typed(X)["passed"].all()
    report = check_sa_axioms(X)
    assert report["passed"].all()
    assert set(report["axiom"]) == {f"SA{k}" for k in range(1, 10)}
    assert check_segal(X)


def test_summary_counts(arrow_nerve):
    summary = summarize(check_sa_axioms(arrow_nerve))
    assert list(summary.columns) == ["axiom", "instances", "failures"]
    assert summary["failures"].sum() == 0


def test_segal_lift(arrow_nerve):
    X = arrow_nerve
    for x in X.level(2).elements:
        assert X.segal_lift(2, X.face(2, 0)(x), X.last_face(2)(x)) == x
    with pytest.raises(ExtensionError):
        X.segal_lift(2, (1, 1), (0, 0))


def test_multicategory_nerve(fixtures_dir):
    ws = load_document(fixtures_dir / "multicategory.json")
    assert classify(ws.data).top == "T-category"
    X = ws.build(3)
    assert len(X.level(2)) == 17
    assert check_sa_axioms(X)["passed"].all()
    assert segal_report(X)["passed"].all()


def test_extended_tfunctors_are_morphisms(arrow, chain):
    A, B = nerve(arrow, 3), nerve(chain, 3)
    functors = enumerate_tfunctors(arrow, chain)
    assert len(functors) == 6
    for f0, f1 in functors:
        f = extend_tfunctor(f0, f1, A, B)
        assert len(f.components) == 4
        assert check_morphism(f)["passed"].all()


def test_one_truncation_recovers_composition(arrow, arrow_nerve):
    data = one_truncation(arrow_nerve)
    assert classify(data).top == "T-category"
    for e in arrow.X2().carrier.elements:
        assert data.comp(e) == arrow.comp(e)


def test_restrict_matches_generators(chain):
    X = nerve(chain, 3)
    x = X.level(2).elements[0]
    assert restrict(X, simplex_map((0, 2), 2))(x) == X.face(2, 1)(x)
    for psi in enumerate_hom(1, 2, "delta_r"):
        action = restrict(X, psi)
        assert action.dom is X.level(2) and action.cod is X.level(1)
    with pytest.raises(DomainError):
        restrict(X, simplex_map((0, 1), 2))


def test_kleisli_identities(z2_point):
    X = nerve(z2_point, 3)
    presheaf, kleisli = underlying(X)
    assert presheaf.depth == kleisli.depth == 3
    assert check_kleisli_identities(kleisli)["passed"].all()


def test_truncate(arrow_nerve):
    assert arrow_nerve.truncate(1).sizes() == [2, 3]
    assert arrow_nerve.truncate(1).last_face(2) is None
