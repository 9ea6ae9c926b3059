import pytest

from src.base_category.sets import FiniteSet, table
from src.tcategories.simplicial import check_sa_axioms, segal_report
from src.tcategories.tcat_core import (
    LADDER,
    TCatData,
    algebra_tcat,
    bar_resolution,
    chaotic_tcat,
    check_all,
    check_tfunctor,
    classify,
    compose_tfunctors,
    discrete_tcat,
    enumerate_tfunctors,
    ordinal_category,
    preorder_category,
)
from src.utils.errors import AlgebraError, EnumerationLimitError


def test_ordinal_category_is_a_tcategory(chain):
    report = check_all(chain)
    assert report["available"].all()
    assert report["passed"].all()
    assert classify(chain).top == "T-category"


@pytest.mark.parametrize("monad", ["ident", "maybe", "z2", "lists"])
def test_discrete_tcategory(monad, request):
    T = request.getfixturevalue(monad)
    data = discrete_tcat(FiniteSet(("a", "b")), T)
    assert check_all(data)["passed"].all()


@pytest.mark.parametrize("monad", ["ident", "maybe"])
def test_chaotic_tcategory(monad, request):
    T = request.getfixturevalue(monad)
    data = chaotic_tcat(FiniteSet(("a", "b")), T)
    assert check_all(data)["passed"].all()


def test_partial_data_is_classified_lower(arrow):
    graph_only = TCatData(arrow.graph)
    assert classify(graph_only).top == "T-graph"
    no_unit = TCatData(arrow.graph, arrow.comp, None, arrow._derived)
    assert classify(no_unit).top == "T-semicategory"
    no_comp = TCatData(arrow.graph, None, arrow.unit)
    assert classify(no_comp).top == "reflexive T-graph"
    report = check_all(graph_only)
    assert not report["available"].any()


def test_ladder_flags_are_upward_closed(arrow):
    structure = classify(arrow)
    assert all(name in structure for name in LADDER)
    assert structure.as_dict()["T-magmoid"]


def test_broken_composition_has_witness(arrow):
    X2 = arrow.X2().carrier
    outer_only = table(X2, arrow.graph.X1, {e: e[0] for e in X2.elements}, "comp")
    report = check_all(TCatData(arrow.graph, outer_only, arrow.unit, arrow._derived)).set_index("axiom")
    assert not report.loc["CA1", "passed"]
    assert report.loc["CA1", "witness"] == "((1, 1), (0, 1))"
    assert report.loc["CA2", "passed"]


def test_preorder_category(ident):
    divides = preorder_category([1, 2, 3, 6], lambda i, j: j % i == 0, ident, "divisors")
    assert len(divides.graph.X1) == 9
    assert classify(divides).top == "T-category"


def test_algebra_tcategory_and_bar_resolution(z2, z2_point):
    assert classify(z2_point).top == "T-category"
    A, a = z2_point.graph.X0, z2_point.graph.d0
    bar = bar_resolution(A, a, z2, 4)
    assert bar.sizes() == [1, 2, 4, 8, 16]
    assert check_sa_axioms(bar)["passed"].all()
    assert segal_report(bar)["passed"].all()


def test_swap_action_is_an_algebra(z2):
    A = FiniteSet((0, 1), "A")
    swap = table(z2.obj(A), A, {(g, x): (x if g == "1" else 1 - x) for g, x in z2.obj(A).elements}, "swap")
    data = algebra_tcat(A, swap, z2)
    assert check_all(data)["passed"].all()


def test_bad_action_is_rejected(z2):
    A = FiniteSet((0, 1), "A")
    collapse = table(z2.obj(A), A, {(g, x): (x if g == "1" else 0) for g, x in z2.obj(A).elements}, "collapse")
    with pytest.raises(AlgebraError) as info:
        algebra_tcat(A, collapse, z2)
    assert "associativity" in str(info.value)


def test_tfunctor_counts(point, arrow, discrete_ab):
    assert len(enumerate_tfunctors(point, arrow)) == 2
    assert len(enumerate_tfunctors(arrow, arrow)) == 3
    assert len(enumerate_tfunctors(discrete_ab, arrow)) == 4
    assert len(enumerate_tfunctors(arrow, discrete_ab)) == 2


def test_tfunctors_compose(arrow):
    functors = enumerate_tfunctors(arrow, arrow)
    for f in functors:
        for g in functors:
            h0, h1 = compose_tfunctors(g, f)
            assert check_tfunctor(h0, h1, arrow, arrow)["passed"].all()


def test_enumeration_limit(arrow):
    with pytest.raises(EnumerationLimitError):
        enumerate_tfunctors(arrow, arrow, limit=1)


def test_ordinal_sizes(ident):
    data = ordinal_category(3, ident)
    assert len(data.graph.X0) == 4
    assert len(data.graph.X1) == 10
    assert len(data.X2().carrier) == 20
