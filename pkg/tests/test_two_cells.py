import pytest

from src.base_category.sets import table
from src.enrichment.hom import (
    check_composition_laws,
    compose_by_search,
    compose_one_simplices,
    enumerate_hom_simplices,
    hom_face,
    is_valid,
    two_simplex_index,
)
from src.enrichment.two_cells import (
    TNatTransformation,
    alpha_to_hat,
    check_interchange,
    enumerate_hat_cells,
    enumerate_two_cells,
    hat_to_alpha,
    hat_to_hom,
    hom_to_hat,
    identity_two_cell,
    validate_two_cell,
    vertical_compose,
    whisker,
)
from src.tcategories.nerve import nerve
from src.tcategories.tcat_core import enumerate_tfunctors
from src.utils.errors import DomainError


@pytest.fixture
def functors(arrow):
    return enumerate_tfunctors(arrow, arrow)


@pytest.fixture
def identity_functor(functors, arrow):
    return next(f for f in functors if all(f[0](a) == a for a in arrow.graph.X0.elements))


def test_two_cell_counts(arrow_nerve, functors):
    total = 0
    for f in functors:
        for g in functors:
            cells = enumerate_two_cells(arrow_nerve, arrow_nerve, f, g)
            hats = enumerate_hat_cells(arrow_nerve, arrow_nerve, f, g)
            assert len(cells) == len(hats)
            total += len(cells)
    assert total == 6
    assert total == len(enumerate_hom_simplices(arrow_nerve, arrow_nerve, 1))


def test_presentations_correspond(arrow_nerve, functors):
    for f in functors:
        for g in functors:
            for t in enumerate_two_cells(arrow_nerve, arrow_nerve, f, g):
                hat = alpha_to_hat(t)
                assert hat_to_alpha(hat).key() == t.key()
            for c in enumerate_hat_cells(arrow_nerve, arrow_nerve, f, g):
                assert alpha_to_hat(hat_to_alpha(c)).key() == c.key()


def test_hat_cells_are_hom_simplices(arrow_nerve, functors):
    for f in functors:
        for g in functors:
            for c in enumerate_hat_cells(arrow_nerve, arrow_nerve, f, g):
                x = hat_to_hom(c)
                assert is_valid(x)
                assert hom_to_hat(x, f, g).key() == c.key()
                assert hom_face(x, 1).degree == 0


def test_identity_two_cell(arrow_nerve, functors):
    for f in functors:
        unit = identity_two_cell(arrow_nerve, arrow_nerve, f)
        assert validate_two_cell(unit)["passed"].all()
        for g in functors:
            for t in enumerate_two_cells(arrow_nerve, arrow_nerve, f, g):
                assert vertical_compose(t, unit).key() == t.key()


def test_vertical_composites_are_natural(arrow_nerve, functors):
    for f in functors:
        for g in functors:
            for h in functors:
                for alpha in enumerate_two_cells(arrow_nerve, arrow_nerve, f, g):
                    for beta in enumerate_two_cells(arrow_nerve, arrow_nerve, g, h):
                        assert validate_two_cell(vertical_compose(beta, alpha))["passed"].all()


def test_vertical_compose_rejects_mismatch(arrow_nerve, functors, identity_functor):
    others = [f for f in functors if f is not identity_functor]
    alpha = identity_two_cell(arrow_nerve, arrow_nerve, others[0])
    beta = identity_two_cell(arrow_nerve, arrow_nerve, others[1])
    with pytest.raises(DomainError):
        vertical_compose(beta, alpha)


def test_whiskering_and_interchange(arrow_nerve, functors):
    cells = [
        t
        for f in functors
        for g in functors
        for t in enumerate_two_cells(arrow_nerve, arrow_nerve, f, g)
    ]
    for alpha in cells:
        for h in functors:
            assert validate_two_cell(whisker(alpha, h, "post", arrow_nerve))["passed"].all()
            assert validate_two_cell(whisker(alpha, h, "pre", arrow_nerve))["passed"].all()
        for gamma in cells:
            assert check_interchange(alpha, gamma, arrow_nerve)["passed"].all()
    with pytest.raises(DomainError):
        whisker(cells[0], functors[0], "sideways", arrow_nerve)


def test_mistyped_transformation(arrow_nerve, identity_functor):
    X0 = arrow_nerve.level(0)
    loop = arrow_nerve.degeneracy(0, 0)(X0.elements[0])
    alpha = table(X0, arrow_nerve.level(1), {a: loop for a in X0.elements}, "alpha")
    t = TNatTransformation(arrow_nerve, arrow_nerve, identity_functor, identity_functor, alpha)
    report = validate_two_cell(t).set_index("condition")
    assert not report.loc["target", "passed"]
    with pytest.raises(DomainError):
        alpha_to_hat(t)


@pytest.mark.parametrize("source, target, total", [
    ("point", "arrow", 3),
    ("arrow", "arrow", 6),
    ("arrow", "chain", 20),
])
def test_two_cells_follow_the_pointwise_order(source, target, total, request):
    A_data, B_data = request.getfixturevalue(source), request.getfixturevalue(target)
    A, B = nerve(A_data, 3), nerve(B_data, 3)
    objects = A_data.graph.X0.elements
    functors = enumerate_tfunctors(A_data, B_data)
    found = 0
    for f in functors:
        for g in functors:
            expected = int(all(f[0](a) <= g[0](a) for a in objects))
            cells = enumerate_two_cells(A, B, f, g)
            assert len(cells) == expected
            assert len(enumerate_hat_cells(A, B, f, g)) == expected
            for t in cells:
                assert hat_to_alpha(alpha_to_hat(t)).key() == t.key()
            found += len(cells)
    assert found == total
    assert len(enumerate_hom_simplices(A, B, 1)) == total


def test_no_two_cell_against_the_order(point, arrow):
    A, B = nerve(point, 3), nerve(arrow, 3)
    functors = enumerate_tfunctors(point, arrow)
    top = next(f for f in functors if f[0](0) == 1)
    bottom = next(f for f in functors if f[0](0) == 0)
    assert enumerate_two_cells(A, B, top, bottom) == []
    assert len(enumerate_two_cells(A, B, bottom, top)) == 1


@pytest.mark.parametrize("source, target", [("point", "arrow"), ("arrow", "chain")])
def test_hom_composition_on_ordinal_pairs(source, target, request):
    A = nerve(request.getfixturevalue(source), 3)
    B = nerve(request.getfixturevalue(target), 3)
    assert check_composition_laws(A, B)["passed"].all()
    ones = enumerate_hom_simplices(A, B, 1)
    index = two_simplex_index(A, B)
    for x in ones:
        for y in ones:
            if hom_face(x, 0).key() != hom_face(y, 1).key():
                continue
            z, composite = compose_one_simplices(x, y)
            assert is_valid(z)
            assert composite.key() == compose_by_search(x, y, index)[1].key()
