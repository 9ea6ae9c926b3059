import pytest

from src.enrichment.hom import (
    check_composition_laws,
    check_fully_faithful,
    compose_by_search,
    compose_one_simplices,
    enumerate_hom_simplices,
    enumerate_tsimp_morphisms,
    from_morphism,
    hom_degeneracy,
    hom_face,
    hom_segal_report,
    identity_simplex,
    is_valid,
    to_morphism,
    two_simplex_index,
    validate_hom_simplex,
)
from src.tcategories.nerve import nerve
from src.tcategories.simplicial import check_morphism
from src.utils.errors import DepthError, DomainError


@pytest.mark.parametrize("source, degree, expected", [
    ("point_nerve", 0, 2),
    ("point_nerve", 1, 3),
    ("arrow_nerve", 0, 3),
    ("arrow_nerve", 1, 6),
])
def test_hom_sizes_into_the_arrow(source, degree, expected, request, arrow_nerve):
    Y = request.getfixturevalue(source)
    assert len(enumerate_hom_simplices(Y, arrow_nerve, degree)) == expected


def test_hom_needs_three_levels(arrow):
    shallow = nerve(arrow, 2)
    with pytest.raises(DepthError):
        enumerate_hom_simplices(shallow, shallow, 0)


def test_zero_simplices_are_morphisms(arrow_nerve):
    morphisms = enumerate_tsimp_morphisms(arrow_nerve, arrow_nerve)
    assert len(morphisms) == 3
    for f in morphisms:
        assert check_morphism(f)["passed"].all()
        assert from_morphism(f).key() == from_morphism(to_morphism(from_morphism(f))).key()


def test_every_enumerated_simplex_validates(point_nerve, arrow_nerve):
    for x in enumerate_hom_simplices(point_nerve, arrow_nerve, 2):
        report = validate_hom_simplex(x)
        assert report["passed"].all()
        assert set(report["condition"]) >= {"face", "last face", "degeneracy"}


def test_faces_and_degeneracies(arrow_nerve):
    for x in enumerate_hom_simplices(arrow_nerve, arrow_nerve, 1):
        for i in range(2):
            assert is_valid(hom_face(x, i))
        for i in range(2):
            y = hom_degeneracy(x, i)
            assert is_valid(y)
            assert hom_face(y, i).key() == x.key()
            assert hom_face(y, i + 1).key() == x.key()
    with pytest.raises(DomainError):
        hom_face(from_morphism(enumerate_tsimp_morphisms(arrow_nerve, arrow_nerve)[0]), 0)


def test_identity_simplex_is_degenerate(arrow_nerve):
    f = enumerate_tsimp_morphisms(arrow_nerve, arrow_nerve)[0]
    unit = identity_simplex(f)
    assert unit.degree == 1
    assert hom_face(unit, 0).key() == hom_face(unit, 1).key() == from_morphism(f).key()


def test_constructive_and_searched_composites_agree(arrow_nerve):
    ones = enumerate_hom_simplices(arrow_nerve, arrow_nerve, 1)
    index = two_simplex_index(arrow_nerve, arrow_nerve)
    pairs = 0
    for x in ones:
        for y in ones:
            if hom_face(x, 0).key() != hom_face(y, 1).key():
                continue
            pairs += 1
            z, composite = compose_one_simplices(x, y)
            assert is_valid(z)
            assert hom_face(z, 2).key() == x.key()
            assert hom_face(z, 0).key() == y.key()
            assert composite.key() == compose_by_search(x, y, index)[1].key()
    assert pairs > len(ones)


def test_composition_rejects_mismatched_pairs(point_nerve, arrow_nerve):
    ones = enumerate_hom_simplices(point_nerve, arrow_nerve, 1)
    up = next(x for x in ones if hom_face(x, 0).key() != hom_face(x, 1).key())
    with pytest.raises(DomainError):
        compose_one_simplices(up, up)


def test_composition_laws(point_nerve, arrow_nerve):
    assert check_composition_laws(arrow_nerve, arrow_nerve)["passed"].all()
    assert check_composition_laws(point_nerve, arrow_nerve)["passed"].all()


def test_hom_is_segal(arrow_nerve):
    report = hom_segal_report(arrow_nerve, arrow_nerve)
    assert list(report["simplices"]) == [3, 6, 10]
    assert report["passed"].all()


def test_fully_faithful(point, arrow, discrete_ab):
    for source, target in ((point, arrow), (arrow, arrow), (discrete_ab, arrow)):
        report = check_fully_faithful(source, target)
        assert report["passed"].all()
    assert check_fully_faithful(arrow, arrow)["tfunctors"].iloc[0] == 3
