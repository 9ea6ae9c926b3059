import pytest

from src.base_category.sets import is_bijection
from src.cli.documents import load_document
from src.enrichment.hom import enumerate_hom_simplices, enumerate_tsimp_morphisms
from src.monads.monad_engine import identity_monad
from src.powers.copower import copower
from src.powers.delta_one import (
    check_hexagon_oracle,
    check_power_closure,
    check_universal_diagrams,
    check_universal_property,
    delta1_power,
    universal_simplex,
)
from src.powers.power_g import check_power_correspondence, check_power_g, power_G, shift
from src.powers.simplicial_sets import check_simplicial_identities, horn, standard_simplex
from src.tcategories.nerve import nerve
from src.tcategories.simplicial import check_presheaf_identities, check_sa_axioms, check_segal
from src.tcategories.tcat_core import ordinal_category
from src.utils.errors import DepthError, DomainError


@pytest.fixture(scope="module")
def arrow_power():
    return delta1_power(nerve(ordinal_category(1, identity_monad()), 4), 3)


def test_standard_simplex_and_horn():
    simplex = standard_simplex(1, 3)
    assert [len(level) for level in simplex.levels] == [2, 3, 4, 5]
    assert check_simplicial_identities(simplex)["passed"].all()
    inner = horn(2, 1, 2)
    assert len(inner.level(0)) == 3
    assert len(inner.level(1)) == 5
    assert (0, 1, 2) not in inner.level(2)
    assert check_simplicial_identities(inner)["passed"].all()
    with pytest.raises(DomainError):
        horn(2, 3, 2)


def test_copower_by_an_interval(arrow_nerve, point_nerve):
    Z = copower(standard_simplex(1, 3), arrow_nerve)
    assert Z.sizes() == [4, 9, 16, 25]
    assert check_sa_axioms(Z)["passed"].all()
    W = copower(standard_simplex(1, 3), point_nerve)
    assert W.sizes() == [2, 3, 4, 5]
    assert check_segal(W)


@pytest.mark.parametrize("document", ["point.json", "arrow.json", "chain.json", "discrete.json", "bar_z2.json"])
def test_copower_by_an_interval_for_every_tcategory(fixtures_dir, document):
    Y = nerve(load_document(fixtures_dir / document).data, 3)
    Z = copower(standard_simplex(1, 3), Y)
    assert Z.sizes() == [(n + 2) * size for n, size in enumerate(Y.sizes())]
    assert check_sa_axioms(Z)["passed"].all()


def test_copower_by_a_point_is_the_object(arrow_nerve):
    Z = copower(standard_simplex(0, 3), arrow_nerve)
    assert Z.sizes() == arrow_nerve.sizes()
    assert check_segal(Z)


def test_copower_by_a_horn_is_not_segal(point_nerve):
    Z = copower(horn(2, 1, 3), point_nerve)
    assert check_sa_axioms(Z)["passed"].all()
    assert not check_segal(Z)


def test_power_g(arrow_nerve_4):
    PG = power_G(arrow_nerve_4)
    assert PG.depth == 3
    assert check_power_g(PG)["passed"].all()
    assert check_presheaf_identities(shift(arrow_nerve_4))["passed"].all()
    with pytest.raises(DepthError):
        power_G(arrow_nerve_4, 4)


def test_power_correspondence(arrow_nerve, arrow_nerve_4):
    simplices = enumerate_hom_simplices(arrow_nerve, arrow_nerve_4, 1)
    report = check_power_correspondence(arrow_nerve, arrow_nerve_4, power_G(arrow_nerve_4), simplices)
    assert len(report) == 6
    assert report["passed"].all()


def test_delta1_power_sizes(arrow_power):
    assert arrow_power.L.sizes() == [3, 6, 10, 15]
    assert arrow_power.source.sizes() == [2, 3, 4, 5, 6]


def test_delta1_power_needs_depth(arrow_nerve):
    with pytest.raises(DepthError):
        delta1_power(arrow_nerve, 3)


def test_hexagon_oracle(arrow_power):
    report = check_hexagon_oracle(arrow_power)
    assert list(report["n"]) == [1, 2, 3]
    assert report["passed"].all()
    assert (report["size"] == report["oracle_size"]).all()


def test_power_is_closed(arrow_power):
    identities, segal = check_power_closure(arrow_power)
    assert identities["passed"].all()
    assert segal["passed"].all()


@pytest.mark.parametrize("document, arrows", [
    ("point.json", 1),
    ("arrow.json", 3),
    ("chain.json", 6),
    ("discrete.json", 2),
    ("bar_z2.json", 1),
])
def test_power_is_closed_for_every_tcategory(fixtures_dir, document, arrows):
    data = load_document(fixtures_dir / document).data
    power = delta1_power(nerve(data, 3), 2)
    assert len(power.L.level(0)) == arrows
    identities, segal = check_power_closure(power)
    assert identities["passed"].all()
    assert segal["passed"].all()
    assert check_hexagon_oracle(power)["passed"].all()


def test_power_of_the_arrow_is_the_nerve_of_a_chain(arrow_power, chain):
    N = nerve(chain, 3)
    assert arrow_power.L.sizes() == N.sizes()
    isomorphisms = [
        h for h in enumerate_tsimp_morphisms(arrow_power.L, N)
        if all(is_bijection(component)[0] for component in h.components)
    ]
    assert len(isomorphisms) == 1
    assert check_segal(arrow_power.L) == check_segal(N)


def test_universal_diagrams(arrow_power):
    report = check_universal_diagrams(arrow_power)
    assert list(report["diagram"]) == ["p", "q", "universal simplex"]
    assert report["passed"].all()
    assert universal_simplex(arrow_power).degree == 1


def test_universal_property(arrow_power, point_nerve, arrow_nerve, discrete_ab):
    report = check_universal_property(arrow_power, [point_nerve, arrow_nerve, nerve(discrete_ab, 3)])
    assert list(report["morphisms"]) == [3, 6, 9]
    assert list(report["simplices"]) == [3, 6, 9]
    assert report["passed"].all()
