from math import comb

import pytest
from hypothesis import given, strategies as st

from src.combinatorics.simplex import (
    SimplexMap,
    apply_R,
    chi,
    compose,
    degeneracy,
    enumerate_hom,
    face,
    factorize,
    identity,
    inclusion,
    is_injective,
    is_surjective,
    is_top_preserving,
    mono_epi,
    r_bijection_image,
    simplex_map,
    top_extension,
)
from src.utils.config import SIMPLEX_BOUND
from src.utils.errors import DomainError

ORDINALS = range(SIMPLEX_BOUND + 1)


@st.composite
def monotone_maps(draw, max_ordinal=SIMPLEX_BOUND):
    m = draw(st.integers(0, max_ordinal))
    n = draw(st.integers(0, max_ordinal))
    values = sorted(draw(st.lists(st.integers(0, n), min_size=m + 1, max_size=m + 1)))
    return SimplexMap(m, n, tuple(values))


@pytest.mark.parametrize("m", ORDINALS)
@pytest.mark.parametrize("n", ORDINALS)
def test_hom_set_sizes(m, n):
    assert len(enumerate_hom(m, n)) == comb(m + n + 1, m + 1)
    assert len(enumerate_hom(m, n, "delta_r")) == comb(m + n, m)


def test_generators():
    assert face(1, 0).values == (1, 2)
    assert face(1, 2).values == (0, 1)
    assert degeneracy(1, 1).values == (0, 1, 1)
    assert degeneracy(0, 0).values == (0, 0)


def test_generators_out_of_range():
    with pytest.raises(DomainError):
        face(1, 3)
    with pytest.raises(DomainError):
        degeneracy(1, 2)
    with pytest.raises(DomainError):
        SimplexMap(1, 1, (1, 0))


def test_cosimplicial_identities():
    for n in range(SIMPLEX_BOUND - 1):
        for j in range(1, n + 3):
            for i in range(j):
                assert compose(face(n + 1, j), face(n, i)) == compose(face(n + 1, i), face(n, j - 1))
        for j in range(n + 1):
            for i in range(j + 1):
                assert compose(degeneracy(n, j), degeneracy(n + 1, i)) == compose(degeneracy(n, i), degeneracy(n + 1, j + 1))
            for i in (j, j + 1):
                assert compose(degeneracy(n, j), face(n, i)) == identity(n)


def test_compose_rejects_mismatch():
    with pytest.raises(DomainError):
        compose(face(2, 0), face(0, 0))


@given(monotone_maps())
def test_factorization_is_unique(phi):
    k, psi = factorize(phi)
    assert is_top_preserving(psi)
    assert compose(inclusion(k, phi.cod), psi) == phi


@pytest.mark.parametrize("m", ORDINALS)
@pytest.mark.parametrize("n", ORDINALS)
def test_every_map_factors_through_its_image(m, n):
    for phi in enumerate_hom(m, n):
        k, psi = factorize(phi)
        assert is_top_preserving(psi)
        assert compose(inclusion(k, n), psi) == phi


@given(monotone_maps())
def test_mono_epi_splits_the_map(phi):
    missing, repeats = mono_epi(phi)
    assert len(phi.image) == phi.cod + 1 - len(missing)
    assert len(repeats) == phi.dom + 1 - len(phi.image)
    assert is_injective(phi) == (not repeats)
    assert is_surjective(phi) == (not missing)


def test_chi():
    assert chi(2, 0).values == (1, 1, 1)
    assert chi(2, 1).values == (0, 1, 1)
    assert chi(2, 3).values == (0, 0, 0)
    assert all(is_top_preserving(chi(3, j)) == (j <= 3) for j in range(5))


def test_R_and_top_extension():
    psi = simplex_map((0, 2), 2)
    assert apply_R(psi).values == (0, 2, 3)
    theta = simplex_map((0, 1), 3)
    extended = top_extension(theta)
    assert is_top_preserving(extended)
    assert compose(extended, face(1, 2)) == theta
    with pytest.raises(DomainError):
        apply_R(simplex_map((0, 1), 2))


@pytest.mark.parametrize("m", range(SIMPLEX_BOUND))
@pytest.mark.parametrize("n", ORDINALS)
def test_r_bijection(m, n):
    image = r_bijection_image(m, n)
    assert len(set(image)) == len(image)
    assert set(image) == set(enumerate_hom(m + 1, n, "delta_r"))
