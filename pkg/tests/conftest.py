"""
Shared fixtures: monads, small T-categories and their nerves.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import pytest

from src.base_category.sets import FiniteSet, table
from src.monads.monad_engine import cyclic_monoid, identity_monad, list_monad, maybe_monad, writer_monad
from src.tcategories.nerve import nerve
from src.tcategories.tcat_core import algebra_tcat, discrete_tcat, ordinal_category

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def ident():
    return identity_monad()


@pytest.fixture
def maybe():
    return maybe_monad()


@pytest.fixture
def z2():
    return writer_monad(cyclic_monoid(2))


@pytest.fixture
def lists():
    return list_monad()


@pytest.fixture
def point(ident):
    return ordinal_category(0, ident)


@pytest.fixture
def arrow(ident):
    return ordinal_category(1, ident)


@pytest.fixture
def chain(ident):
    return ordinal_category(2, ident)


@pytest.fixture
def discrete_ab(ident):
    return discrete_tcat(FiniteSet(("a", "b"), "ab"), ident, "discrete{a,b}")


@pytest.fixture
def z2_point(z2):
    """The trivial Z/2-set {*} as an algebra T-category."""
    A = FiniteSet(("*",), "A")
    action = table(z2.obj(A), A, {t: "*" for t in z2.obj(A).elements}, "a")
    return algebra_tcat(A, action, z2, "Z2")


@pytest.fixture
def point_nerve(point):
    return nerve(point, 3)


@pytest.fixture
def arrow_nerve(arrow):
    return nerve(arrow, 3)


@pytest.fixture
def arrow_nerve_4(arrow):
    return nerve(arrow, 4)
