import random

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from src.cli.documents import load_document
from src.monads.monad_engine import cyclic_monoid, identity_monad, maybe_monad, writer_monad
from src.tcategories.ladder import (
    claimed,
    claimed_failures,
    derived_identity_suite,
    ladder_structure,
    ladder_table,
    random_magma,
    random_structure,
)
from src.tcategories.tcat_core import LADDER, classify
from src.utils.errors import DomainError

SAMPLES_PER_LEVEL = 200

MONADS = {
    "identity": identity_monad,
    "maybe": maybe_monad,
    "writer": lambda: writer_monad(cyclic_monoid(2)),
}


@pytest.mark.parametrize("document, level", [
    ("arrow.json", "T-category"),
    ("nonassociative.json", "unital T-magmoid"),
    ("nonunital.json", "reflexive T-semicategory"),
])
def test_fixture_levels(fixtures_dir, document, level):
    ws = load_document(fixtures_dir / document)
    assert classify(ws.data).top == level
    report = derived_identity_suite(ws.data, 3)
    assert claimed_failures(report).empty


def test_failures_fall_outside_the_claims(fixtures_dir):
    ws = load_document(fixtures_dir / "nonassociative.json")
    report = derived_identity_suite(ws.data, 3)
    unclaimed = report[~report["claimed"]]
    assert not unclaimed["passed"].all()


def test_tcategory_claims_everything():
    for axiom in ("SA1", "SA3", "SA6", "SA9"):
        assert claimed("T-category", axiom, 0, 1)
    assert claimed("T-graph", "SA2", 0, None)
    assert not claimed("T-graph", "SA1", 0, 1)
    assert not claimed("T-magmoid", "SA4", 0, 0)


@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(
    seed=st.integers(0, 10_000),
    with_comp=st.booleans(),
    with_unit=st.booleans(),
    monad=st.sampled_from(sorted(MONADS)),
)
def test_claimed_identities_hold(seed, with_comp, with_unit, monad):
    T = MONADS[monad]()
    data = random_structure(T, seed, with_comp, with_unit)
    structure = classify(data)
    assert structure.top in LADDER
    if "T-category" in structure:
        assert all(name in structure for name in LADDER)
    report = derived_identity_suite(data, 3)
    assert claimed_failures(report).empty


def test_ladder_table():
    T = identity_monad()
    structures = [random_structure(T, seed) for seed in range(5)]
    table = ladder_table(structures)
    assert list(table["structure"]) == [f"r{seed}" for seed in range(5)]
    assert (table["claimed_failures"] == 0).all()


@pytest.mark.parametrize("level", LADDER)
def test_every_level_is_reached(level, ident, maybe, z2):
    monads = [ident, maybe, z2]
    structures = [ladder_structure(monads[seed % 3], level, seed) for seed in range(SAMPLES_PER_LEVEL)]
    table = ladder_table(structures)
    assert (table["level"] == level).sum() == SAMPLES_PER_LEVEL
    assert (table["claimed_failures"] == 0).all()
    assert {data.monad.name for data in structures} == {"identity", "maybe", "writer[2]"}


def test_tag_rules():
    rng = random.Random(7)
    op = random_magma(rng)
    tags = (0, 1, 2)
    assert all(op(0, a) == a == op(a, 0) for a in tags)
    assert any(op(op(a, b), c) != op(a, op(b, c)) for a in tags for b in tags for c in tags)
    with pytest.raises(DomainError):
        ladder_structure(identity_monad(), "T-bicategory", 0)
