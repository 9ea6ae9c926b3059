import pytest

from src.base_category.sets import is_bijection
from src.cli.documents import load_document
from src.tcategories.nerve import nerve
from src.tcategories.truncation import (
    coskeletal_comparison,
    coskeletal_step,
    degenerate_comparison,
    degenerate_step,
)
from src.utils.errors import CapabilityError, DepthError


def test_coskeletal_step_at_zero(arrow_nerve):
    step = coskeletal_step(arrow_nerve, 0)
    assert len(step.level) == 4
    ok, _ = is_bijection(coskeletal_comparison(arrow_nerve, 0, step))
    assert not ok


@pytest.mark.parametrize("n", [1, 2])
def test_nerves_are_coskeletal(arrow_nerve, n):
    step = coskeletal_step(arrow_nerve, n)
    assert len(step.level) == len(arrow_nerve.level(n + 1))
    ok, witness = is_bijection(coskeletal_comparison(arrow_nerve, n, step))
    assert ok, witness


def test_coskeletal_step_needs_finite_monad(fixtures_dir):
    X = load_document(fixtures_dir / "multicategory.json").build(2)
    with pytest.raises(CapabilityError):
        coskeletal_step(X, 1)


def test_depth_is_checked(arrow_nerve):
    with pytest.raises(DepthError):
        coskeletal_step(arrow_nerve.truncate(1), 2)
    with pytest.raises(DepthError):
        degenerate_step(arrow_nerve.truncate(1), 2)


def test_degenerate_step_at_zero(arrow_nerve):
    step = degenerate_step(arrow_nerve, 0)
    assert step.level is arrow_nerve.level(0)


@pytest.mark.parametrize("n", [1, 2])
def test_degenerate_simplices_embed(arrow_nerve, n):
    step = degenerate_step(arrow_nerve, n)
    comparison = degenerate_comparison(arrow_nerve, n, step)
    images = {comparison(c) for c in step.level.elements}
    assert len(images) == len(step.level)
    # Every simplex of N[1] above level 1 is degenerate
    assert len(step.level) == len(arrow_nerve.level(n + 1))


def test_coprojections_agree_with_degeneracies(chain):
    X = nerve(chain, 3)
    step = degenerate_step(X, 1)
    comparison = degenerate_comparison(X, 1, step)
    for i in range(2):
        for x in X.level(1).elements:
            assert comparison(step.degeneracies[i](x)) == X.degeneracy(1, i)(x)
