import pytest

from haarpy.exceptions import CapacityError
from haarpy.verify import LEVELS, registry, run


def test_registry():
    assert LEVELS == ("fast", "full")
    assert {"dimensions", "idempotents", "kernel", "oracle equivalence"} <= set(registry)
    assert registry["dimensions"].level == "fast"
    assert registry["path independence"].level == "full"


@pytest.mark.parametrize("d", [1, 2, 3])
def test_fast(d):
    outcomes = run(d)
    assert outcomes
    assert all(outcome.passed for outcome in outcomes), outcomes
    assert all(registry[outcome.name].level == "fast" for outcome in outcomes)


def test_full():
    outcomes = run(2, "full")
    assert len(outcomes) == len(registry)
    assert all(outcome.passed for outcome in outcomes), outcomes


def test_oracle_skipped_above_cap():
    outcomes = dict(run(3, "full", oracle_cap=2))
    assert outcomes["oracle equivalence"] is True


def test_errors():
    with pytest.raises(ValueError):
        run(2, "slow")
    with pytest.raises(CapacityError):
        run(7)
    with pytest.raises(CapacityError):
        run(3, cap=2)
