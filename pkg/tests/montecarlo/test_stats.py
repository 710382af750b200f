import pytest

from qdsx.exceptions import ParameterError
from qdsx.montecarlo import Estimate, estimate, wilson_interval


def test_zero_successes_start_at_zero() -> None:
    low, high = wilson_interval(0, 100)
    assert low == 0.0
    assert 0.0 < high < 0.05


def test_half_is_symmetric() -> None:
    low, high = wilson_interval(50, 100)
    assert (low + high) / 2 == pytest.approx(0.5, abs=1e-12)
    assert high - low < 0.2


def test_standard_formula_value() -> None:
    low, high = wilson_interval(10, 1000)
    assert low == pytest.approx(0.00544, abs=1e-5)
    assert high == pytest.approx(0.01831, abs=1e-5)


@pytest.mark.parametrize("successes, trials", [(0, 1), (1, 1), (3, 7), (999, 1000)])
def test_interval_contains_the_rate(successes: int, trials: int) -> None:
    est = estimate(successes, trials)
    assert 0.0 <= est.ci_low <= est.rate <= est.ci_high <= 1.0


@pytest.mark.parametrize("successes, trials", [(0, 0), (5, 4), (-1, 10)])
def test_rejects_impossible_counts(successes: int, trials: int) -> None:
    with pytest.raises(ParameterError):
        wilson_interval(successes, trials)


def test_estimate_validates_its_interval() -> None:
    with pytest.raises(ParameterError):
        Estimate(successes=1, trials=10, rate=0.1, ci_low=0.2, ci_high=0.3)
