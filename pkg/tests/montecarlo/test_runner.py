import math

import pytest

from qdsx.adversaries import (
    ActiveResponsePolicy,
    PhysicalRepudiationStrategy,
    RepudiationMarginals,
    optimal_repudiation_marginal,
)
from qdsx.bounds import compute_bounds, default_params
from qdsx.exceptions import ParameterError
from qdsx.montecarlo import (
    ForgeActiveScenario,
    ForgePassiveScenario,
    HonestScenario,
    RepudiateAbstractScenario,
    RepudiatePhysicalScenario,
    ScenarioKind,
    either_aborts,
    exact_forge_passive,
    exact_honest_abort,
    exact_repudiation_abstract,
    run_experiment,
    trial_generator,
)
from qdsx.protocol import ProtocolParams


def _repudiation_setup(length: int) -> tuple[ProtocolParams, RepudiateAbstractScenario]:
    params = default_params(0.5, length)
    marg = RepudiationMarginals.with_mismatch(optimal_repudiation_marginal(params), params.p_usd)
    return params, RepudiateAbstractScenario(marg)


def _passive_setup(length: int = 100) -> ProtocolParams:
    base = default_params(0.5, length)
    return ProtocolParams(**{**base.as_dict(), "s_v": 0.02})


def test_trial_generators_are_keyed_on_seed_and_index() -> None:
    first = trial_generator(7, 3).random(4)
    assert (trial_generator(7, 3).random(4) == first).all()
    assert not (trial_generator(7, 4).random(4) == first).all()
    assert not (trial_generator(8, 3).random(4) == first).all()


def test_runs_are_reproducible(params_05_500: ProtocolParams) -> None:
    first = run_experiment(HonestScenario(), params_05_500, 50, seed=42)
    second = run_experiment(HonestScenario(), params_05_500, 50, seed=42)
    assert first.estimates == second.estimates
    assert first.means == second.means


@pytest.mark.parametrize("workers", [2, 8])
def test_worker_count_does_not_change_results(workers: int) -> None:
    params, scenario = _repudiation_setup(200)
    sequential = run_experiment(scenario, params, 300, seed=5, workers=1)
    parallel = run_experiment(scenario, params, 300, seed=5, workers=workers)
    assert parallel.estimates == sequential.estimates
    assert parallel.means == sequential.means


@pytest.mark.parametrize(
    "scenario",
    [
        HonestScenario(),
        RepudiateAbstractScenario(RepudiationMarginals(0.39, 0.01, 0.6)),
        RepudiatePhysicalScenario(PhysicalRepudiationStrategy.honest(0.5)),
        ForgePassiveScenario(),
        ForgeActiveScenario(ActiveResponsePolicy(align_to_guess=True)),
    ],
)
def test_single_trial_estimates_are_degenerate(scenario, params_05_500: ProtocolParams) -> None:
    result = run_experiment(scenario, params_05_500, 1, seed=0)
    assert result.n_trials == 1
    for est in result.estimates.values():
        assert est.successes in (0, 1)
        assert 0.0 <= est.ci_low <= est.rate <= est.ci_high <= 1.0


def test_scenarios_expose_kind_and_payload() -> None:
    scenario = ForgeActiveScenario(ActiveResponsePolicy(scale=0.5))
    assert scenario.kind is ScenarioKind.FORGE_ACTIVE
    assert scenario.payload() == {"scale": 0.5, "align_to_guess": False}
    assert HonestScenario().payload() == {}


@pytest.mark.parametrize("n_trials, seed", [(0, 1), (-3, 1), (10, -1), (10, 2**64)])
def test_rejects_bad_trial_counts_and_seeds(
    n_trials: int, seed: int, params_05_500: ProtocolParams
) -> None:
    with pytest.raises(ParameterError):
        run_experiment(HonestScenario(), params_05_500, n_trials, seed)


def test_rejects_zero_workers(params_05_500: ProtocolParams) -> None:
    with pytest.raises(ParameterError):
        run_experiment(HonestScenario(), params_05_500, 10, seed=1, workers=0)


def test_honest_abort_rate_matches_oracle(params_05_500: ProtocolParams, within_4_sigma) -> None:
    n = 4000
    result = run_experiment(HonestScenario(), params_05_500, n, seed=2024, workers=4)
    expected = either_aborts(exact_honest_abort(params_05_500))
    assert within_4_sigma(result.estimates["abort"].rate, expected, n)
    assert result.means["mismatch_fraction"] == 0.0
    assert result.means["null_click_fraction"] == 0.0
    assert result.estimates["repudiation_success"].successes == 0


def test_repudiation_rate_matches_oracle(within_4_sigma) -> None:
    params, scenario = _repudiation_setup(200)
    n = 20_000
    result = run_experiment(scenario, params, n, seed=99, workers=4)
    expected = exact_repudiation_abstract(params, scenario.marginals)
    rate = result.estimates["repudiation_success"].rate
    assert within_4_sigma(rate, expected, n)
    bound = 10 ** compute_bounds(params).log10_repudiation_ub
    assert rate <= bound + 4 * math.sqrt(bound * (1 - bound) / n) + 1e-12


def test_passive_forging_rate_matches_oracle(within_4_sigma) -> None:
    params = _passive_setup()
    n = 20_000
    result = run_experiment(ForgePassiveScenario(), params, n, seed=17, workers=4)
    expected = exact_forge_passive(params)
    assert 1e-3 <= expected <= 1e-1
    rate = result.estimates["forge_success"].rate
    assert within_4_sigma(rate, expected, n)
    assert rate <= 10 ** compute_bounds(params).log10_forge_passive_ub


def test_passive_forging_does_not_grow_with_length(within_4_sigma) -> None:
    n = 10_000
    exact, simulated = [], []
    for length in (50, 100, 200):
        params = _passive_setup(length)
        expected = exact_forge_passive(params)
        result = run_experiment(ForgePassiveScenario(), params, n, seed=length, workers=4)
        rate = result.estimates["forge_success"].rate
        assert within_4_sigma(rate, expected, n)
        exact.append(expected)
        simulated.append(rate)
    assert exact[0] > exact[1] > exact[2]
    assert simulated[0] >= simulated[1] >= simulated[2]


def test_classical_amplitudes_make_forging_easy() -> None:
    params = ProtocolParams(
        alpha=3.0, length=100, s_a=0.0, s_v=0.05, delta=0.05, r=0.0, epsilon=0.01
    )
    result = run_experiment(ForgePassiveScenario(), params, 200, seed=9)
    assert result.estimates["forge_success"].rate >= 0.99


def test_active_forging_respects_its_bound() -> None:
    params = default_params(0.5, 200)
    scenario = ForgeActiveScenario(ActiveResponsePolicy(scale=1.0, align_to_guess=True))
    result = run_experiment(scenario, params, 2000, seed=8, workers=2)
    bound = 10 ** compute_bounds(params).log10_forge_active_ub
    assert result.estimates["forge_success"].rate <= bound


@pytest.mark.slow
def test_honest_abort_acceptance(params_05_500: ProtocolParams, within_4_sigma) -> None:
    n = 100_000
    result = run_experiment(HonestScenario(), params_05_500, n, seed=1, workers=8)
    expected = either_aborts(exact_honest_abort(params_05_500))
    assert within_4_sigma(result.estimates["abort"].rate, expected, n)
    assert result.means["mismatch_fraction"] == 0.0
    assert result.means["null_click_fraction"] == 0.0


@pytest.mark.slow
def test_repudiation_acceptance(within_4_sigma) -> None:
    params, scenario = _repudiation_setup(200)
    n = 1_000_000
    result = run_experiment(scenario, params, n, seed=2, workers=8)
    expected = exact_repudiation_abstract(params, scenario.marginals)
    assert within_4_sigma(result.estimates["repudiation_success"].rate, expected, n)


@pytest.mark.slow
def test_passive_forging_acceptance(within_4_sigma) -> None:
    params = _passive_setup()
    n = 100_000
    result = run_experiment(ForgePassiveScenario(), params, n, seed=3, workers=8)
    assert within_4_sigma(result.estimates["forge_success"].rate, exact_forge_passive(params), n)


@pytest.mark.slow
def test_determinism_acceptance() -> None:
    params, scenario = _repudiation_setup(200)
    results = [run_experiment(scenario, params, 20_000, seed=4, workers=w) for w in (1, 2, 8)]
    assert results[0].estimates == results[1].estimates == results[2].estimates
