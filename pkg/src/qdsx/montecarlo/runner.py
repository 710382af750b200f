"""Repeated independent protocol runs with reproducible, order-free aggregation.

Trial ``i`` draws from its own generator keyed on ``(seed, i)``, and chunk
results are integer tallies, so the outcome of :func:`run_experiment` depends
only on the seed and trial count, never on the worker count or scheduling.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from functools import reduce
from operator import add
from typing import Optional

import numpy as np

from ..exceptions import ParameterError
from ..protocol import ProtocolParams
from .settings import MONTECARLO
from .stats import estimate
from .types import ExperimentResult, Scenario, Tally

logger = logging.getLogger(__name__)

_MAX_SEED = 2**64


def trial_generator(seed: int, index: int) -> np.random.Generator:
    """Independent generator for trial ``index`` of the experiment seeded with ``seed``."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


def _run_chunk(
    scenario: Scenario, params: ProtocolParams, seed: int, indices: range
) -> Tally:
    tally = Tally()
    for index in indices:
        tally += Tally.of(scenario.run_trial(params, trial_generator(seed, index)))
    return tally


def _chunks(n_trials: int, chunk_size: int) -> list[range]:
    return [
        range(start, min(start + chunk_size, n_trials))
        for start in range(0, n_trials, chunk_size)
    ]


def run_experiment(
    scenario: Scenario,
    params: ProtocolParams,
    n_trials: int,
    seed: int,
    workers: Optional[int] = None,
) -> ExperimentResult:
    """Run ``n_trials`` independent trials of ``scenario`` and estimate event rates.

    Args:
        scenario: What each trial simulates
        params: Protocol parameters shared by all trials
        n_trials: Number of trials, at least 1
        seed: Non-negative 64-bit experiment seed
        workers: Thread count; defaults to the ``workers`` setting

    Raises:
        ParameterError: If ``n_trials``, ``seed`` or ``workers`` is out of range
    """
    if isinstance(n_trials, bool) or int(n_trials) != n_trials or n_trials < 1:
        raise ParameterError(f"n_trials must be a positive integer, got {n_trials}")
    if isinstance(seed, bool) or int(seed) != seed or not 0 <= seed < _MAX_SEED:
        raise ParameterError(f"seed must be an integer in [0, 2**64), got {seed}")
    n_trials, seed = int(n_trials), int(seed)
    workers = MONTECARLO.workers if workers is None else workers
    if workers is None or workers < 1:
        raise ParameterError(f"workers must be at least 1, got {workers}")
    chunk_size = max(1, MONTECARLO.chunk_size or 1)

    chunks = _chunks(n_trials, chunk_size)
    logger.debug(
        "Running %d %s trials (L=%d, seed=%d) on %d worker(s)",
        n_trials,
        scenario.kind,
        params.length,
        seed,
        workers,
    )
    if workers == 1:
        tallies = [_run_chunk(scenario, params, seed, chunk) for chunk in chunks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            tallies = list(
                pool.map(lambda chunk: _run_chunk(scenario, params, seed, chunk), chunks)
            )
    total: Tally = reduce(add, tallies, Tally())

    element_count = total.trials * params.length
    result = ExperimentResult(
        scenario=scenario,
        params=params,
        n_trials=total.trials,
        seed=seed,
        estimates={
            "abort": estimate(total.aborts, total.trials),
            "repudiation_success": estimate(total.repudiations, total.trials),
            "forge_success": estimate(total.forgeries, total.trials),
        },
        means={
            "mismatch_fraction": total.mismatches / element_count,
            "unambiguous_fraction": total.unambiguous / element_count,
            "null_click_fraction": total.null_clicks / element_count,
        },
    )
    logger.info(
        "%s: %s",
        scenario.kind,
        ", ".join(f"{name}={est.successes}/{est.trials}" for name, est in result.estimates.items()),
    )
    return result


__all__ = ["trial_generator", "run_experiment"]
