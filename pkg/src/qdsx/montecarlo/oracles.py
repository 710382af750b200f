"""Exact binomial reference probabilities for small parameter sets.

Every oracle evaluates the same real-valued windows and thresholds as
:mod:`qdsx.protocol.messaging`, turned into integer cut-offs:
``m <= t`` holds for ``m <= floor(t)`` and ``m < t`` for ``m <= ceil(t) - 1``.
Sums run in log space with :func:`scipy.special.logsumexp`.
"""

import logging
import math

import numpy as np
from scipy.special import logsumexp
from scipy.stats import binom

from ..adversaries import RepudiationMarginals
from ..bounds import derived_rates
from ..exceptions import OracleSizeError, ParameterError
from ..protocol import ProtocolParams, Role, mismatch_threshold, unambiguous_window

logger = logging.getLogger(__name__)

MAX_HONEST_LENGTH = 100_000
MAX_FORGE_LENGTH = 10_000
MAX_REPUDIATION_LENGTH = 100_000


def _check_size(params: ProtocolParams, limit: int, name: str) -> None:
    if params.length > limit:
        raise OracleSizeError(
            f"{name} oracle supports L <= {limit}, got L={params.length}"
        )


def _window_counts(params: ProtocolParams) -> np.ndarray:
    """Integer unambiguous counts K accepted by the abort window."""
    ks = np.arange(params.length + 1)
    low, high = unambiguous_window(params)
    return ks[(ks >= low) & (ks <= high)]


def _authenticator_cutoff(params: ProtocolParams) -> int:
    return math.floor(mismatch_threshold(params, Role.AUTHENTICATOR))


def _verifier_cutoff(params: ProtocolParams) -> int:
    return math.ceil(mismatch_threshold(params, Role.VERIFIER)) - 1


def _exp_clamped(log_value: float) -> float:
    return float(min(1.0, np.exp(log_value)))


def hoeffding_bound(t: float, length: int, two_sided: bool = False) -> float:
    """Hoeffding's ``exp(-2t²L)`` bound on a mean deviating by at least ``t``."""
    if not (math.isfinite(t) and t >= 0.0):
        raise ParameterError(f"deviation must be a non-negative finite number, got {t}")
    if length < 1:
        raise ParameterError(f"length must be positive, got {length}")
    bound = math.exp(-2.0 * t * t * length)
    return min(1.0, 2.0 * bound) if two_sided else bound


def exact_honest_abort(params: ProtocolParams) -> float:
    """Probability that one honest recipient's unambiguous count leaves the window.

    Raises:
        OracleSizeError: If ``L`` exceeds :data:`MAX_HONEST_LENGTH`
    """
    _check_size(params, MAX_HONEST_LENGTH, "honest-abort")
    ks = np.arange(params.length + 1)
    inside = np.isin(ks, _window_counts(params))
    if inside.all():
        return 0.0
    log_pmf = binom.logpmf(ks, params.length, params.p_usd)
    return _exp_clamped(logsumexp(log_pmf[~inside]))


def exact_forge_passive(params: ProtocolParams) -> float:
    """Exact success probability of the passive minimum-error forger.

    Charlie's unambiguous count K is Binomial(L, p_usd); given K, each of his
    conclusive outcomes disagrees with Bob's guess with probability p_min.

    Raises:
        OracleSizeError: If ``L`` exceeds :data:`MAX_FORGE_LENGTH`
    """
    _check_size(params, MAX_FORGE_LENGTH, "passive-forging")
    cutoff = _verifier_cutoff(params)
    ks = _window_counts(params)
    if cutoff < 0 or ks.size == 0:
        return 0.0
    p_min = derived_rates(params.alpha).p_min
    log_terms = binom.logpmf(ks, params.length, params.p_usd) + binom.logcdf(cutoff, ks, p_min)
    return _exp_clamped(logsumexp(log_terms))


def _recipient_tails(
    params: ProtocolParams, marg: RepudiationMarginals, include_aborts: bool
) -> tuple[float, float]:
    """Log-probabilities that one recipient would authenticate / would reject."""
    length = params.length
    q = marg.p_mismatch
    accept_at, reject_from = _authenticator_cutoff(params), _verifier_cutoff(params) + 1
    if not include_aborts:
        return (
            float(binom.logcdf(accept_at, length, q)),
            float(binom.logsf(reject_from - 1, length, q)),
        )
    ks = _window_counts(params)
    if ks.size == 0:
        return -math.inf, -math.inf
    unambiguous = marg.p_match + marg.p_mismatch
    # mismatches among K conclusive outcomes are Binomial(K, q/u)
    ratio = min(1.0, q / unambiguous) if unambiguous > 0.0 else 0.0
    log_k = binom.logpmf(ks, length, unambiguous)
    return (
        float(logsumexp(log_k + binom.logcdf(accept_at, ks, ratio))),
        float(logsumexp(log_k + binom.logsf(reject_from - 1, ks, ratio))),
    )


def exact_repudiation_abstract(
    params: ProtocolParams, marg: RepudiationMarginals, include_aborts: bool = True
) -> float:
    """Exact P(Bob authenticates and Charlie rejects) under the abstract marginals.

    With ``include_aborts`` the recipients must also pass the unambiguous
    window, matching what the simulator does; without it only the mismatch
    tails enter.

    Raises:
        OracleSizeError: If ``L`` exceeds :data:`MAX_REPUDIATION_LENGTH`
    """
    _check_size(params, MAX_REPUDIATION_LENGTH, "repudiation")
    # both recipients see the same marginals independently
    bob_accepts, charlie_rejects = _recipient_tails(params, marg, include_aborts)
    value = _exp_clamped(bob_accepts + charlie_rejects)
    logger.debug(
        "repudiation oracle L=%d p_mismatch=%g include_aborts=%s -> %g",
        params.length,
        marg.p_mismatch,
        include_aborts,
        value,
    )
    return value


def either_aborts(p_single: float) -> float:
    """Abort probability of a trial whose two recipients abort independently with ``p_single``."""
    return 1.0 - (1.0 - p_single) ** 2


__all__ = [
    "MAX_HONEST_LENGTH",
    "MAX_FORGE_LENGTH",
    "MAX_REPUDIATION_LENGTH",
    "hoeffding_bound",
    "exact_honest_abort",
    "exact_forge_passive",
    "exact_repudiation_abstract",
    "either_aborts",
]
