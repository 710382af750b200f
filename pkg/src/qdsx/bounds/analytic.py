"""Closed-form correctness and security bounds, evaluated in log space.

At realistic signature lengths the bounds are far below double-precision
resolution, so every bound is assembled from natural-log exponents and only
converted to base 10 at the end. A bound whose proviso fails is reported as
``0.0`` (the trivial bound 1), never as a positive logarithm.
"""

import math

from scipy.special import logsumexp

from ..exceptions import ConstraintError, ParameterError
from ..optics import helstrom_error, usd_success_probability
from ..protocol import DerivedRates, ProtocolParams
from .types import BoundsReport, ConstraintReport, SimplifiedBounds

_LN10 = math.log(10.0)

_LN2 = math.log(2.0)

# default choice: delta = 0.1 p_usd, s_v = sqrt(epsilon) = p'_min / 4, s_a = r = 0
_DEFAULT_DELTA_FRACTION = 0.1

_DEFAULT_SV_FRACTION = 0.25


def derived_rates(alpha: float) -> DerivedRates:
    """p_USD, p_min and p'_min for amplitude ``alpha``.

    Raises:
        ParameterError: If ``alpha`` is not positive
    """
    return DerivedRates(
        p_usd=usd_success_probability(alpha),
        p_min=helstrom_error(alpha),
        p_min_prime=helstrom_error(math.sqrt(1.5) * alpha),
    )


def _verification_scale(params: ProtocolParams, p_usd: float) -> float:
    """``s_v·p_usd/(p_usd−δ)``: the verification threshold relative to the fewest
    unambiguous outcomes that survive the abort check."""
    return params.s_v * p_usd / (p_usd - params.delta)


def check_constraints(params: ProtocolParams) -> ConstraintReport:
    """Evaluate the two security constraints and the validity of δ."""
    rates = derived_rates(params.alpha)
    delta_valid = 0.0 < params.delta < rates.p_usd
    if params.delta < rates.p_usd:
        scaled = _verification_scale(params, rates.p_usd)
        passive_margin = rates.p_min - scaled
        forge_margin = rates.p_min_prime - scaled - math.sqrt(params.epsilon + params.r)
    else:
        passive_margin = forge_margin = -math.inf
    return ConstraintReport(
        sv_gt_sa=params.s_v > params.s_a,
        forge_margin=forge_margin,
        delta_valid=delta_valid,
        passive_margin=passive_margin,
    )


def _log10_complement_of_square(ln_x: float) -> float:
    """log10 of ``1 − (1 − x)²`` for ``x = exp(ln_x)``, i.e. ``log10(x(2 − x))``."""
    if ln_x >= 0.0:
        return 0.0
    x = math.exp(ln_x)
    return min(0.0, (ln_x + math.log(2.0 - x)) / _LN10)


def log10_honest_abort_bound(params: ProtocolParams) -> float:
    """Upper bound on either honest recipient aborting: ``1 − (1 − 2e^{−2δ²L})²``."""
    return _log10_complement_of_square(_LN2 - 2.0 * params.delta**2 * params.length)


def log10_repudiation_bound(params: ProtocolParams, p_usd: float) -> float:
    """``exp(−p_usd²(s_v−s_a)²L/2)``; depends on the thresholds only through their gap."""
    gap = params.s_v - params.s_a
    if gap <= 0.0:
        return 0.0
    return -(p_usd**2) * gap**2 * params.length / 2.0 / _LN10


def log10_forge_passive_bound(params: ProtocolParams, rates: DerivedRates) -> float:
    """Minimum-error forging: ``exp(−2(p_min − s_v p_usd/(p_usd−δ))²(p_usd−δ)L)``."""
    surviving = rates.p_usd - params.delta
    if surviving <= 0.0:
        return 0.0
    margin = rates.p_min - _verification_scale(params, rates.p_usd)
    if margin <= 0.0:
        return 0.0
    return -2.0 * margin**2 * surviving * params.length / _LN10


def log10_forge_active_bound(
    params: ProtocolParams, rates: DerivedRates, forge_margin: float
) -> float:
    """Active forging: the passive form with p'_min and the trace-distance slack
    ``√(ε+r)``, plus ``2e^{−2ε²L}`` for the null-port estimate failing."""
    if forge_margin <= 0.0:
        return 0.0
    surviving = rates.p_usd - params.delta
    steering = -2.0 * forge_margin**2 * surviving * params.length
    estimate_failure = _LN2 - 2.0 * params.epsilon**2 * params.length
    return min(0.0, float(logsumexp([steering, estimate_failure])) / _LN10)


def compute_bounds(params: ProtocolParams) -> BoundsReport:
    """All four bounds plus the rates and constraints they were computed from.

    A report with ``constraints.ok`` false is still returned; its bounds
    are then not security statements.
    """
    if not isinstance(params, ProtocolParams):
        raise ParameterError(f"expected ProtocolParams, got {type(params).__name__}")
    rates = derived_rates(params.alpha)
    constraints = check_constraints(params)
    return BoundsReport(
        log10_honest_abort_ub=log10_honest_abort_bound(params),
        log10_repudiation_ub=log10_repudiation_bound(params, rates.p_usd),
        log10_forge_passive_ub=log10_forge_passive_bound(params, rates),
        log10_forge_active_ub=log10_forge_active_bound(params, rates, constraints.forge_margin),
        rates=rates,
        constraints=constraints,
    )


def repudiation_tail_bounds(params: ProtocolParams, p_mismatch: float) -> tuple[float, float]:
    """Hoeffding bounds on Bob authenticating and on Charlie rejecting.

    Args:
        params: Protocol parameters
        p_mismatch: Average per-element mismatch probability Alice induces

    Returns:
        ``(P(BA) bound, P(CR) bound)``; a bound is 1 when ``p_mismatch`` lies on
        the wrong side of its threshold
    """
    if not 0.0 <= p_mismatch <= 1.0:
        raise ParameterError(f"p_mismatch must be a probability, got {p_mismatch}")
    p_usd = params.p_usd
    authenticate_gap = p_mismatch - params.s_a * p_usd
    reject_gap = params.s_v * p_usd - p_mismatch
    ba = math.exp(-2.0 * authenticate_gap**2 * params.length) if authenticate_gap > 0 else 1.0
    cr = math.exp(-2.0 * reject_gap**2 * params.length) if reject_gap > 0 else 1.0
    return ba, cr


def simplified_bounds(params: ProtocolParams) -> SimplifiedBounds:
    """Rounded-constant bounds for the default choice of δ, s_v, ε, s_a and r.

    Kept as a cross-check of :func:`compute_bounds`; only meaningful for
    parameters produced by :func:`default_params`.
    """
    rates = derived_rates(params.alpha)
    length = params.length
    p_usd, p_prime = rates.p_usd, rates.p_min_prime
    forge = logsumexp(
        [-0.4 * p_prime**2 * p_usd * length, _LN2 - 0.008 * p_prime**4 * length]
    )
    return SimplifiedBounds(
        log10_honest_abort_ub=_log10_complement_of_square(_LN2 - 0.02 * p_usd**2 * length),
        log10_repudiation_ub=-0.03 * (p_usd * p_prime) ** 2 * length / _LN10,
        log10_forge_ub=min(0.0, float(forge) / _LN10),
    )


def default_params(alpha: float, length: int, strict: bool = True) -> ProtocolParams:
    """The default parameter choice: δ = 0.1·p_usd, s_v = √ε = p'_min/4, s_a = r = 0.

    Args:
        alpha: Coherent amplitude
        length: Signature length
        strict: Reject amplitudes whose parameters violate a constraint. When
            false the parameters are returned unvalidated so callers can flag them.

    Raises:
        ParameterError: If ``alpha`` or ``length`` is invalid
        ConstraintError: If ``strict`` and a constraint fails
    """
    rates = derived_rates(alpha)
    s_v = _DEFAULT_SV_FRACTION * rates.p_min_prime
    values = {
        "alpha": alpha,
        "length": length,
        "s_a": 0.0,
        "s_v": s_v,
        "delta": _DEFAULT_DELTA_FRACTION * rates.p_usd,
        "r": 0.0,
        "epsilon": s_v * s_v,
    }
    candidate = ProtocolParams.unchecked(**values)
    report = check_constraints(candidate)
    if report.ok and candidate.is_valid:
        return ProtocolParams(**values)
    if strict:
        violated = report.violations() or ["sv_gt_sa"]
        raise ConstraintError(
            f"default parameters at alpha={alpha} violate: {', '.join(violated)}",
            constraint=violated[0],
        )
    return candidate


__all__ = [
    "derived_rates",
    "check_constraints",
    "compute_bounds",
    "log10_honest_abort_bound",
    "log10_repudiation_bound",
    "log10_forge_passive_bound",
    "log10_forge_active_bound",
    "repudiation_tail_bounds",
    "simplified_bounds",
    "default_params",
]
