"""Measurement statistics for distinguishing the two signature states |+α⟩ and |−α⟩.

Unambiguous discrimination is modelled by interfering the measured mode with a
reference of amplitude α on a balanced beam splitter and watching both output
ports with independent threshold detectors: the sum port fires only if the
mode has a component along +α, the difference port only along −α.
"""

import math
from typing import Protocol, overload

import numpy as np

from ..exceptions import ParameterError
from .types import ComplexAmplitude, OutcomeDistribution, UsdOutcome

_SQRT2 = math.sqrt(2.0)

_SIGNS = (-1, 1)


class UniformSource(Protocol):
    """Anything that draws uniform variates on [0, 1), e.g. ``numpy.random.Generator``."""

    @overload
    def random(self) -> float: ...
    @overload
    def random(self, size: int) -> np.ndarray: ...


def _check_alpha(alpha: float) -> None:
    if not (math.isfinite(alpha) and alpha > 0.0):
        raise ParameterError(f"alpha must be a positive finite amplitude, got {alpha}")


def usd_success_probability(alpha: float) -> float:
    """p_USD = 1 − exp(−2α²), the conclusive-outcome probability on |±α⟩."""
    _check_alpha(alpha)
    return -math.expm1(-2.0 * alpha * alpha)


def usd_distribution(signal: ComplexAmplitude, alpha: float) -> OutcomeDistribution:
    """Outcome probabilities of the USD measurement on a coherent mode.

    Raises:
        ParameterError: If ``alpha`` is not positive
    """
    _check_alpha(alpha)
    reference = ComplexAmplitude(alpha)
    p_sum = -math.expm1(-((signal + reference) / _SQRT2).photon_number)
    p_diff = -math.expm1(-((signal - reference) / _SQRT2).photon_number)
    return OutcomeDistribution(
        p_plus=p_sum * (1.0 - p_diff),
        p_minus=p_diff * (1.0 - p_sum),
        p_ambiguous=(1.0 - p_sum) * (1.0 - p_diff),
        p_conflict=p_sum * p_diff,
    )


def sample_usd(signal: ComplexAmplitude, alpha: float, rand: UniformSource) -> UsdOutcome:
    """Draw one USD outcome for ``signal`` using a single uniform variate."""
    cumulative = usd_distribution(signal, alpha).cumulative()
    u = float(rand.random())
    match int(np.searchsorted(cumulative, u, side="right")):
        case 0:
            return UsdOutcome.PLUS_ALPHA
        case 1:
            return UsdOutcome.MINUS_ALPHA
        case 2:
            return UsdOutcome.CONFLICT
        case _:
            return UsdOutcome.AMBIGUOUS


def sample_usd_outcomes(signals: np.ndarray, alpha: float, rand: UniformSource) -> np.ndarray:
    """Vectorised :func:`sample_usd`: one outcome code (``int8``) per complex amplitude."""
    _check_alpha(alpha)
    signals = np.asarray(signals, dtype=np.complex128)
    p_sum = -np.expm1(-np.abs(signals + alpha) ** 2 / 2.0)
    p_diff = -np.expm1(-np.abs(signals - alpha) ** 2 / 2.0)
    upto_plus = p_sum * (1.0 - p_diff)
    upto_minus = upto_plus + p_diff * (1.0 - p_sum)
    upto_conflict = upto_minus + p_sum * p_diff
    u = rand.random(signals.shape[0]) if signals.ndim else rand.random()
    return np.select(
        [u < upto_plus, u < upto_minus, u < upto_conflict],
        [UsdOutcome.PLUS_ALPHA, UsdOutcome.MINUS_ALPHA, UsdOutcome.CONFLICT],
        default=UsdOutcome.AMBIGUOUS,
    ).astype(np.int8)


def helstrom_error(alpha_eff: float) -> float:
    """Minimum-error probability for telling |α_eff⟩ from |−α_eff⟩.

    Evaluated as ``e/(2(1+√(1−e)))`` with ``e = exp(−4α_eff²)``, which equals
    ``(1 − √(1−e))/2`` without the cancellation at large amplitudes.

    Raises:
        ParameterError: If ``alpha_eff`` is negative
    """
    if not (math.isfinite(alpha_eff) and alpha_eff >= 0.0):
        raise ParameterError(f"alpha_eff must be a non-negative amplitude, got {alpha_eff}")
    overlap = math.exp(-4.0 * alpha_eff * alpha_eff)
    return 0.5 * overlap / (1.0 + math.sqrt(-math.expm1(-4.0 * alpha_eff * alpha_eff)))


def sample_min_error_guess(true_sign: int, alpha_eff: float, rand: UniformSource) -> int:
    """Outcome of the minimum-error measurement: the true sign, or its opposite with
    probability :func:`helstrom_error`.

    Raises:
        ParameterError: If ``true_sign`` is not ±1
    """
    if true_sign not in _SIGNS:
        raise ParameterError(f"sign must be -1 or +1, got {true_sign}")
    error = helstrom_error(alpha_eff)
    return -true_sign if float(rand.random()) < error else true_sign


def sample_min_error_guesses(
    true_signs: np.ndarray, alpha_eff: float, rand: UniformSource
) -> np.ndarray:
    """Vectorised :func:`sample_min_error_guess` over an array of ±1 signs."""
    true_signs = np.asarray(true_signs, dtype=np.int8)
    error = helstrom_error(alpha_eff)
    flipped = rand.random(true_signs.shape[0]) < error
    return np.where(flipped, -true_signs, true_signs).astype(np.int8)


__all__ = [
    "UniformSource",
    "usd_success_probability",
    "usd_distribution",
    "sample_usd",
    "sample_usd_outcomes",
    "helstrom_error",
    "sample_min_error_guess",
    "sample_min_error_guesses",
]
