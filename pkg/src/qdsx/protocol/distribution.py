"""Distribution stage: key generation and the recipients' multiport measurements."""

import numpy as np

from ..optics import UniformSource, click_probabilities, multiport_arrays, sample_usd_outcomes
from .types import PrivateKey, ProtocolParams, RecipientRecord


def _random_signs(length: int, rand: np.random.Generator) -> np.ndarray:
    return np.where(rand.random(length) < 0.5, -1, 1).astype(np.int8)


def generate_keys(
    params: ProtocolParams, rand: np.random.Generator
) -> tuple[PrivateKey, PrivateKey]:
    """Alice's private keys for messages 0 and 1: independent uniform sign strings."""
    return (
        PrivateKey(0, _random_signs(params.length, rand)),
        PrivateKey(1, _random_signs(params.length, rand)),
    )


def measure_recipient(
    signal: np.ndarray, null: np.ndarray, alpha: float, rand: UniformSource
) -> RecipientRecord:
    """USD-measure every signal mode and threshold-detect every null mode."""
    outcomes = sample_usd_outcomes(signal, alpha, rand)
    null_clicked = rand.random(null.shape[0]) < click_probabilities(null)
    return RecipientRecord(outcomes, null_clicked)


def run_distribution_honest(
    key: PrivateKey, params: ProtocolParams, rand: np.random.Generator
) -> tuple[RecipientRecord, RecipientRecord]:
    """Alice sends ``b_l·α`` to both recipients; each symmetrises and measures independently.

    Returns:
        Bob's record and Charlie's record
    """
    amplitudes = key.signs.astype(np.complex128) * params.alpha
    signal, null = multiport_arrays(amplitudes, amplitudes)
    bob = measure_recipient(signal, null, params.alpha, rand)
    charlie = measure_recipient(signal, null, params.alpha, rand)
    return bob, charlie


__all__ = ["generate_keys", "measure_recipient", "run_distribution_honest"]
