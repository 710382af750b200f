"""Forging Bob: he declares his best guess of Alice's key and hopes Charlie verifies it.

Bob never aborts when forging, so every forgery verdict reports him as
authenticated and abort-free; only Charlie's checks matter.
"""

import math

import numpy as np

from ..optics import sample_min_error_guesses
from ..protocol import (
    Declaration,
    ProtocolParams,
    RecipientRecord,
    Role,
    TrialVerdict,
    abort_check,
    count_mismatches,
    decide,
    generate_keys,
    measure_recipient,
)
from .types import ActiveResponsePolicy

_SQRT2 = math.sqrt(2.0)

# Bob's own copy (α/√2 after his first splitter, α in total) plus the half Charlie forwards
_ACTIVE_GUESS_GAIN = math.sqrt(1.5)


def _forgery_verdict(
    charlie: RecipientRecord, forged: Declaration, params: ProtocolParams
) -> TrialVerdict:
    return TrialVerdict(
        bob_authenticated=True,
        charlie_verified=decide(charlie, forged, params, Role.VERIFIER),
        bob_abort=None,
        charlie_abort=abort_check(charlie, params),
        charlie_mismatches=count_mismatches(charlie, forged),
        charlie_unambiguous=charlie.unambiguous_count,
        charlie_null_clicks=charlie.null_count,
    )


def forge_passive_trial(params: ProtocolParams, rand: np.random.Generator) -> TrialVerdict:
    """Bob measures each element of his signal with the minimum-error measurement and
    declares the results; the distribution stage is honest."""
    keys = generate_keys(params, rand)
    key = keys[int(rand.random() < 0.5)]
    guesses = sample_min_error_guesses(key.signs, params.alpha, rand)
    signal = key.signs.astype(np.complex128) * params.alpha
    charlie = measure_recipient(signal, np.zeros_like(signal), params.alpha, rand)
    return _forgery_verdict(charlie, Declaration(key.message, guesses), params)


def forge_active_trial(
    params: ProtocolParams, policy: ActiveResponsePolicy, rand: np.random.Generator
) -> TrialVerdict:
    """Bob guesses from amplitude √(3/2)·α and forwards a coherent response state.

    Charlie's final beam splitter mixes his kept half ``b·α/√2`` with Bob's
    response ``β``: signal ``β/√2 + b·α/2`` and null ``b·α/2 − β/√2``.
    """
    keys = generate_keys(params, rand)
    key = keys[int(rand.random() < 0.5)]
    signs = key.signs
    guesses = sample_min_error_guesses(signs, _ACTIVE_GUESS_GAIN * params.alpha, rand)
    response_signs = guesses if policy.align_to_guess else signs
    response = response_signs.astype(np.complex128) * (policy.scale * params.alpha / _SQRT2)
    kept = signs.astype(np.complex128) * (params.alpha / _SQRT2)
    signal = (kept + response) / _SQRT2
    null = (kept - response) / _SQRT2
    charlie = measure_recipient(signal, null, params.alpha, rand)
    return _forgery_verdict(charlie, Declaration(key.message, guesses), params)


__all__ = ["forge_passive_trial", "forge_active_trial"]
