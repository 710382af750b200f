import numpy as np

from .distribution import generate_keys, run_distribution_honest
from .messaging import abort_check, count_mismatches, decide
from .types import Declaration, ProtocolParams, RecipientRecord, Role, TrialVerdict


def judge(
    bob: RecipientRecord,
    charlie: RecipientRecord,
    decl: Declaration,
    params: ProtocolParams,
) -> TrialVerdict:
    """Bob authenticates ``decl`` directly, Charlie verifies the forwarded copy."""
    return TrialVerdict(
        bob_authenticated=decide(bob, decl, params, Role.AUTHENTICATOR),
        charlie_verified=decide(charlie, decl, params, Role.VERIFIER),
        bob_abort=abort_check(bob, params),
        charlie_abort=abort_check(charlie, params),
        charlie_mismatches=count_mismatches(charlie, decl),
        charlie_unambiguous=charlie.unambiguous_count,
        charlie_null_clicks=charlie.null_count,
    )


def run_honest_trial(params: ProtocolParams, rand: np.random.Generator) -> TrialVerdict:
    """One run with every participant honest.

    Alice signs a uniformly chosen message bit; the key of the other message is
    generated but never measured.
    """
    keys = generate_keys(params, rand)
    key = keys[int(rand.random() < 0.5)]
    bob, charlie = run_distribution_honest(key, params, rand)
    return judge(bob, charlie, Declaration.of(key), params)


__all__ = ["judge", "run_honest_trial"]
