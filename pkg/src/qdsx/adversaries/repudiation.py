"""Repudiating Alice: she tries to make Bob accept a message Charlie then rejects.

Alice always declares the all-``+1`` string; her freedom lies entirely in
what she sends (or, in the abstract model, in the outcome marginals she
induces).
"""

import numpy as np

from ..optics import UsdOutcome, multiport_arrays
from ..protocol import Declaration, ProtocolParams, RecipientRecord, TrialVerdict, judge
from ..protocol.distribution import measure_recipient
from .types import PhysicalRepudiationStrategy, RepudiationMarginals


def optimal_repudiation_marginal(params: ProtocolParams) -> float:
    """Mismatch probability ``p_usd(s_v+s_a)/2`` that maximises min(P(BA), P(CR)) bounds."""
    return params.p_usd * (params.s_v + params.s_a) / 2.0


def _sample_abstract_record(
    marg: RepudiationMarginals, length: int, rand: np.random.Generator
) -> RecipientRecord:
    u = rand.random(length)
    outcomes = np.select(
        [u < marg.p_match, u < marg.p_match + marg.p_mismatch],
        [UsdOutcome.PLUS_ALPHA, UsdOutcome.MINUS_ALPHA],
        default=UsdOutcome.AMBIGUOUS,
    )
    return RecipientRecord(outcomes, np.zeros(length, dtype=bool))


def repudiation_trial_abstract(
    params: ProtocolParams, marg: RepudiationMarginals, rand: np.random.Generator
) -> TrialVerdict:
    """Worst-case repudiation with free per-element marginals.

    Bob and Charlie draw their outcomes independently from the same marginals;
    null ports never click in this model.
    """
    bob = _sample_abstract_record(marg, params.length, rand)
    charlie = _sample_abstract_record(marg, params.length, rand)
    return judge(bob, charlie, Declaration.all_plus(params.length), params)


def repudiation_trial_physical(
    params: ProtocolParams, strat: PhysicalRepudiationStrategy, rand: np.random.Generator
) -> TrialVerdict:
    """Repudiation through the multiport with fixed coherent states per recipient."""
    length = params.length
    in_b = np.full(length, complex(strat.amp_to_bob), dtype=np.complex128)
    in_c = np.full(length, complex(strat.amp_to_charlie), dtype=np.complex128)
    signal, null = multiport_arrays(in_b, in_c)
    bob = measure_recipient(signal, null, params.alpha, rand)
    charlie = measure_recipient(signal, null, params.alpha, rand)
    return judge(bob, charlie, Declaration.all_plus(length), params)


__all__ = [
    "optimal_repudiation_marginal",
    "repudiation_trial_abstract",
    "repudiation_trial_physical",
]
