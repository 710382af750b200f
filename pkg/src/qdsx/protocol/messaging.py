"""Messaging stage: abort checks, mismatch counting and the accept/reject decisions.

All thresholds are compared as reals; nothing is rounded to an integer count.
"""

from typing import Optional

import numpy as np

from ..exceptions import ParameterError
from .types import AbortReason, Declaration, ProtocolParams, RecipientRecord, Role


def unambiguous_window(params: ProtocolParams) -> tuple[float, float]:
    """Inclusive bounds ``[(p_usd-δ)L, (p_usd+δ)L]`` on the unambiguous count."""
    p_usd = params.p_usd
    return (p_usd - params.delta) * params.length, (p_usd + params.delta) * params.length


def null_port_limit(params: ProtocolParams) -> float:
    return params.r * params.length


def mismatch_threshold(params: ProtocolParams, role: Role) -> float:
    """``s·p_usd·L`` for the authenticator (s_a) or the verifier (s_v)."""
    fraction = params.s_a if role is Role.AUTHENTICATOR else params.s_v
    return fraction * params.p_usd * params.length


def abort_check(record: RecipientRecord, params: ProtocolParams) -> Optional[AbortReason]:
    """Reason to abort, if any; the null-port check is evaluated first."""
    if record.null_count > null_port_limit(params):
        return AbortReason.NULL_PORT_THRESHOLD
    low, high = unambiguous_window(params)
    if not low <= record.unambiguous_count <= high:
        return AbortReason.UNAMBIGUOUS_WINDOW
    return None


def count_mismatches(record: RecipientRecord, decl: Declaration) -> int:
    """Conclusive outcomes disagreeing with the declared sign, plus every conflict.

    Raises:
        ParameterError: If the record and the declaration differ in length
    """
    if len(record) != len(decl):
        raise ParameterError(
            f"record has {len(record)} elements but the declaration has {len(decl)}"
        )
    outcomes = record.outcomes
    # ambiguous (0) never counts; conflict (2) never equals a sign
    return int(np.count_nonzero((outcomes != 0) & (outcomes != decl.signs)))


def decide(
    record: RecipientRecord, decl: Declaration, params: ProtocolParams, role: Role
) -> bool:
    """Authenticator accepts on ``mismatches <= s_a·p_usd·L``, verifier on ``< s_v·p_usd·L``."""
    mismatches = count_mismatches(record, decl)
    threshold = mismatch_threshold(params, role)
    if role is Role.AUTHENTICATOR:
        return mismatches <= threshold
    return mismatches < threshold


__all__ = [
    "unambiguous_window",
    "null_port_limit",
    "mismatch_threshold",
    "abort_check",
    "count_mismatches",
    "decide",
]
