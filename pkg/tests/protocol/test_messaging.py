import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from qdsx.exceptions import ParameterError
from qdsx.protocol import (
    AbortReason,
    Declaration,
    ProtocolParams,
    RecipientRecord,
    Role,
    abort_check,
    count_mismatches,
    decide,
    mismatch_threshold,
    unambiguous_window,
)


def _record(length: int, conclusive: int, mismatched: int = 0, nulls: int = 0) -> RecipientRecord:
    """``conclusive`` outcomes, the first ``mismatched`` of them ``-1``, the rest ambiguous."""
    outcomes = np.zeros(length, dtype=np.int8)
    outcomes[:conclusive] = 1
    outcomes[:mismatched] = -1
    null_clicked = np.zeros(length, dtype=bool)
    null_clicked[:nulls] = True
    return RecipientRecord(outcomes, null_clicked)


def test_window_at_default_parameters(params_05_500: ProtocolParams) -> None:
    low, high = unambiguous_window(params_05_500)
    assert low == pytest.approx(177.06, abs=0.01)
    assert high == pytest.approx(216.41, abs=0.01)


@pytest.mark.parametrize(
    "conclusive, reason",
    [
        (177, AbortReason.UNAMBIGUOUS_WINDOW),
        (178, None),
        (216, None),
        (217, AbortReason.UNAMBIGUOUS_WINDOW),
    ],
)
def test_abort_window_is_inclusive(
    params_05_500: ProtocolParams, conclusive: int, reason: AbortReason | None
) -> None:
    assert abort_check(_record(500, conclusive), params_05_500) is reason


def test_null_port_check_comes_first(params_05_500: ProtocolParams) -> None:
    assert abort_check(_record(500, 0, nulls=1), params_05_500) is AbortReason.NULL_PORT_THRESHOLD
    assert abort_check(_record(500, 190, nulls=1), params_05_500) is AbortReason.NULL_PORT_THRESHOLD


def test_count_mismatches_counts_conflicts() -> None:
    record = RecipientRecord(np.array([1, -1, 0, 2, 1]), np.zeros(5, dtype=bool))
    decl = Declaration(0, np.array([1, 1, 1, 1, -1]))
    assert count_mismatches(record, decl) == 3


def test_count_mismatches_rejects_length_mismatch() -> None:
    with pytest.raises(ParameterError):
        count_mismatches(_record(4, 2), Declaration.all_plus(5))


def test_thresholds(params_05_500: ProtocolParams) -> None:
    assert mismatch_threshold(params_05_500, Role.AUTHENTICATOR) == 0.0
    assert mismatch_threshold(params_05_500, Role.VERIFIER) == pytest.approx(2.9166, abs=1e-3)


@pytest.mark.parametrize(
    "mismatched, authenticated, verified",
    [(0, True, True), (1, False, True), (2, False, True), (3, False, False)],
)
def test_decide(
    params_05_500: ProtocolParams, mismatched: int, authenticated: bool, verified: bool
) -> None:
    record = _record(500, 190, mismatched=mismatched)
    decl = Declaration.all_plus(500)
    assert decide(record, decl, params_05_500, Role.AUTHENTICATOR) is authenticated
    assert decide(record, decl, params_05_500, Role.VERIFIER) is verified


def test_verifier_threshold_is_strict() -> None:
    params = ProtocolParams(
        alpha=0.5, length=500, s_a=0.0, s_v=0.01, delta=0.039, r=0.0, epsilon=1e-4
    )
    decl = Declaration.all_plus(500)
    assert decide(_record(500, 190, mismatched=0), decl, params, Role.AUTHENTICATOR)
    threshold = mismatch_threshold(params, Role.VERIFIER)
    assert threshold == pytest.approx(1.967, abs=1e-3)
    assert decide(_record(500, 190, mismatched=1), decl, params, Role.VERIFIER)
    assert not decide(_record(500, 190, mismatched=2), decl, params, Role.VERIFIER)


@settings(max_examples=1000)
@given(
    st.lists(
        st.tuples(st.sampled_from([-1, 0, 1, 2]), st.sampled_from([-1, 1])),
        min_size=1,
        max_size=64,
    ),
    st.data(),
)
def test_flipping_a_conclusive_sign_moves_the_count_by_one(
    elements: list[tuple[int, int]], data: st.DataObject
) -> None:
    outcomes = np.array([o for o, _ in elements], dtype=np.int8)
    signs = np.array([s for _, s in elements], dtype=np.int8)
    conclusive = np.flatnonzero(np.abs(outcomes) == 1)
    assume(conclusive.size > 0)
    position = int(data.draw(st.sampled_from(conclusive.tolist())))

    record = RecipientRecord(outcomes, np.zeros(len(elements), dtype=bool))
    flipped = signs.copy()
    flipped[position] = -flipped[position]
    before = count_mismatches(record, Declaration(0, signs))
    after = count_mismatches(record, Declaration(0, flipped))
    assert after - before == (1 if outcomes[position] == signs[position] else -1)
