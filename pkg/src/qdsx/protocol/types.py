import math
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Optional

import numpy as np

from ..exceptions import ParameterError
from ..optics import UsdOutcome, usd_success_probability


@dataclass(frozen=True)
class ProtocolParams:
    """Tunable parameters of one protocol instance.

    Attributes:
        alpha: Coherent amplitude of every signature element.
        length: Signature length L (elements per private key).
        s_a: Authentication threshold, as a fraction of ``p_usd * length``.
        s_v: Verification threshold, as a fraction of ``p_usd * length``.
        delta: Tolerance on the fraction of unambiguous outcomes.
        r: Fraction of null-port clicks that triggers an abort.
        epsilon: Slack of the null-port estimate used by the active-forging bound.
    """

    alpha: float
    length: int
    s_a: float
    s_v: float
    delta: float
    r: float
    epsilon: float

    def __post_init__(self) -> None:
        self._check_domain()
        if not 0.0 <= self.s_a < self.s_v < 1.0:
            raise ParameterError(
                f"thresholds must satisfy 0 <= s_a < s_v < 1, got s_a={self.s_a}, s_v={self.s_v}"
            )
        if not 0.0 < self.delta < self.p_usd:
            raise ParameterError(
                f"delta must lie in (0, p_usd={self.p_usd:.6g}), got {self.delta}"
            )
        if not 0.0 <= self.r < 1.0:
            raise ParameterError(f"r must lie in [0, 1), got {self.r}")
        if self.epsilon <= 0.0:
            raise ParameterError(f"epsilon must be positive, got {self.epsilon}")

    def _check_domain(self) -> None:
        values = (self.alpha, self.s_a, self.s_v, self.delta, self.r, self.epsilon)
        if not all(isinstance(v, (int, float, np.number)) and math.isfinite(v) for v in values):
            raise ParameterError(f"Parameters must be finite reals, got {values}")
        if self.alpha <= 0.0:
            raise ParameterError(f"alpha must be positive, got {self.alpha}")
        if (
            isinstance(self.length, bool)
            or not isinstance(self.length, (int, float, np.integer))
            or int(self.length) != self.length
            or self.length < 1
        ):
            raise ParameterError(f"length must be a positive integer, got {self.length}")
        object.__setattr__(self, "length", int(self.length))
        if min(self.s_a, self.s_v, self.delta, self.r, self.epsilon) < 0.0:
            raise ParameterError(f"thresholds and tolerances must be non-negative, got {values}")

    @classmethod
    def unchecked(cls, **values: float) -> "ProtocolParams":
        """Build a parameter set that only satisfies the domain checks.

        Used to analyse candidate parameters (``check_constraints``,
        ``compute_bounds``) before they are accepted for simulation.
        """
        params = object.__new__(cls)
        for name in cls.__dataclass_fields__:
            object.__setattr__(params, name, values[name])
        params._check_domain()
        return params

    @property
    def is_valid(self) -> bool:
        """True if the full set of protocol invariants holds."""
        try:
            ProtocolParams(**self.as_dict())
        except ParameterError:
            return False
        return True

    @property
    def p_usd(self) -> float:
        return usd_success_probability(self.alpha)

    def as_dict(self) -> dict[str, float | int]:
        return {
            "alpha": self.alpha,
            "length": self.length,
            "s_a": self.s_a,
            "s_v": self.s_v,
            "delta": self.delta,
            "r": self.r,
            "epsilon": self.epsilon,
        }


@dataclass(frozen=True, slots=True)
class DerivedRates:
    """Probabilities fixed by the amplitude alone.

    Attributes:
        p_usd: Conclusive-outcome probability of the USD measurement.
        p_min: Minimum-error probability on a single copy of amplitude α.
        p_min_prime: Minimum-error probability on amplitude √(3/2)·α, the most
            an active forger can collect.
    """

    p_usd: float
    p_min: float
    p_min_prime: float

    def as_dict(self) -> dict[str, float]:
        return {"p_usd": self.p_usd, "p_min": self.p_min, "p_min_prime": self.p_min_prime}


def _as_signs(signs: np.ndarray | list[int]) -> np.ndarray:
    array = np.asarray(signs, dtype=np.int8)
    if array.ndim != 1 or array.size == 0:
        raise ParameterError("a sign sequence must be a non-empty one-dimensional array")
    if not np.all(np.abs(array) == 1):
        raise ParameterError("sign sequences may only contain -1 and +1")
    return array


@dataclass(frozen=True, eq=False)
class PrivateKey:
    """Message bit and the secret signs of its quantum signature."""

    message: int
    signs: np.ndarray

    def __post_init__(self) -> None:
        if self.message not in (0, 1):
            raise ParameterError(f"message must be a bit, got {self.message}")
        object.__setattr__(self, "signs", _as_signs(self.signs))

    def __len__(self) -> int:
        return int(self.signs.shape[0])


@dataclass(frozen=True, eq=False)
class Declaration:
    """A message together with the sign string claimed to be its private key."""

    message: int
    signs: np.ndarray

    def __post_init__(self) -> None:
        if self.message not in (0, 1):
            raise ParameterError(f"message must be a bit, got {self.message}")
        object.__setattr__(self, "signs", _as_signs(self.signs))

    def __len__(self) -> int:
        return int(self.signs.shape[0])

    @classmethod
    def of(cls, key: PrivateKey) -> "Declaration":
        """The honest declaration ``(m, PrivKey_m)``."""
        return cls(key.message, key.signs)

    @classmethod
    def all_plus(cls, length: int, message: int = 0) -> "Declaration":
        return cls(message, np.ones(length, dtype=np.int8))


@dataclass(frozen=True, eq=False)
class RecipientRecord:
    """One recipient's stored USD outcomes and null-port click flags."""

    outcomes: np.ndarray
    null_clicked: np.ndarray

    def __post_init__(self) -> None:
        outcomes = np.asarray(self.outcomes, dtype=np.int8)
        null_clicked = np.asarray(self.null_clicked, dtype=bool)
        if outcomes.ndim != 1 or outcomes.shape != null_clicked.shape:
            raise ParameterError("outcomes and null_clicked must be 1-D arrays of equal length")
        if not np.all(np.isin(outcomes, [int(o) for o in UsdOutcome])):
            raise ParameterError("outcomes must be UsdOutcome codes")
        object.__setattr__(self, "outcomes", outcomes)
        object.__setattr__(self, "null_clicked", null_clicked)

    def __len__(self) -> int:
        return int(self.outcomes.shape[0])

    @property
    def unambiguous_count(self) -> int:
        """Conclusive results only; conflicts are not valid USD results."""
        return int(np.count_nonzero(np.abs(self.outcomes) == 1))

    @property
    def null_count(self) -> int:
        return int(np.count_nonzero(self.null_clicked))


class AbortReason(StrEnum):
    UNAMBIGUOUS_WINDOW = "unambiguous_window"
    NULL_PORT_THRESHOLD = "null_port_threshold"


class Role(StrEnum):
    AUTHENTICATOR = "authenticator"
    VERIFIER = "verifier"


@dataclass(frozen=True, slots=True)
class TrialVerdict:
    """Outcome of one protocol run from the two recipients' point of view.

    The ``charlie_*`` counters are diagnostics of Charlie's record (the
    verifier in every scenario).
    """

    bob_authenticated: bool
    charlie_verified: bool
    bob_abort: Optional[AbortReason] = None
    charlie_abort: Optional[AbortReason] = None
    charlie_mismatches: int = field(default=0, compare=False)
    charlie_unambiguous: int = field(default=0, compare=False)
    charlie_null_clicks: int = field(default=0, compare=False)

    @property
    def aborted(self) -> bool:
        return self.bob_abort is not None or self.charlie_abort is not None

    @property
    def repudiation_success(self) -> bool:
        return self.bob_authenticated and not self.charlie_verified and not self.aborted

    @property
    def forge_success(self) -> bool:
        return self.charlie_verified and self.charlie_abort is None


__all__ = [
    "ProtocolParams",
    "DerivedRates",
    "PrivateKey",
    "Declaration",
    "RecipientRecord",
    "AbortReason",
    "Role",
    "TrialVerdict",
]
