import math
from dataclasses import dataclass
from enum import IntEnum
from typing import Self

import numpy as np

from ..exceptions import ParameterError

_NORMALISATION_TOLERANCE = 1e-12


@dataclass(frozen=True, slots=True)
class ComplexAmplitude:
    """Coherent-state amplitude of a single optical mode.

    The squared magnitude is the mean photon number of the mode.
    """

    re: float
    im: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise ParameterError(f"Amplitude components must be finite, got ({self.re}, {self.im})")

    @classmethod
    def of(cls, value: "complex | float | ComplexAmplitude") -> "ComplexAmplitude":
        """Build an amplitude from a Python number (or return it unchanged)."""
        if isinstance(value, ComplexAmplitude):
            return value
        z = complex(value)
        return cls(z.real, z.imag)

    @property
    def photon_number(self) -> float:
        return self.re * self.re + self.im * self.im

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __abs__(self) -> float:
        return math.hypot(self.re, self.im)

    def __neg__(self) -> Self:
        return type(self)(-self.re, -self.im)

    def __add__(self, other: "ComplexAmplitude") -> "ComplexAmplitude":
        return ComplexAmplitude(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ComplexAmplitude") -> "ComplexAmplitude":
        return ComplexAmplitude(self.re - other.re, self.im - other.im)

    def __mul__(self, factor: float) -> "ComplexAmplitude":
        return ComplexAmplitude(self.re * factor, self.im * factor)

    __rmul__ = __mul__

    def __truediv__(self, divisor: float) -> "ComplexAmplitude":
        return ComplexAmplitude(self.re / divisor, self.im / divisor)


@dataclass(frozen=True, slots=True)
class ModeQuadruple:
    """Output modes of the multiport: Bob's and Charlie's signal and null ports."""

    b_signal: ComplexAmplitude
    c_signal: ComplexAmplitude
    b_null: ComplexAmplitude
    c_null: ComplexAmplitude

    @property
    def total_photon_number(self) -> float:
        return sum(
            mode.photon_number for mode in (self.b_signal, self.c_signal, self.b_null, self.c_null)
        )


class UsdOutcome(IntEnum):
    """Result of one unambiguous state discrimination measurement.

    The values of the two conclusive outcomes are the identified sign, so an
    outcome compares directly against a declared sign.
    """

    MINUS_ALPHA = -1
    AMBIGUOUS = 0
    PLUS_ALPHA = 1
    # both detectors fired; only possible when the mode is neither +alpha nor -alpha
    CONFLICT = 2


@dataclass(frozen=True, slots=True)
class OutcomeDistribution:
    """Probabilities of the four USD outcomes for one measured mode."""

    p_plus: float
    p_minus: float
    p_ambiguous: float
    p_conflict: float

    def __post_init__(self) -> None:
        values = (self.p_plus, self.p_minus, self.p_ambiguous, self.p_conflict)
        if any(not 0.0 <= p <= 1.0 for p in values):
            raise ParameterError(f"Outcome probabilities must lie in [0, 1], got {values}")
        if abs(math.fsum(values) - 1.0) > _NORMALISATION_TOLERANCE:
            raise ParameterError(f"Outcome probabilities must sum to 1, got {math.fsum(values)}")

    @property
    def p_unambiguous(self) -> float:
        return self.p_plus + self.p_minus

    def cumulative(self) -> np.ndarray:
        """Cumulative masses in sampling order: plus, minus, conflict (ambiguous fills the rest)."""
        return np.cumsum([self.p_plus, self.p_minus, self.p_conflict])


__all__ = ["ComplexAmplitude", "ModeQuadruple", "UsdOutcome", "OutcomeDistribution"]
