import math
from dataclasses import dataclass

from ..exceptions import ParameterError
from ..optics import ComplexAmplitude

_SIMPLEX_TOLERANCE = 1e-12


@dataclass(frozen=True, slots=True)
class RepudiationMarginals:
    """Per-element outcome probabilities a repudiating Alice imposes on each recipient,
    relative to her own declaration."""

    p_match: float
    p_mismatch: float
    p_ambiguous: float

    def __post_init__(self) -> None:
        values = (self.p_match, self.p_mismatch, self.p_ambiguous)
        if any(not (math.isfinite(p) and 0.0 <= p <= 1.0) for p in values):
            raise ParameterError(f"marginals must lie in [0, 1], got {values}")
        if abs(math.fsum(values) - 1.0) > _SIMPLEX_TOLERANCE:
            raise ParameterError(f"marginals must sum to 1, got {math.fsum(values)}")

    @classmethod
    def with_mismatch(cls, p_mismatch: float, p_unambiguous: float) -> "RepudiationMarginals":
        """Marginals with a given conclusive mass, ``p_mismatch`` of it disagreeing."""
        if p_mismatch > p_unambiguous:
            raise ParameterError(
                f"p_mismatch={p_mismatch} exceeds the unambiguous mass {p_unambiguous}"
            )
        return cls(
            p_match=p_unambiguous - p_mismatch,
            p_mismatch=p_mismatch,
            p_ambiguous=1.0 - p_unambiguous,
        )


@dataclass(frozen=True, slots=True)
class PhysicalRepudiationStrategy:
    """Coherent amplitudes Alice sends to Bob and to Charlie for every element."""

    amp_to_bob: ComplexAmplitude
    amp_to_charlie: ComplexAmplitude

    @classmethod
    def honest(cls, alpha: float) -> "PhysicalRepudiationStrategy":
        return cls(ComplexAmplitude(alpha), ComplexAmplitude(alpha))


@dataclass(frozen=True, slots=True)
class ActiveResponsePolicy:
    """Coherent response states a tampering Bob forwards to Charlie.

    Attributes:
        scale: Response magnitude in units of the honest forwarded amplitude α/√2.
        align_to_guess: Use Bob's guessed sign instead of the true one.
    """

    scale: float = 1.0
    align_to_guess: bool = False

    def __post_init__(self) -> None:
        if not (math.isfinite(self.scale) and self.scale >= 0.0):
            raise ParameterError(f"scale must be a non-negative finite number, got {self.scale}")

    @property
    def is_honest(self) -> bool:
        return self.scale == 1.0 and not self.align_to_guess


__all__ = ["RepudiationMarginals", "PhysicalRepudiationStrategy", "ActiveResponsePolicy"]
