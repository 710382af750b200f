import math
from dataclasses import dataclass

from ..protocol import DerivedRates


@dataclass(frozen=True, slots=True)
class ConstraintReport:
    """Feasibility of a parameter set.

    Attributes:
        sv_gt_sa: Whether the verification threshold exceeds the authentication one.
        forge_margin: ``p'_min − s_v·p_usd/(p_usd−δ) − √(ε+r)``; the active
            forging bound only decays when this is positive.
        delta_valid: Whether ``0 < δ < p_usd``.
        passive_margin: ``p_min − s_v·p_usd/(p_usd−δ)``; proviso of the passive bound.
    """

    sv_gt_sa: bool
    forge_margin: float
    delta_valid: bool
    passive_margin: float

    @property
    def ok(self) -> bool:
        return self.sv_gt_sa and self.delta_valid and self.forge_margin > 0.0

    def violations(self) -> list[str]:
        violated: list[str] = []
        if not self.sv_gt_sa:
            violated.append("sv_gt_sa")
        if not self.delta_valid:
            violated.append("delta_valid")
        if not self.forge_margin > 0.0:
            violated.append("forge_margin")
        return violated

    def as_dict(self) -> dict[str, bool | float]:
        return {
            "sv_gt_sa": self.sv_gt_sa,
            "forge_margin": self.forge_margin,
            "delta_valid": self.delta_valid,
            "passive_margin": self.passive_margin,
            "ok": self.ok,
        }


@dataclass(frozen=True, slots=True)
class BoundsReport:
    """Decimal logarithms of the correctness and security upper bounds."""

    log10_honest_abort_ub: float
    log10_repudiation_ub: float
    log10_forge_passive_ub: float
    log10_forge_active_ub: float
    rates: DerivedRates
    constraints: ConstraintReport

    @property
    def worst_security_log10(self) -> float:
        """The largest of the repudiation and forging log-bounds."""
        return max(
            self.log10_repudiation_ub, self.log10_forge_passive_ub, self.log10_forge_active_ub
        )

    def bounds_log10(self) -> dict[str, float]:
        return {
            "honest_abort": self.log10_honest_abort_ub,
            "repudiation": self.log10_repudiation_ub,
            "forge_passive": self.log10_forge_passive_ub,
            "forge_active": self.log10_forge_active_ub,
        }


@dataclass(frozen=True, slots=True)
class SimplifiedBounds:
    """Rounded-constant forms of the bounds, valid at the default parameter choice."""

    log10_honest_abort_ub: float
    log10_repudiation_ub: float
    log10_forge_ub: float

    def as_probabilities(self) -> dict[str, float]:
        return {
            "honest_abort": math.pow(10.0, self.log10_honest_abort_ub),
            "repudiation": math.pow(10.0, self.log10_repudiation_ub),
            "forge": math.pow(10.0, self.log10_forge_ub),
        }


__all__ = ["ConstraintReport", "BoundsReport", "SimplifiedBounds"]
