from abc import ABC, abstractmethod
from dataclasses import asdict, dataclass, field
from enum import StrEnum
from typing import Any, ClassVar

import numpy as np

from ..adversaries import (
    ActiveResponsePolicy,
    PhysicalRepudiationStrategy,
    RepudiationMarginals,
    forge_active_trial,
    forge_passive_trial,
    repudiation_trial_abstract,
    repudiation_trial_physical,
)
from ..exceptions import ParameterError
from ..protocol import ProtocolParams, TrialVerdict, run_honest_trial


@dataclass(frozen=True, slots=True)
class Estimate:
    """Monte Carlo rate of one event with its 95% Wilson score interval."""

    successes: int
    trials: int
    rate: float
    ci_low: float
    ci_high: float

    def __post_init__(self) -> None:
        if not 0 <= self.successes <= self.trials or self.trials < 1:
            raise ParameterError(
                f"need 0 <= successes <= trials and trials >= 1, got {self.successes}/{self.trials}"
            )
        if not 0.0 <= self.ci_low <= self.rate <= self.ci_high <= 1.0:
            raise ParameterError(
                f"interval [{self.ci_low}, {self.ci_high}] does not bracket {self.rate} in [0, 1]"
            )


class ScenarioKind(StrEnum):
    HONEST = "honest"
    REPUDIATE_ABSTRACT = "repudiate-abstract"
    REPUDIATE_PHYSICAL = "repudiate-physical"
    FORGE_PASSIVE = "forge-passive"
    FORGE_ACTIVE = "forge-active"


class Scenario(ABC):
    """A protocol run to repeat: which participant cheats and how.

    Subclasses carry their strategy as dataclass fields, so a scenario's
    payload always matches its kind.
    """

    kind: ClassVar[ScenarioKind]

    @abstractmethod
    def run_trial(self, params: ProtocolParams, rand: np.random.Generator) -> TrialVerdict:
        """Execute one independent protocol run."""
        pass

    def payload(self) -> dict[str, Any]:
        """Strategy parameters, for reporting."""
        return {}


@dataclass(frozen=True)
class HonestScenario(Scenario):
    kind: ClassVar[ScenarioKind] = ScenarioKind.HONEST

    def run_trial(self, params: ProtocolParams, rand: np.random.Generator) -> TrialVerdict:
        return run_honest_trial(params, rand)


@dataclass(frozen=True)
class RepudiateAbstractScenario(Scenario):
    kind: ClassVar[ScenarioKind] = ScenarioKind.REPUDIATE_ABSTRACT

    marginals: RepudiationMarginals

    def run_trial(self, params: ProtocolParams, rand: np.random.Generator) -> TrialVerdict:
        return repudiation_trial_abstract(params, self.marginals, rand)

    def payload(self) -> dict[str, Any]:
        return asdict(self.marginals)


@dataclass(frozen=True)
class RepudiatePhysicalScenario(Scenario):
    kind: ClassVar[ScenarioKind] = ScenarioKind.REPUDIATE_PHYSICAL

    strategy: PhysicalRepudiationStrategy

    def run_trial(self, params: ProtocolParams, rand: np.random.Generator) -> TrialVerdict:
        return repudiation_trial_physical(params, self.strategy, rand)

    def payload(self) -> dict[str, Any]:
        bob, charlie = self.strategy.amp_to_bob, self.strategy.amp_to_charlie
        return {"amp_to_bob": [bob.re, bob.im], "amp_to_charlie": [charlie.re, charlie.im]}


@dataclass(frozen=True)
class ForgePassiveScenario(Scenario):
    kind: ClassVar[ScenarioKind] = ScenarioKind.FORGE_PASSIVE

    def run_trial(self, params: ProtocolParams, rand: np.random.Generator) -> TrialVerdict:
        return forge_passive_trial(params, rand)


@dataclass(frozen=True)
class ForgeActiveScenario(Scenario):
    kind: ClassVar[ScenarioKind] = ScenarioKind.FORGE_ACTIVE

    policy: ActiveResponsePolicy = field(default_factory=ActiveResponsePolicy)

    def run_trial(self, params: ProtocolParams, rand: np.random.Generator) -> TrialVerdict:
        return forge_active_trial(params, self.policy, rand)

    def payload(self) -> dict[str, Any]:
        return asdict(self.policy)


@dataclass(frozen=True, slots=True)
class Tally:
    """Integer event counts over a batch of trials; batches add up order-independently."""

    trials: int = 0
    aborts: int = 0
    repudiations: int = 0
    forgeries: int = 0
    mismatches: int = 0
    unambiguous: int = 0
    null_clicks: int = 0

    def __add__(self, other: "Tally") -> "Tally":
        return Tally(*(a + b for a, b in zip(asdict(self).values(), asdict(other).values())))

    @classmethod
    def of(cls, verdict: TrialVerdict) -> "Tally":
        return cls(
            trials=1,
            aborts=int(verdict.aborted),
            repudiations=int(verdict.repudiation_success),
            forgeries=int(verdict.forge_success),
            mismatches=verdict.charlie_mismatches,
            unambiguous=verdict.charlie_unambiguous,
            null_clicks=verdict.charlie_null_clicks,
        )


@dataclass(frozen=True, slots=True)
class ExperimentResult:
    """Aggregated outcome of :func:`run_experiment`.

    ``estimates`` holds the ``abort``, ``repudiation_success`` and
    ``forge_success`` events; ``means`` holds Charlie's per-element mismatch,
    unambiguous and null-click fractions averaged over all trials.
    """

    scenario: Scenario
    params: ProtocolParams
    n_trials: int
    seed: int
    estimates: dict[str, Estimate]
    means: dict[str, float]


__all__ = [
    "Estimate",
    "ScenarioKind",
    "Scenario",
    "HonestScenario",
    "RepudiateAbstractScenario",
    "RepudiatePhysicalScenario",
    "ForgePassiveScenario",
    "ForgeActiveScenario",
    "Tally",
    "ExperimentResult",
]
