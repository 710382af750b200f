from dataclasses import dataclass
from enum import IntEnum, StrEnum
from typing import Optional

from ...montecarlo import Scenario
from ...protocol import ProtocolParams


class Command(StrEnum):
    BOUNDS = "bounds"
    SIMULATE = "simulate"
    ORACLE = "oracle"
    SWEEP = "sweep"


class OutputFormat(StrEnum):
    JSON = "json"
    CSV = "csv"


class Status(IntEnum):
    """Process exit codes."""

    OK = 0
    INVALID = 1
    FAILURE = 2


@dataclass(frozen=True)
class RunConfig:
    """Everything one command invocation needs, after flags and config are merged."""

    command: Command
    params: ProtocolParams
    format: OutputFormat
    scenario: Optional[Scenario] = None
    n_trials: int = 1
    seed: int = 0
    workers: int = 1


__all__ = ["Command", "OutputFormat", "Status", "RunConfig"]
