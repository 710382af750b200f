"""Management command utilities: params

Merges command-line flags with the experiment configuration (config file,
environment, pyproject.toml) into validated protocol parameters and scenarios.
"""

import logging
import pathlib
from typing import Any, Optional

from ....adversaries import (
    ActiveResponsePolicy,
    PhysicalRepudiationStrategy,
    RepudiationMarginals,
    optimal_repudiation_marginal,
)
from ....bounds import check_constraints, default_params
from ....exceptions import ConstraintError, ParameterError
from ....montecarlo import (
    ForgeActiveScenario,
    ForgePassiveScenario,
    HonestScenario,
    MonteCarloConf,
    RepudiateAbstractScenario,
    RepudiatePhysicalScenario,
    Scenario,
    ScenarioKind,
)
from ....optics import ComplexAmplitude
from ....protocol import ProtocolParams
from ...settings import EXPERIMENT, ExperimentConf
from ...types import Command, OutputFormat, RunConfig

logger = logging.getLogger(__name__)

_THRESHOLDS = ("s_a", "s_v", "delta", "r", "epsilon")


def add_parameter_arguments(parser: Any) -> None:
    """Flags for the protocol parameters and the config file."""
    parser.add_argument(
        "--config",
        dest="config",
        type=pathlib.Path,
        help="Flat 'key = value' file with the same keys as the flags.",
    )
    parser.add_argument("--alpha", dest="alpha", type=float, help="Coherent amplitude.")
    parser.add_argument("--length", dest="length", type=int, help="Signature length L.")
    parser.add_argument("--s-a", dest="s_a", type=float, help="Authentication threshold.")
    parser.add_argument("--s-v", dest="s_v", type=float, help="Verification threshold.")
    parser.add_argument("--delta", dest="delta", type=float, help="Unambiguous-rate tolerance.")
    parser.add_argument("--r", dest="r", type=float, help="Null-port abort fraction.")
    parser.add_argument("--epsilon", dest="epsilon", type=float, help="Null-port slack.")


def add_format_argument(parser: Any) -> None:
    parser.add_argument(
        "--format",
        dest="format",
        choices=[fmt.value for fmt in OutputFormat],
        help="Output format (default: json).",
    )


def add_scenario_arguments(parser: Any, choices: Optional[list[str]] = None) -> None:
    """Flags selecting a scenario and its strategy payload."""
    parser.add_argument(
        "--scenario",
        dest="scenario",
        choices=choices or [kind.value for kind in ScenarioKind],
        help="Who cheats and how.",
    )
    parser.add_argument(
        "--p-mismatch",
        dest="p_mismatch",
        type=float,
        help="Per-element mismatch probability of abstract repudiation (default: optimal).",
    )


def load_conf(options: dict[str, Any]) -> ExperimentConf:
    """The experiment configuration, reading ``--config`` when given.

    Raises:
        ParameterError: If the config file is missing or has unknown keys
    """
    path: Optional[pathlib.Path] = options.get("config")
    if path is None:
        return EXPERIMENT
    try:
        conf = ExperimentConf(path)
    except FileNotFoundError as e:
        raise ParameterError(str(e)) from e
    unknown = conf.unknown_file_keys()
    if unknown:
        raise ParameterError(f"Unknown keys in {path}: {', '.join(unknown)}")
    return conf


def pick(options: dict[str, Any], conf: ExperimentConf, name: str) -> Any:
    """Flag value if given, otherwise the configured one."""
    value = options.get(name)
    return getattr(conf, name) if value is None else value


def assemble_params(options: dict[str, Any], conf: ExperimentConf) -> ProtocolParams:
    """Validated protocol parameters; omitted thresholds come from the default choice.

    Raises:
        ConstraintError: Naming the first violated constraint
        ParameterError: If a parameter is outside its domain
    """
    alpha, length = pick(options, conf, "alpha"), pick(options, conf, "length")
    defaults = default_params(alpha, length, strict=False)
    values: dict[str, Any] = {"alpha": alpha, "length": length}
    for name in _THRESHOLDS:
        given = pick(options, conf, name)
        values[name] = getattr(defaults, name) if given is None else given

    candidate = ProtocolParams.unchecked(**values)
    violated = check_constraints(candidate).violations()
    if violated:
        raise ConstraintError(
            f"Parameters violate constraint(s): {', '.join(violated)}", constraint=violated[0]
        )
    logger.debug("Assembled parameters %s", values)
    return ProtocolParams(**values)


def build_scenario(
    kind: ScenarioKind, params: ProtocolParams, options: dict[str, Any], conf: ExperimentConf
) -> Scenario:
    match kind:
        case ScenarioKind.HONEST:
            return HonestScenario()
        case ScenarioKind.REPUDIATE_ABSTRACT:
            p_mismatch = pick(options, conf, "p_mismatch")
            if p_mismatch is None:
                p_mismatch = optimal_repudiation_marginal(params)
            return RepudiateAbstractScenario(
                RepudiationMarginals.with_mismatch(p_mismatch, params.p_usd)
            )
        case ScenarioKind.REPUDIATE_PHYSICAL:
            amp_bob = pick(options, conf, "amp_bob")
            amp_charlie = pick(options, conf, "amp_charlie")
            return RepudiatePhysicalScenario(
                PhysicalRepudiationStrategy(
                    ComplexAmplitude(params.alpha if amp_bob is None else amp_bob),
                    ComplexAmplitude(params.alpha if amp_charlie is None else amp_charlie),
                )
            )
        case ScenarioKind.FORGE_PASSIVE:
            return ForgePassiveScenario()
        case ScenarioKind.FORGE_ACTIVE:
            return ForgeActiveScenario(
                ActiveResponsePolicy(
                    scale=pick(options, conf, "scale"),
                    align_to_guess=bool(pick(options, conf, "align_to_guess")),
                )
            )


def build_run_config(command: Command, options: dict[str, Any]) -> RunConfig:
    """Merge flags and configuration into a :class:`RunConfig`."""
    conf = load_conf(options)
    params = assemble_params(options, conf)
    scenario: Optional[Scenario] = None
    if command is Command.SIMULATE:
        scenario = build_scenario(
            ScenarioKind(pick(options, conf, "scenario")), params, options, conf
        )
    workers = options.get("workers")
    if workers is None:
        path = options.get("config")
        workers = (MonteCarloConf(path) if path is not None else MonteCarloConf()).workers
    return RunConfig(
        command=command,
        params=params,
        format=OutputFormat(pick(options, conf, "format")),
        scenario=scenario,
        n_trials=pick(options, conf, "trials"),
        seed=pick(options, conf, "seed"),
        workers=workers or 1,
    )
