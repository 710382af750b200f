"""Management command: oracle

Prints exact reference probabilities computed from binomial laws, or the
Hoeffding bound for a given deviation.
"""

from typing import Any

from django.core.management.base import CommandParser

from ....adversaries import RepudiationMarginals, optimal_repudiation_marginal
from ....exceptions import ParameterError
from ....montecarlo import (
    ScenarioKind,
    either_aborts,
    exact_forge_passive,
    exact_honest_abort,
    exact_repudiation_abstract,
    hoeffding_bound,
)
from ...types import Command as Cmd
from ..helpers.base import QdsCommand
from ..helpers.params import (
    add_format_argument,
    add_parameter_arguments,
    add_scenario_arguments,
    build_run_config,
    load_conf,
    pick,
)
from ..helpers.render import oracle_entry, render_output

ORACLE_SCENARIOS = [
    ScenarioKind.HONEST.value,
    ScenarioKind.REPUDIATE_ABSTRACT.value,
    ScenarioKind.FORGE_PASSIVE.value,
]


class Command(QdsCommand):
    help = "Exact binomial probabilities for small parameter sets, or the Hoeffding bound."

    def add_arguments(self, parser: CommandParser) -> None:
        add_parameter_arguments(parser)
        add_scenario_arguments(parser, choices=ORACLE_SCENARIOS)
        add_format_argument(parser)
        parser.add_argument(
            "--hoeffding-t",
            dest="hoeffding_t",
            type=float,
            help="Evaluate the Hoeffding bound for this deviation at --length instead.",
        )

    def run(self, **options: Any) -> str:
        config = build_run_config(Cmd.ORACLE, options)
        params = config.params
        oracles: dict[str, Any] = {}

        t = options.get("hoeffding_t")
        if t is not None:
            oracles["hoeffding"] = oracle_entry(hoeffding_bound(t, params.length))
            oracles["hoeffding_two_sided"] = oracle_entry(
                hoeffding_bound(t, params.length, two_sided=True)
            )
        else:
            conf = load_conf(options)
            kind = ScenarioKind(pick(options, conf, "scenario"))
            if kind.value not in ORACLE_SCENARIOS:
                raise ParameterError(f"no exact oracle for scenario '{kind}'")
            match kind:
                case ScenarioKind.HONEST:
                    single = exact_honest_abort(params)
                    oracles["honest_abort_single"] = oracle_entry(single)
                    oracles["honest_abort"] = oracle_entry(either_aborts(single))
                case ScenarioKind.REPUDIATE_ABSTRACT:
                    p_mismatch = pick(options, conf, "p_mismatch")
                    if p_mismatch is None:
                        p_mismatch = optimal_repudiation_marginal(params)
                    marg = RepudiationMarginals.with_mismatch(p_mismatch, params.p_usd)
                    oracles["repudiation"] = oracle_entry(exact_repudiation_abstract(params, marg))
                    oracles["repudiation_tails_only"] = oracle_entry(
                        exact_repudiation_abstract(params, marg, include_aborts=False)
                    )
                case ScenarioKind.FORGE_PASSIVE:
                    oracles["forge_passive"] = oracle_entry(exact_forge_passive(params))

        return render_output({"parameters": params.as_dict(), "oracles": oracles}, config.format)
