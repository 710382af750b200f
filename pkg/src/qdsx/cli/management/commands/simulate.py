"""Management command: simulate

Runs a Monte Carlo experiment for one scenario.
"""

from typing import Any

from django.core.management.base import CommandParser

from ....montecarlo import run_experiment
from ...types import Command as Cmd
from ..helpers.base import QdsCommand
from ..helpers.params import (
    add_format_argument,
    add_parameter_arguments,
    add_scenario_arguments,
    build_run_config,
)
from ..helpers.render import experiment_payload, render_output


class Command(QdsCommand):
    help = "Simulate repeated protocol runs and estimate abort, repudiation and forging rates."

    def add_arguments(self, parser: CommandParser) -> None:
        add_parameter_arguments(parser)
        add_scenario_arguments(parser)
        add_format_argument(parser)
        parser.add_argument("--trials", dest="trials", type=int, help="Number of trials.")
        parser.add_argument("--seed", dest="seed", type=int, help="64-bit experiment seed.")
        parser.add_argument(
            "--workers",
            dest="workers",
            type=int,
            help="Worker threads; results do not depend on it.",
        )
        parser.add_argument(
            "--scale",
            dest="scale",
            type=float,
            help="Active forging: response amplitude relative to the honest one.",
        )
        parser.add_argument(
            "--align-to-guess",
            dest="align_to_guess",
            action="store_true",
            default=None,
            help="Active forging: respond with the guessed instead of the true sign.",
        )
        parser.add_argument(
            "--amp-bob",
            dest="amp_bob",
            type=float,
            help="Physical repudiation: amplitude sent to Bob (default: alpha).",
        )
        parser.add_argument(
            "--amp-charlie",
            dest="amp_charlie",
            type=float,
            help="Physical repudiation: amplitude sent to Charlie (default: alpha).",
        )

    def run(self, **options: Any) -> str:
        config = build_run_config(Cmd.SIMULATE, options)
        assert config.scenario is not None
        result = run_experiment(
            config.scenario,
            config.params,
            config.n_trials,
            config.seed,
            workers=config.workers,
        )
        return render_output(experiment_payload(result), config.format)
