"""Management command: bounds

Evaluates the correctness and security bounds for one parameter set.
"""

from typing import Any

from django.core.management.base import CommandParser

from ....bounds import compute_bounds, simplified_bounds
from ...types import Command as Cmd
from ..helpers.base import QdsCommand
from ..helpers.params import add_format_argument, add_parameter_arguments, build_run_config
from ..helpers.render import bounds_payload, render_output


class Command(QdsCommand):
    help = "Compute log10 upper bounds on honest abort, repudiation and forging."

    def add_arguments(self, parser: CommandParser) -> None:
        add_parameter_arguments(parser)
        add_format_argument(parser)
        parser.add_argument(
            "--simplified",
            dest="simplified",
            action="store_true",
            help="Also report the rounded-constant forms valid at the default choice.",
        )

    def run(self, **options: Any) -> str:
        config = build_run_config(Cmd.BOUNDS, options)
        report = compute_bounds(config.params)
        payload = bounds_payload(config.params, report)
        if options.get("simplified"):
            simple = simplified_bounds(config.params)
            payload["bounds_log10"] = {
                **payload["bounds_log10"],
                "simplified_honest_abort": simple.log10_honest_abort_ub,
                "simplified_repudiation": simple.log10_repudiation_ub,
                "simplified_forge": simple.log10_forge_ub,
            }
        return render_output(payload, config.format)
