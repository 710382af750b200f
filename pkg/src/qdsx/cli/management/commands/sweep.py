"""Management command: sweep

Tabulates the bounds at the default parameter choice over an amplitude
grid or over several signature lengths.
"""

import pathlib
from typing import Any

from django.core.management.base import CommandParser

from ....bounds import best_alpha, default_params, sweep_alpha, sweep_length
from ....exceptions import ParameterError
from ...types import Command as Cmd
from ...types import OutputFormat, RunConfig
from ..helpers.base import QdsCommand
from ..helpers.params import add_format_argument, load_conf, pick
from ..helpers.render import render_output, sweep_row


def _lengths(value: str) -> list[int]:
    try:
        lengths = [int(item) for item in value.split(",") if item.strip()]
    except ValueError as e:
        raise ParameterError(f"--lengths expects comma-separated integers, got {value!r}") from e
    return lengths


class Command(QdsCommand):
    help = "Sweep the default-parameter bounds over alpha or over signature lengths."

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument(
            "--config", dest="config", type=pathlib.Path, help="Flat 'key = value' config file."
        )
        parser.add_argument("--alpha-min", dest="alpha_min", type=float, default=0.05)
        parser.add_argument("--alpha-max", dest="alpha_max", type=float, default=1.0)
        parser.add_argument("--steps", dest="steps", type=int, default=20)
        parser.add_argument("--length", dest="length", type=int, help="Signature length L.")
        parser.add_argument(
            "--alpha", dest="alpha", type=float, help="Fixed amplitude of a length sweep."
        )
        parser.add_argument(
            "--lengths",
            dest="lengths",
            help="Comma-separated signature lengths; sweeps L at fixed --alpha instead.",
        )
        add_format_argument(parser)

    def run(self, **options: Any) -> str:
        conf = load_conf(options)
        # the anchor point: fixed alpha of a length sweep, fixed L of an alpha sweep
        config = RunConfig(
            command=Cmd.SWEEP,
            params=default_params(
                pick(options, conf, "alpha"), pick(options, conf, "length"), strict=False
            ),
            format=OutputFormat(pick(options, conf, "format")),
        )
        alpha, length = config.params.alpha, config.params.length

        if options.get("lengths"):
            entries = sweep_length(alpha, _lengths(options["lengths"]))
            payload: dict[str, Any] = {
                "axis": "length",
                "sweep": [sweep_row(alpha, n, report) for n, report in entries],
            }
            return render_output(payload, config.format)

        grid = sweep_alpha(options["alpha_min"], options["alpha_max"], options["steps"], length)
        payload = {"axis": "alpha", "sweep": [sweep_row(a, length, report) for a, report in grid]}
        try:
            best, report = best_alpha(grid)
        except ParameterError:
            pass
        else:
            payload["best"] = sweep_row(best, length, report)
        return render_output(payload, config.format)
