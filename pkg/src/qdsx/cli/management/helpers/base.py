"""Management command utilities: base

Shared command class translating library errors into exit codes and
routing log records to stderr so stdout carries results only.
"""

import logging
import sys
from typing import Any, NoReturn

from django.core.management.base import BaseCommand, CommandError, CommandParser

from .... import PKG_NAME
from ....exceptions import QdsError
from ...types import Status

logger = logging.getLogger(__name__)

_VERBOSITY_LEVELS = {0: logging.WARNING, 1: logging.WARNING, 2: logging.INFO, 3: logging.DEBUG}


def configure_logging(verbosity: int) -> None:
    """Attach a stderr handler to the package logger at the level matching ``verbosity``."""
    package_logger = logging.getLogger(PKG_NAME)
    package_logger.setLevel(_VERBOSITY_LEVELS.get(verbosity, logging.DEBUG))
    for handler in package_logger.handlers:
        if getattr(handler, "_qdsx_handler", False):
            # sys.stderr may have been swapped since the last command
            handler.setStream(sys.stderr)  # type: ignore[attr-defined]
            return
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    handler._qdsx_handler = True  # type: ignore[attr-defined]
    package_logger.addHandler(handler)


class QdsCommand(BaseCommand):
    """Base class for the qdsX commands.

    Subclasses implement :meth:`run` and return the rendered output; this
    class writes it to stdout only once the whole command succeeded.
    """

    requires_system_checks = []

    def create_parser(self, prog_name: str, subcommand: str, **kwargs: Any) -> CommandParser:
        parser = super().create_parser(prog_name, subcommand, **kwargs)

        def error(message: str) -> NoReturn:
            # argparse would exit with 2, which is reserved for runtime failures
            if parser.called_from_command_line:
                parser.print_usage(sys.stderr)
                parser.exit(Status.INVALID, f"{parser.prog}: error: {message}\n")
            raise CommandError(f"Error: {message}", returncode=Status.INVALID)

        parser.error = error  # type: ignore[method-assign]
        return parser

    def run(self, **options: Any) -> str:
        """Execute the command and return the text to print."""
        raise NotImplementedError("subclasses of QdsCommand must provide a run() method")

    def handle(self, *args: Any, **options: Any) -> str:
        configure_logging(options.get("verbosity", 1))
        try:
            return self.run(**options)
        except CommandError:
            raise
        except (QdsError, ValueError, FileNotFoundError) as e:
            raise CommandError(str(e), returncode=Status.INVALID) from e
        except Exception as e:
            logger.debug("Command failed", exc_info=True)
            raise CommandError(f"{type(e).__name__}: {e}", returncode=Status.FAILURE) from e
