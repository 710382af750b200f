#!/usr/bin/env python

import sys
from typing import Optional

from .. import PKG_NAME
from .types import Status


def _configure_django() -> None:
    from django.conf import settings

    if not settings.configured:
        settings.configure(
            INSTALLED_APPS=[f"{PKG_NAME}.cli"],
            LOGGING_CONFIG=None,
            USE_TZ=True,
        )


def main(argv: Optional[list[str]] = None) -> int:
    """Main entry point for the CLI; returns the process exit code."""
    args = sys.argv[1:] if argv is None else list(argv)

    match args[:1]:
        case ["-v" | "--version" | "version"]:
            from christianwhocodes.utils.version import print_version

            return int(print_version(PKG_NAME) or Status.OK)

        case _:
            from django.core.management import ManagementUtility

            _configure_django()
            utility = ManagementUtility([PKG_NAME, *args])
            utility.prog_name = PKG_NAME
            try:
                utility.execute()
            except SystemExit as e:
                if e.code is None:
                    return Status.OK
                return e.code if isinstance(e.code, int) else Status.INVALID
            return Status.OK


if __name__ == "__main__":
    sys.exit(main())
