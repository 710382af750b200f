import builtins
import pathlib
from enum import StrEnum
from typing import Any, Type, cast

from christianwhocodes.generators.file import FileGenerator
from django.core.management.base import CommandParser

from .... import PKG_DISPLAY_NAME, Conf
from ...settings import FILE_GENERATOR_PATHS
from ..helpers.base import QdsCommand


class FileOption(StrEnum):
    CONFIG = "config"


class ConfigFileGenerator(FileGenerator):
    f"""
    Generator for the experiment config template (qdsx.conf.example).

    Lists every key a {PKG_DISPLAY_NAME} config file accepts, with its
    environment variable, accepted values and default. All keys are
    commented out so the file is inert until edited.
    """

    @property
    def file_path(self) -> pathlib.Path:
        return FILE_GENERATOR_PATHS.config_template

    @property
    def data(self) -> str:
        lines: list[str] = self._header()

        fields_by_class: dict[str, list[dict[str, Any]]] = {}
        for field in Conf.get_fields():
            if field["toml"] is None:
                continue
            fields_by_class.setdefault(cast(str, field["class"]), []).append(field)

        for class_name in sorted(fields_by_class):
            lines.append("# " + "-" * 78)
            lines.append(f"# {class_name}")
            lines.append("# " + "-" * 78)
            lines.append("")
            for field in fields_by_class[class_name]:
                lines.extend(self._field_lines(field))
                lines.append("")

        return "\n".join(lines).rstrip("\n") + "\n"

    def _header(self) -> list[str]:
        return [
            "# " + "=" * 78,
            f"# {PKG_DISPLAY_NAME} experiment configuration",
            "# " + "=" * 78,
            "#",
            "# Pass with --config <path>. Priority: flag > this file > ENV > pyproject.toml",
            "# [tool.qdsx] > default. Unset thresholds use the default parameter choice.",
            "# " + "=" * 78,
            "",
        ]

    def _field_lines(self, field: dict[str, Any]) -> list[str]:
        lines = [f"# Type: {self._type_name(field['type'])}"]
        if field["env"]:
            lines.append(f"# Variable: {field['env']}")
        if field["choices"]:
            lines.append(f"# Choices: {' | '.join(field['choices'])}")
        default = field["default"]
        lines.append(f"# Default: {self._format_default(default)}")
        value = "" if default is None else self._format_default(default)
        lines.append(f"# {field['toml']} = {value}".rstrip())
        return lines

    def _type_name(self, field_type: type) -> str:
        match field_type:
            case builtins.bool:
                return "true | false"
            case builtins.int:
                return "integer"
            case builtins.float:
                return "real"
            case pathlib.Path:
                return "path"
            case _:
                return "text"

    def _format_default(self, value: Any) -> str:
        match value:
            case None:
                return "(from the default parameter choice)"
            case bool():
                return "true" if value else "false"
            case pathlib.Path():
                return str(pathlib.PurePosixPath(value))
            case _:
                return str(value)


class Command(QdsCommand):
    help: str = "Generate configuration files (a commented experiment config template)."

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument(
            "-f",
            "--file",
            dest="file",
            choices=[opt.value for opt in FileOption],
            type=FileOption,
            required=True,
            help="Specify which file to generate (options: "
            f"{', '.join(o.value for o in FileOption)}).",
        )
        parser.add_argument(
            "-y",
            "--force",
            dest="force",
            action="store_true",
            help="Force overwrite without confirmation.",
        )

    def run(self, **options: Any) -> str:
        file_option: FileOption = FileOption(options["file"])
        force: bool = options["force"]

        generators: dict[FileOption, Type[FileGenerator]] = {
            FileOption.CONFIG: ConfigFileGenerator,
        }

        generator = generators[file_option]()
        generator.create(force=force)
        return ""
