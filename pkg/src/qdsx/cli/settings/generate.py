from pathlib import Path

from ... import Conf, ConfField


class FileGeneratorPathsConf(Conf):
    """Generated files configuration settings."""

    _base_dir = Path.cwd()

    config_template = ConfField(
        env="QDSX_CONFIG_TEMPLATE",
        default=_base_dir / "qdsx.conf.example",
        type=Path,
    )


FILE_GENERATOR_PATHS = FileGeneratorPathsConf()


__all__ = ["FileGeneratorPathsConf", "FILE_GENERATOR_PATHS"]
