# qdsX: memoryless quantum digital signature simulator
import builtins
import pathlib
from dataclasses import asdict, dataclass
from os import environ
from typing import Any, Callable, ClassVar, Optional, TypeAlias

from christianwhocodes.utils.pyproject import PyProject
from christianwhocodes.utils.types import TypeConverter
from dotenv import dotenv_values

PKG_PATH: pathlib.Path = pathlib.Path(__file__).resolve().parent

PKG_NAME: str = PKG_PATH.name  # qdsx

PKG_DISPLAY_NAME: str = PKG_NAME[:-1] + PKG_NAME[-1].upper()  # qdsX

_ValueType: TypeAlias = str | bool | list[str] | pathlib.Path | int | float | None

_CONVERTERS: dict[Any, Callable[[Any], _ValueType]] = {
    builtins.str: lambda raw: str(raw).strip(),
    builtins.int: int,
    builtins.float: float,
    builtins.bool: lambda raw: raw if isinstance(raw, bool) else TypeConverter.to_bool(raw),
    builtins.list: lambda raw: TypeConverter.to_list_of_str(raw, str.strip),
    pathlib.Path: TypeConverter.to_path,
}


@dataclass(frozen=True)
class ConfField:
    """
    One setting of a :class:`Conf` subclass.

    Args:
        choices: Accepted values, checked after conversion
        env: Environment variable (or ``.env`` entry) to read
        toml: Key in ``[tool.qdsx]``; dotted for nested tables. Also the
            key used in ``--config`` files
        default: Value when no source provides one
        type: One of str, int, float, bool, pathlib.Path or list (of str)
    """

    choices: Optional[list[str]] = None
    env: Optional[str] = None
    toml: Optional[str] = None
    default: _ValueType = None
    type: Any = str

    @property
    def as_dict(self) -> dict[str, Any]:
        return asdict(self)

    def convert(self, raw: Any, name: str) -> _ValueType:
        """
        Convert a raw source value.

        Blank values mean "not given": ``None``, or ``[]`` for list fields.

        Raises:
            ValueError: If conversion fails or the value is not one of ``choices``
        """
        if raw is None or (isinstance(raw, str) and not raw.strip()):
            return [] if self.type is builtins.list else None

        converter = _CONVERTERS.get(self.type)
        if converter is None:
            raise ValueError(f"Unsupported config type {self.type!r} for field '{name}'")
        try:
            value = converter(raw)
        except (TypeError, ValueError) as e:
            raise ValueError(f"Cannot read config field '{name}' from {raw!r}: {e}") from e

        if self.choices and value not in self.choices:
            raise ValueError(
                f"Invalid value {value!r} for field '{name}'; "
                f"expected one of: {', '.join(self.choices)}"
            )
        return value

    def __get__(self, instance: Any, owner: Any) -> Any:
        if instance is None:
            return self
        raise AttributeError(f"{type(self).__name__} should have been converted to a property")


class Conf:
    """
    Settings read from, in order: a ``--config`` file, the environment
    (with ``.env``), ``[tool.qdsx]`` in ``pyproject.toml``, the field default.

    Subclasses declare :class:`ConfField` attributes, which become
    read-only properties evaluated on every access.
    """

    _subclasses: ClassVar[list[type["Conf"]]] = []
    _fields: ClassVar[list[dict[str, Any]]] = []

    def __init__(self, config_file: Optional[pathlib.Path] = None) -> None:
        """
        Raises:
            FileNotFoundError: If ``config_file`` is given but does not exist
        """
        self._file_values: dict[str, Any] = {}
        if config_file is not None:
            if not config_file.is_file():
                raise FileNotFoundError(f"Config file not found: {config_file}")
            self._file_values = {k.strip(): v for k, v in dotenv_values(config_file).items()}

    def __init_subclass__(cls) -> None:
        super().__init_subclass__()
        Conf._subclasses.append(cls)
        cls._fields = []

        for name, spec in list(vars(cls).items()):
            if name.startswith("_") or not isinstance(spec, ConfField):
                continue
            cls._fields.append({"class": cls.__name__, "name": name, **spec.as_dict})
            setattr(cls, name, property(cls._getter(name, spec)))

    @staticmethod
    def _getter(name: str, spec: ConfField) -> Callable[["Conf"], Any]:
        def getter(self: "Conf") -> Any:
            return spec.convert(self._lookup(spec), name)

        return getter

    # ============================================================================
    # Sources
    # ============================================================================

    @staticmethod
    def _tool_table() -> dict[str, Any]:
        """The ``[tool.qdsx]`` (or ``[tool.qdsX]``) table of ./pyproject.toml, if any."""
        path = pathlib.Path.cwd() / "pyproject.toml"
        if not path.is_file():
            return {}
        tool = PyProject(path).data.get("tool", {})
        return tool.get(PKG_NAME, tool.get(PKG_DISPLAY_NAME, {}))

    @staticmethod
    def _environment() -> dict[str, Any]:
        return {**dotenv_values(pathlib.Path.cwd() / ".env"), **environ}

    def _from_toml(self, key: str) -> Any:
        node: Any = self._tool_table()
        for part in key.split("."):
            if not isinstance(node, dict) or part not in node:
                return None
            node = node[part]
        return node

    def _lookup(self, spec: ConfField) -> Any:
        if spec.toml is not None and self._file_values.get(spec.toml) not in (None, ""):
            return self._file_values[spec.toml]

        if spec.env is not None:
            env = self._environment()
            if spec.env in env:
                return env[spec.env]

        if spec.toml is not None:
            value = self._from_toml(spec.toml)
            if value is not None:
                return value

        return spec.default

    def unknown_file_keys(self) -> list[str]:
        """Config-file keys that no registered field reads."""
        known = {field["toml"] for field in Conf.get_fields()}
        return sorted(k for k in self._file_values if k not in known)

    @classmethod
    def get_fields(cls) -> list[dict[str, Any]]:
        """Every declared field of every subclass, with its class and attribute name."""
        return [field for subclass in cls._subclasses for field in subclass._fields]
