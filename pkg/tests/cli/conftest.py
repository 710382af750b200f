import json
import os
from typing import Any, Callable

import pytest

from qdsx.cli.manage import main


@pytest.fixture(autouse=True)
def isolated_workdir(tmp_path, monkeypatch) -> None:
    """Run every CLI test away from any .env or pyproject.toml and without QDSX_* variables."""
    monkeypatch.chdir(tmp_path)
    for name in [n for n in os.environ if n.startswith("QDSX_")]:
        monkeypatch.delenv(name)


@pytest.fixture
def run_cli(capsys) -> Callable[..., tuple[int, str, str]]:
    def run(*args: str) -> tuple[int, str, str]:
        code = main(list(args))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run


@pytest.fixture
def run_json(run_cli) -> Callable[..., dict[str, Any]]:
    def run(*args: str) -> dict[str, Any]:
        code, out, err = run_cli(*args, "--format", "json")
        assert code == 0, err
        return json.loads(out)

    return run
