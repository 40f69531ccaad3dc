"""Tests for error types, exit codes and the runner decorator."""

import json

import pytest
import typer

from rydblock.utility_library.shared.error_handling import (
    BracketError,
    EdgeMismatchError,
    InstanceSchemaError,
    exit_code_for,
    handle_rydblock_errors,
)
from rydblock.utility_library.shared.experiment import PairConfig
from rydblock.utility_library.shared.progress import create_rydblock_progress, create_task_with_rydblock


@pytest.mark.parametrize("error,code", [
    (InstanceSchemaError("bad"), 2),
    (BracketError("no sign change"), 3),
    (ValueError("plain"), 2),
    (RuntimeError("other"), 1),
])
def test_exit_codes(error, code):
    assert exit_code_for(error) == code


def test_edge_mismatch_message():
    error = EdgeMismatchError([(0, 1)], [(2, 3)])
    assert "0-1" in str(error) and "2-3" in str(error)
    assert error.missing == [(0, 1)]


def _run(fn, console, config):
    with create_rydblock_progress(console=console) as progress:
        task = create_task_with_rydblock(progress, "Testing...", total=1)
        return fn(progress, task, console, config)


def test_decorator_writes_report(tmp_path, quiet_console):
    @handle_rydblock_errors("pair")
    def failing(progress, task, console, config):
        raise BracketError("P_RR never crosses 0.5")

    config = PairConfig().with_output_dir(tmp_path / "run")
    with pytest.raises(typer.Exit) as info:
        _run(failing, quiet_console, config)

    assert info.value.exit_code == 3
    report = json.loads((tmp_path / "run" / "error.json").read_text())
    assert report == {
        "utility": "pair",
        "error_type": "BracketError",
        "message": "P_RR never crosses 0.5",
        "exit_code": 3,
    }
    assert "numerical failure" in quiet_console.file.getvalue()


def test_decorator_passes_results(quiet_console):
    @handle_rydblock_errors("pair")
    def ok(progress, task, console, config):
        return 42

    assert _run(ok, quiet_console, PairConfig()) == 42


def test_unexpected_error_names_type_only(quiet_console):
    @handle_rydblock_errors("pair")
    def broken(progress, task, console, config):
        raise KeyError("missing")

    with pytest.raises(typer.Exit) as info:
        _run(broken, quiet_console, PairConfig())

    assert info.value.exit_code == 1
    output = quiet_console.file.getvalue()
    assert "Error type: KeyError" in output
    assert "http" not in output


def test_config_has_no_unused_presets():
    from rydblock.utility_library.shared import config

    for name in ("DEFAULT_RYDBERG_LEVEL", "GLOBAL_GRADIENT", "STAR_SEPARATION_FACTOR", "GITHUB_ISSUES_URL"):
        assert not hasattr(config, name)
