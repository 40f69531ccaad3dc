"""Tests for the root rydblock CLI."""

import logging

import pytest

from rydblock.cli import app

COMMANDS = ("pair", "fit", "embed", "mis", "realize")


def test_cli_main_command(cli_runner):
    """Test the main CLI command with no arguments."""
    result = cli_runner.invoke(app)
    assert result.exit_code == 0

    # Should show welcome message and commands table
    assert "rydblock" in result.stdout
    for command in COMMANDS:
        assert command in result.stdout


def test_cli_help_command(cli_runner):
    """Test the CLI help command."""
    result = cli_runner.invoke(app, ["--help"])
    assert result.exit_code == 0

    assert "Usage" in result.stdout
    assert "Options" in result.stdout
    assert "Commands" in result.stdout


@pytest.mark.parametrize("command", COMMANDS)
def test_cli_subcommand_help(cli_runner, command):
    """Every slice is registered and documents its options."""
    result = cli_runner.invoke(app, [command, "--help"])
    assert result.exit_code == 0
    assert "--out" in result.stdout


def test_verbose_enables_debug_logging(cli_runner):
    result = cli_runner.invoke(app, ["--verbose"])
    assert result.exit_code == 0
    assert logging.getLogger("rydblock").level == logging.DEBUG
    cli_runner.invoke(app)
    assert logging.getLogger("rydblock").level == logging.WARNING


def test_realize_requires_seed(cli_runner, output_root):
    result = cli_runner.invoke(app, ["realize", "--graph", "p3"])
    assert result.exit_code == 2


def test_pair_through_root(cli_runner, tmp_path):
    out = tmp_path / "pair"
    result = cli_runner.invoke(
        app,
        ["pair", "--scenario", "global", "--omega", "3", "--r-points", "4", "--no-radius", "-j", "1", "--out", str(out)],
    )
    assert result.exit_code == 0, result.output
    assert (out / "config.json").exists()
