"""Global pytest fixtures and configuration for the rydblock package."""

import io
import os

import pytest
from rich.console import Console


@pytest.fixture(scope="session")
def temp_output_dir(tmp_path_factory):
    """Create a temporary directory for test outputs.

    This session-scoped fixture creates a temporary directory that persists
    for the duration of the test session, allowing tests to create and verify files.

    Args:
        tmp_path_factory: pytest's built-in tmp_path_factory fixture

    Returns:
        pathlib.Path: Path to the temporary directory
    """
    temp_dir = tmp_path_factory.mktemp("rydblock_test_output")
    os.makedirs(temp_dir, exist_ok=True)
    return temp_dir


@pytest.fixture
def cli_runner():
    """Fixture for running CLI commands in tests.

    Creates a test CLI runner that can capture output and exceptions
    from Typer CLI commands, allowing testing of CLI interfaces.

    Returns:
        typer.testing.CliRunner: A CLI runner for testing commands
    """
    from typer.testing import CliRunner
    return CliRunner()


@pytest.fixture
def quiet_console():
    """Console that renders into memory instead of the terminal.

    Returns:
        rich.console.Console: Console whose output is readable via `console.file.getvalue()`
    """
    return Console(file=io.StringIO(), width=120, force_terminal=False)


@pytest.fixture
def output_root(tmp_path, monkeypatch):
    """Point RYDBLOCK_OUTPUT_ROOT at a fresh temporary directory.

    Returns:
        pathlib.Path: The output root
    """
    root = tmp_path / "outputs"
    monkeypatch.setenv("RYDBLOCK_OUTPUT_ROOT", str(root))
    return root


@pytest.fixture(scope="session")
def star_instance():
    """Seven-atom disk star with enlarged radii on atoms 0, 4 and 5."""
    from rydblock.utility_library.graphs.instances import load_bundled_instance
    return load_bundled_instance("star")


@pytest.fixture(scope="session")
def star_unit_instance():
    """The same seven atoms with every radius equal."""
    from rydblock.utility_library.graphs.instances import load_bundled_instance
    return load_bundled_instance("star_unit")


@pytest.fixture(scope="session")
def k23_instance():
    from rydblock.utility_library.graphs.instances import load_bundled_instance
    return load_bundled_instance("k23")


@pytest.fixture
def pair_register():
    """Two atoms 4 µm apart under a global Ω = 1 drive.

    Returns:
        AtomRegister: Register deep in the blockade regime
    """
    from rydblock.utility_library.rydberg_model.register import AtomRegister
    return AtomRegister.build([(0.0, 0.0), (4.0, 0.0)], omegas=1.0)
