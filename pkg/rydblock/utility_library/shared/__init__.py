"""Shared utilities for rydblock."""

from .artifacts import ArtifactWriter, read_csv
from .error_handling import (
    NumericalError,
    RydblockError,
    ValidationError,
    handle_rydblock_errors,
)
from .log import configure_logging, get_logger
from .parallel import parallel_map
from .progress import create_rydblock_progress, create_task_with_rydblock
from .ui_theme import (
    ARROW,
    ATOM,
    CHECK,
    COLORS,
    CROSS,
    SPINNER,
    create_box_header,
    create_header,
    create_status,
    format_boolean_option,
    format_quantity,
)

__all__ = [
    # Artifacts
    "ArtifactWriter",
    "read_csv",
    # Error handling
    "NumericalError",
    "RydblockError",
    "ValidationError",
    "handle_rydblock_errors",
    # Logging
    "configure_logging",
    "get_logger",
    # Parallel sweeps
    "parallel_map",
    # Progress
    "create_rydblock_progress",
    "create_task_with_rydblock",
    # UI theme symbols
    "ARROW",
    "ATOM",
    "CHECK",
    "COLORS",
    "CROSS",
    "SPINNER",
    # UI theme functions
    "create_box_header",
    "create_header",
    "create_status",
    "format_boolean_option",
    "format_quantity",
]
