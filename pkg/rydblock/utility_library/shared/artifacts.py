"""Output files for rydblock runs.

Every command writes into one directory: CSV tables with a `#` provenance header, JSON
documents, and a `config.json` sidecar. Writes happen under a FileLock on the directory so two
runs pointed at the same place cannot interleave.

Example usage:
    >>> with ArtifactWriter(config) as writer:
    ...     writer.write_csv("pair_prr.csv", ["scenario", "r_um", "p_rr_max"], rows)
"""

import csv
import json
import math
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Any

import filelock

from .config import CSV_FLOAT_FORMAT, LOCK_FILENAME, LOCK_TIMEOUT_S, PACKAGE_VERSION
from .error_handling import ValidationError
from .experiment import ExperimentConfig
from .log import get_logger

logger = get_logger(__name__)


def format_cell(value: Any) -> str:
    """Render one CSV cell: 12 significant digits for floats, empty for None."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return format(value, CSV_FLOAT_FORMAT)
    if hasattr(value, "item"):  # numpy scalar
        return format_cell(value.item())
    return str(value)


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, list | tuple):
        return [_jsonable(v) for v in value]
    if hasattr(value, "tolist"):
        return value.tolist()
    if hasattr(value, "item"):
        return value.item()
    if isinstance(value, Path):
        return str(value)
    return value


class ArtifactWriter:
    """Writes a run's outputs into `config.output_dir`.

    Use as a context manager: entering creates the directory, takes the lock and writes
    `config.json`; leaving releases the lock.
    """

    def __init__(self, config: ExperimentConfig) -> None:
        if config.output_dir is None:
            raise ValidationError("config has no output directory; call with_output_dir() first")
        self.config = config
        self.output_dir = Path(config.output_dir)
        self.config_hash = config.config_hash()
        self.written: list[Path] = []
        self._lock = filelock.FileLock(str(self.output_dir / LOCK_FILENAME), timeout=LOCK_TIMEOUT_S)

    def __enter__(self) -> "ArtifactWriter":
        self.output_dir.mkdir(parents=True, exist_ok=True)
        self._lock.acquire()
        payload = self.config.to_dict()
        payload["config_hash"] = self.config_hash
        payload["version"] = PACKAGE_VERSION
        self.write_json("config.json", payload)
        return self

    def __exit__(self, *exc: object) -> None:
        self._lock.release()

    def _header(self) -> list[str]:
        return [
            f"# rydblock {PACKAGE_VERSION}",
            f"# config_hash {self.config_hash}",
            f"# command {self.config.command}",
        ]

    def write_csv(self, name: str, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
        """Write a CSV table with the provenance header."""
        path = self.output_dir / name
        with path.open("w", encoding="utf-8", newline="") as fh:
            for line in self._header():
                fh.write(line + "\n")
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(columns)
            for row in rows:
                if len(row) != len(columns):
                    raise ValidationError(f"{name}: row has {len(row)} cells, expected {len(columns)}")
                writer.writerow([format_cell(v) for v in row])
        logger.debug("wrote %s", path)
        self.written.append(path)
        return path

    def write_json(self, name: str, payload: Any) -> Path:
        path = self.output_dir / name
        path.write_text(json.dumps(_jsonable(payload), indent=2, sort_keys=True) + "\n", encoding="utf-8")
        logger.debug("wrote %s", path)
        if name != "config.json":
            self.written.append(path)
        return path


def read_csv(path: Path) -> tuple[dict[str, str], list[dict[str, str]]]:
    """Read a CSV written by ArtifactWriter.

    Returns:
        (header fields from the `#` lines, rows as dicts keyed by column)
    """
    header: dict[str, str] = {}
    lines: list[str] = []
    with Path(path).open(encoding="utf-8") as fh:
        for line in fh:
            if line.startswith("#"):
                key, _, value = line[1:].strip().partition(" ")
                header[key] = value
            else:
                lines.append(line)
    return header, list(csv.DictReader(lines))
