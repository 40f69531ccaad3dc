"""Experiment configurations, one per subcommand.

A config is everything that determines a run's numbers. It is written as `config.json` next to
every output and its hash names the default output directory, so a rerun with the same config
lands in (and reproduces) the same place.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, ClassVar

from .config import (
    C6_N70,
    DEFAULT_DT,
    DEFAULT_LAMBDA_RATIOS,
    DEFAULT_OUTPUT_ROOT,
    DELTA_F_BOUNDS,
    EMBED_DURATION,
    FIT_COMBINATIONS,
    FIT_DURATION,
    FIT_R_GRID,
    GRID_POINTS,
    KAPPA_BOUNDS,
    OUTPUT_ROOT_ENV,
    PACKAGE_VERSION,
    PAIR_DURATION,
    SIMPLEX_BUDGET,
    STAR_OMEGA,
    STAR_SHUFFLE_PROBABILITY,
    STAR_SPECIAL_OMEGA,
)

# Fields that change where or how fast a run happens, never its numbers
_NON_RESULT_FIELDS = frozenset({"output_dir", "workers"})


@dataclass(frozen=True, kw_only=True)
class ExperimentConfig:
    command: ClassVar[str] = "experiment"

    c6: float = C6_N70
    output_dir: str | None = None
    workers: int | None = None

    def to_dict(self) -> dict[str, Any]:
        data = dataclasses.asdict(self)
        data["command"] = self.command
        return data

    def result_dict(self) -> dict[str, Any]:
        return {k: v for k, v in self.to_dict().items() if k not in _NON_RESULT_FIELDS}

    def config_hash(self) -> str:
        """SHA-256 over the canonical JSON of the result-determining fields."""
        canonical = json.dumps(self.result_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(f"{PACKAGE_VERSION}:{canonical}".encode()).hexdigest()

    def with_output_dir(self, out: Path | None = None) -> ExperimentConfig:
        """Return a copy whose output_dir is resolved.

        `out` wins; otherwise `$RYDBLOCK_OUTPUT_ROOT/<command>-<hash[:10]>`.
        """
        if out is None:
            root = Path(os.environ.get(OUTPUT_ROOT_ENV, DEFAULT_OUTPUT_ROOT))
            out = root / f"{self.command}-{self.config_hash()[:10]}"
        return dataclasses.replace(self, output_dir=str(out))


@dataclass(frozen=True, kw_only=True)
class PairConfig(ExperimentConfig):
    command: ClassVar[str] = "pair"

    scenarios: tuple[str, ...] = ("sequential", "global", "local")
    omegas: tuple[float, ...] = (1.0, 3.0)
    ratio: float = 3.0
    delta: float = 0.0
    duration: float = PAIR_DURATION
    dt: float = DEFAULT_DT
    r_min: float = 4.0
    r_max: float = 16.0
    r_points: int = 30
    tol_r: float = 1e-3
    extract_radius: bool = True


@dataclass(frozen=True, kw_only=True)
class FitConfig(ExperimentConfig):
    command: ClassVar[str] = "fit"

    combinations: int = FIT_COMBINATIONS
    duration: float = FIT_DURATION
    dt: float = DEFAULT_DT
    r_min: float = FIT_R_GRID[0]
    r_max: float = FIT_R_GRID[1]
    r_points: int = FIT_R_GRID[2]
    tol_r: float = 1e-3


@dataclass(frozen=True, kw_only=True)
class EmbedConfig(ExperimentConfig):
    command: ClassVar[str] = "embed"

    instance: str | None = None
    protocols: tuple[str, ...] = ("global", "local", "shuffled")
    lambda_ratios: tuple[float, ...] = DEFAULT_LAMBDA_RATIOS
    duration: float = EMBED_DURATION
    dt: float = DEFAULT_DT
    base_omega: float = STAR_OMEGA
    special_omega: float = STAR_SPECIAL_OMEGA
    probability: float = STAR_SHUFFLE_PROBABILITY
    seed: int | None = None
    shuffle_draws: int = 10
    derive_omegas: bool = False


@dataclass(frozen=True, kw_only=True)
class MisConfig(ExperimentConfig):
    command: ClassVar[str] = "mis"

    instances: tuple[str, ...] = ("k23", "k16")
    modes: tuple[str, ...] = ("local", "global")
    kappa_bounds: tuple[float, float] = KAPPA_BOUNDS
    delta_f_bounds: tuple[float, float] = DELTA_F_BOUNDS
    grid_points: int = GRID_POINTS
    budget: int = SIMPLEX_BUDGET


@dataclass(frozen=True, kw_only=True)
class RealizeConfig(ExperimentConfig):
    command: ClassVar[str] = "realize"

    graph: str = "k23"
    n: int | None = None
    edges: tuple[tuple[int, int], ...] | None = None
    palette: tuple[float, ...] = (7.9, 35.55)
    seed: int = 0
    restarts: int = 8
    iterations: int = 20000
    name: str | None = None


