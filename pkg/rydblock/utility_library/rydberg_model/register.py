"""Physical constants and atom registers.

Units: µm for positions, rad/µs for amplitudes and detunings, rad·µm⁶/µs for C6.

Register JSON schema:
    {"c6": float, "atoms": [{"x": float, "y": float, "omega": float, "delta": float}, ...]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.spatial.distance import pdist, squareform

from ..shared.config import C6_BY_LEVEL, C6_N70
from ..shared.error_handling import (
    CoincidentAtomsError,
    DimensionMismatchError,
    InstanceSchemaError,
    ValidationError,
)


@dataclass(frozen=True)
class PhysicalConstants:
    """Interaction coefficient of the van der Waals tail C6/r⁶."""

    c6: float = C6_N70

    def __post_init__(self) -> None:
        if not np.isfinite(self.c6) or self.c6 <= 0:
            raise ValidationError(f"c6 must be positive, got {self.c6}")

    @classmethod
    def for_level(cls, n: int) -> PhysicalConstants:
        """Preset for a Rydberg principal quantum number (70 or 82)."""
        if n not in C6_BY_LEVEL:
            raise ValidationError(f"no C6 preset for n = {n}; known levels: {sorted(C6_BY_LEVEL)}")
        return cls(C6_BY_LEVEL[n])


def _frozen(values: ArrayLike, shape_name: str) -> NDArray[np.float64]:
    arr = np.array(values, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"{shape_name} must be finite")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class AtomRegister:
    """Planar atom positions with per-atom drive amplitude and detuning."""

    positions: NDArray[np.float64]
    omegas: NDArray[np.float64]
    deltas: NDArray[np.float64]
    constants: PhysicalConstants = field(default_factory=PhysicalConstants)

    def __post_init__(self) -> None:
        positions = _frozen(self.positions, "positions").reshape(-1, 2)
        omegas = _frozen(self.omegas, "omegas").reshape(-1)
        deltas = _frozen(self.deltas, "deltas").reshape(-1)
        if not (len(positions) == len(omegas) == len(deltas)):
            raise DimensionMismatchError(
                f"register lengths differ: {len(positions)} positions, {len(omegas)} omegas, {len(deltas)} deltas"
            )
        if np.any(omegas < 0):
            raise ValidationError("drive amplitudes must be non-negative")
        if len(positions) > 1:
            dist = pdist(positions)
            if np.any(dist <= 0):
                i, j = _first_pair(np.flatnonzero(dist <= 0)[0], len(positions))
                raise CoincidentAtomsError(f"atoms {i} and {j} coincide")
        object.__setattr__(self, "positions", positions)
        object.__setattr__(self, "omegas", omegas)
        object.__setattr__(self, "deltas", deltas)

    @classmethod
    def build(
        cls,
        positions: ArrayLike,
        omegas: ArrayLike | float = 0.0,
        deltas: ArrayLike | float = 0.0,
        constants: PhysicalConstants | None = None,
    ) -> AtomRegister:
        """Register with scalar amplitudes/detunings broadcast to every atom."""
        pos = np.asarray(positions, dtype=np.float64).reshape(-1, 2)
        n = len(pos)
        return cls(
            positions=pos,
            omegas=np.broadcast_to(np.asarray(omegas, dtype=np.float64), (n,)),
            deltas=np.broadcast_to(np.asarray(deltas, dtype=np.float64), (n,)),
            constants=constants or PhysicalConstants(),
        )

    @property
    def n_atoms(self) -> int:
        return len(self.positions)

    @property
    def c6(self) -> float:
        return self.constants.c6

    def distances(self) -> NDArray[np.float64]:
        """Pairwise distance matrix (zero diagonal)."""
        if self.n_atoms < 2:
            return np.zeros((self.n_atoms, self.n_atoms))
        return squareform(pdist(self.positions))

    def with_drive(self, omegas: ArrayLike | None = None, deltas: ArrayLike | None = None) -> AtomRegister:
        """Same atoms, new amplitudes and/or detunings."""
        return AtomRegister(
            positions=self.positions,
            omegas=self.omegas if omegas is None else np.broadcast_to(np.asarray(omegas, dtype=float), (self.n_atoms,)),
            deltas=self.deltas if deltas is None else np.broadcast_to(np.asarray(deltas, dtype=float), (self.n_atoms,)),
            constants=self.constants,
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "c6": self.c6,
            "atoms": [
                {"x": float(x), "y": float(y), "omega": float(o), "delta": float(d)}
                for (x, y), o, d in zip(self.positions, self.omegas, self.deltas, strict=True)
            ],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> AtomRegister:
        try:
            atoms = data["atoms"]
            c6 = float(data.get("c6", C6_N70))
            positions = [(float(a["x"]), float(a["y"])) for a in atoms]
            omegas = [float(a.get("omega", 0.0)) for a in atoms]
            deltas = [float(a.get("delta", 0.0)) for a in atoms]
        except (KeyError, TypeError, ValueError) as e:
            raise InstanceSchemaError(f"malformed register document: {e}") from e
        return cls(
            positions=np.asarray(positions, dtype=float).reshape(-1, 2),
            omegas=np.asarray(omegas, dtype=float),
            deltas=np.asarray(deltas, dtype=float),
            constants=PhysicalConstants(c6),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AtomRegister):
            return NotImplemented
        return (
            self.constants == other.constants
            and np.array_equal(self.positions, other.positions)
            and np.array_equal(self.omegas, other.omegas)
            and np.array_equal(self.deltas, other.deltas)
        )

    __hash__ = None  # type: ignore[assignment]


def _first_pair(flat: int, n: int) -> tuple[int, int]:
    # Position of a condensed-distance index in the upper triangle
    rows, cols = np.triu_indices(n, k=1)
    return int(rows[flat]), int(cols[flat])


def scale_register(reg: AtomRegister, lam: float) -> AtomRegister:
    """Multiply every position by lam; drive and constants are unchanged."""
    if not lam > 0:
        raise ValidationError(f"scale factor must be positive, got {lam}")
    return AtomRegister(positions=reg.positions * lam, omegas=reg.omegas, deltas=reg.deltas, constants=reg.constants)


def interaction_matrix(reg: AtomRegister) -> NDArray[np.float64]:
    """C6/r_ij⁶ for every pair, zero on the diagonal."""
    dist = reg.distances()
    return reg.c6 / np.where(dist > 0, dist, np.inf) ** 6


def load_register(path: Path | str) -> AtomRegister:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise InstanceSchemaError(f"{path}: not valid JSON ({e})") from e
    return AtomRegister.from_dict(data)


def save_register(reg: AtomRegister, path: Path | str) -> Path:
    path = Path(path)
    path.write_text(json.dumps(reg.to_dict(), indent=2) + "\n", encoding="utf-8")
    return path
