"""Drive protocols and λ-scaling sweeps over a disk-graph instance.

A sweep scales the instance's centers by ratio·λ_c, where λ_c is the scaling at which the first
edge breaks, drives the atoms with the protocol's amplitudes (δ = 0) and quenches from the
all-ground state.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from enum import StrEnum

import numpy as np
from numpy.typing import NDArray

from ..blockade_models.closed_form import omega_for_global_radius
from ..graphs.disk_graph import DiskGraph, lambda_breaks
from ..rydberg_model.register import AtomRegister, PhysicalConstants
from ..shared.config import C6_N70, DEFAULT_DT, EMBED_DURATION
from ..shared.error_handling import ValidationError
from ..shared.log import get_logger
from ..shared.parallel import parallel_map
from .metrics import quench_maxima

logger = get_logger(__name__)


class ProtocolKind(StrEnum):
    GLOBAL = "global"
    LOCAL = "local"
    SHUFFLED = "shuffled"


@dataclass(frozen=True)
class EmbeddingProtocol:
    """Per-atom drive amplitudes for an embedding quench.

    Global drives every atom at base_omega. Local gives special_omega to special_vertices.
    Shuffled gives special_omega to each atom independently with the given probability, drawn
    from `seed`.
    """

    kind: ProtocolKind
    base_omega: float
    special_omega: float | None = None
    special_vertices: frozenset[int] = field(default_factory=frozenset)
    probability: float | None = None
    seed: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", ProtocolKind(self.kind))
        object.__setattr__(self, "special_vertices", frozenset(int(v) for v in self.special_vertices))
        if not self.base_omega > 0:
            raise ValidationError(f"base amplitude must be positive, got {self.base_omega}")
        if self.kind is not ProtocolKind.GLOBAL and not (self.special_omega is not None and self.special_omega > 0):
            raise ValidationError(f"{self.kind.value} protocol needs a positive special amplitude")
        if self.kind is ProtocolKind.SHUFFLED:
            if self.probability is None or not 0 <= self.probability <= 1:
                raise ValidationError(f"shuffle probability must lie in [0, 1], got {self.probability}")
            if self.seed is None:
                raise ValidationError("the shuffled protocol needs an explicit seed")

    @classmethod
    def global_drive(cls, omega: float) -> EmbeddingProtocol:
        return cls(ProtocolKind.GLOBAL, omega)

    @classmethod
    def local(cls, base_omega: float, special_omega: float, special_vertices: Sequence[int]) -> EmbeddingProtocol:
        return cls(ProtocolKind.LOCAL, base_omega, special_omega, frozenset(special_vertices))

    @classmethod
    def shuffled(cls, base_omega: float, special_omega: float, probability: float, seed: int) -> EmbeddingProtocol:
        return cls(ProtocolKind.SHUFFLED, base_omega, special_omega, probability=probability, seed=seed)

    def amplitudes(self, n_atoms: int) -> NDArray[np.float64]:
        omegas = np.full(n_atoms, self.base_omega)
        if self.kind is ProtocolKind.LOCAL:
            outside = [v for v in self.special_vertices if not 0 <= v < n_atoms]
            if outside:
                raise ValidationError(f"special vertices {outside} out of range for {n_atoms} atoms")
            omegas[sorted(self.special_vertices)] = self.special_omega
        elif self.kind is ProtocolKind.SHUFFLED:
            rng = np.random.default_rng(self.seed)
            omegas[rng.random(n_atoms) < self.probability] = self.special_omega
        return omegas

    def label(self) -> str:
        return self.kind.value


def local_protocol_for_instance(dg: DiskGraph, c6: float = C6_N70) -> EmbeddingProtocol:
    """Local protocol whose global radii reproduce the instance radii.

    Atoms at the smallest radius get the base amplitude, the rest the special one, each from
    `omega_for_global_radius`. Needs at most two distinct radii.
    """
    radii = np.unique(dg.radii)
    if radii.size > 2:
        raise ValidationError(f"a local protocol has two amplitudes, instance has {radii.size} radii")
    base = omega_for_global_radius(float(radii[0]), c6)
    if radii.size == 1:
        return EmbeddingProtocol.local(base, base, ())
    special = omega_for_global_radius(float(radii[1]), c6)
    return EmbeddingProtocol.local(base, special, np.flatnonzero(dg.radii > radii[0]).tolist())


@dataclass(frozen=True)
class EmbeddingReport:
    """Quench maxima for one protocol at one scaling."""

    protocol: str
    lambda_ratio: float
    scale: float
    violation: float
    correlation: NDArray[np.float64]
    target_edges: frozenset[tuple[int, int]]

    @property
    def max_edge_correlation(self) -> float:
        """Largest C_ij over target edges (0 for an edgeless target)."""
        return max((float(self.correlation[i, j]) for i, j in self.target_edges), default=0.0)


def _check_ratios(lambda_ratios: Sequence[float]) -> None:
    if not lambda_ratios or any(not r > 0 for r in lambda_ratios):
        raise ValidationError("λ ratios must be positive")


def lambda_sweep(
    instance: DiskGraph,
    protocol: EmbeddingProtocol,
    lambda_ratios: Sequence[float],
    duration: float = EMBED_DURATION,
    dt: float = DEFAULT_DT,
    c6: float = C6_N70,
    workers: int | None = None,
    on_done: Callable[[], None] | None = None,
) -> list[EmbeddingReport]:
    """One report per ratio, in input order.

    Args:
        instance: Disk graph whose target (declared, else induced) defines independence
        protocol: Amplitude assignment; drawn once, shared by every ratio
        lambda_ratios: Scalings in units of λ_c
        duration: Quench length in µs
        dt: Sampling step in µs
        c6: Interaction coefficient
        workers: Threads over the ratios
        on_done: Progress callback, once per ratio

    Returns:
        Violation and correlation maxima per ratio
    """
    _check_ratios(lambda_ratios)
    lam_c, _ = lambda_breaks(instance)
    target = instance.target_graph()
    omegas = protocol.amplitudes(instance.n)
    constants = PhysicalConstants(c6)

    def run(ratio: float) -> EmbeddingReport:
        scale = ratio * lam_c
        reg = AtomRegister.build(instance.centers * scale, omegas=omegas, constants=constants)
        maxima = quench_maxima(reg, target, duration, dt)
        logger.debug("%s at λ/λ_c = %g: violation %.4f", protocol.label(), ratio, maxima.violation)
        return EmbeddingReport(protocol.label(), float(ratio), scale, maxima.violation, maxima.correlation, target.edges)

    return parallel_map(run, lambda_ratios, workers, on_done)


def shuffle_seeds(seed: int, draws: int) -> list[int]:
    """Per-draw seeds spawned from the master seed."""
    if draws < 1:
        raise ValidationError(f"need at least one draw, got {draws}")
    return [int(child.generate_state(1)[0]) for child in np.random.SeedSequence(seed).spawn(draws)]


@dataclass(frozen=True)
class ShuffledSummary:
    """Per-draw violations at one ratio; `special_atoms[k]` lists the atoms draw k slowed down."""

    lambda_ratio: float
    seeds: tuple[int, ...]
    violations: tuple[float, ...]
    special_atoms: tuple[tuple[int, ...], ...]

    @property
    def mean_violation(self) -> float:
        return float(np.mean(self.violations))


def shuffled_mean_violation(
    instance: DiskGraph,
    base_omega: float,
    special_omega: float,
    probability: float,
    seed: int,
    draws: int,
    lambda_ratios: Sequence[float],
    duration: float = EMBED_DURATION,
    dt: float = DEFAULT_DT,
    c6: float = C6_N70,
    workers: int | None = None,
    on_done: Callable[[], None] | None = None,
) -> list[ShuffledSummary]:
    """Violation of the shuffled protocol averaged over `draws` amplitude draws, per ratio."""
    _check_ratios(lambda_ratios)
    seeds = shuffle_seeds(seed, draws)
    protocols = [EmbeddingProtocol.shuffled(base_omega, special_omega, probability, s) for s in seeds]
    special = tuple(
        tuple(int(v) for v in np.flatnonzero(p.amplitudes(instance.n) == special_omega)) for p in protocols
    )
    per_draw = [lambda_sweep(instance, p, lambda_ratios, duration, dt, c6, workers, on_done) for p in protocols]
    return [
        ShuffledSummary(float(ratio), tuple(seeds), tuple(reports[k].violation for reports in per_draw), special)
        for k, ratio in enumerate(lambda_ratios)
    ]
