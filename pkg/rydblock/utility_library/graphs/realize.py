"""Search for disk-graph realizations of small target graphs.

Each restart starts from a spring layout of the target, anneals centers and palette radii
against a squared-hinge margin penalty, then polishes the centers with L-BFGS-B. A restart
succeeds when the induced edges equal the target and every pair clears the 5% margin.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

import networkx as nx
import numpy as np
from scipy import optimize
from scipy.spatial.distance import pdist

from ..shared.config import MAX_REALIZE_VERTICES, REALIZE_MARGIN
from ..shared.error_handling import GraphTooLargeError, ValidationError
from ..shared.log import get_logger
from ..shared.parallel import parallel_map
from .disk_graph import AbstractGraph, DiskGraph

logger = get_logger(__name__)

# Extra margin the search aims for so the polished optimum sits strictly inside the feasible set
_SEARCH_MARGIN_PAD = 0.01
_RADIUS_MOVE_PROBABILITY = 0.1
_T_START, _T_END = 1.0, 1e-4
_LAYOUT_EDGE_FRACTION = 0.7


@dataclass(frozen=True)
class RealizeResult:
    """Best realization found and whether it meets the margin requirement."""

    disk_graph: DiskGraph
    success: bool
    violations: int
    penalty: float
    restart: int


class _Penalty:
    """Σ hinge² over pairs: edges want d/h ≤ 1 − m, non-edges d/h ≥ 1 + m."""

    def __init__(self, target: AbstractGraph, margin: float) -> None:
        self.n = target.n
        self.iu, self.ju = np.triu_indices(self.n, k=1)
        self.is_edge = np.array([(i, j) in target.edges for i, j in zip(self.iu, self.ju, strict=True)], dtype=bool)
        self.margin = margin

    def __call__(self, centers: np.ndarray, radii: np.ndarray) -> float:
        if self.n < 2:
            return 0.0
        ratio = pdist(centers.reshape(self.n, 2)) / (0.5 * (radii[self.iu] + radii[self.ju]))
        excess = np.where(self.is_edge, ratio - (1.0 - self.margin), (1.0 + self.margin) - ratio)
        return float(np.sum(np.maximum(excess, 0.0) ** 2))


def _initial_centers(target: AbstractGraph, palette: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    layout = nx.spring_layout(target.to_networkx(), seed=int(rng.integers(2**31)), dim=2)
    centers = np.array([layout[v] for v in range(target.n)], dtype=np.float64)
    if target.edges:
        lengths = [np.linalg.norm(centers[i] - centers[j]) for i, j in target.edges]
        scale = _LAYOUT_EDGE_FRACTION * float(palette.min()) / max(float(np.mean(lengths)), 1e-12)
    else:
        scale = 2.0 * float(palette.max())
    return centers * scale


def _anneal(
    target: AbstractGraph,
    palette: np.ndarray,
    penalty: _Penalty,
    rng: np.random.Generator,
    iterations: int,
) -> tuple[np.ndarray, np.ndarray, float]:
    n = target.n
    centers = _initial_centers(target, palette, rng)
    radii = rng.choice(palette, size=n)
    energy = penalty(centers, radii)
    best = (centers.copy(), radii.copy(), energy)
    step = 0.25 * float(palette.max())
    cooling = (_T_END / _T_START) ** (1.0 / max(iterations, 1))
    temperature = _T_START
    for _ in range(iterations):
        if best[2] == 0.0:
            break
        v = int(rng.integers(n))
        trial_centers, trial_radii = centers, radii
        if palette.size > 1 and rng.random() < _RADIUS_MOVE_PROBABILITY:
            trial_radii = radii.copy()
            trial_radii[v] = rng.choice(palette)
        else:
            trial_centers = centers.copy()
            trial_centers[v] += rng.normal(scale=step * max(math.sqrt(temperature), 0.02), size=2)
        trial = penalty(trial_centers, trial_radii)
        if trial <= energy or rng.random() < math.exp(-(trial - energy) / temperature):
            centers, radii, energy = trial_centers, trial_radii, trial
            if energy < best[2]:
                best = (centers.copy(), radii.copy(), energy)
        temperature *= cooling
    return best


def _polish(centers: np.ndarray, radii: np.ndarray, penalty: _Penalty) -> tuple[np.ndarray, float]:
    """L-BFGS-B on the centers with the radii held fixed."""
    x0 = centers.ravel()
    span = float(np.ptp(centers)) + float(radii.max())
    lo, hi = float(centers.min()) - span, float(centers.max()) + span
    result = optimize.minimize(
        lambda x: penalty(x, radii), x0, method="L-BFGS-B", bounds=[(lo, hi)] * x0.size
    )
    polished = result.x.reshape(-1, 2)
    value = penalty(polished, radii)
    if value <= penalty(centers, radii):
        return polished, value
    return centers, penalty(centers, radii)


def _evaluate(target: AbstractGraph, dg: DiskGraph, margin: float) -> tuple[bool, int]:
    missing, extra = dg.edge_mismatch(target.edges)
    violations = len(missing) + len(extra)
    edge_slack, gap_slack = dg.min_margins()
    success = violations == 0 and edge_slack >= margin and gap_slack >= margin
    return success, violations


def realize_disk(
    target: AbstractGraph,
    radius_palette: Sequence[float],
    seed: int,
    restarts: int = 8,
    iterations: int = 20000,
    margin: float = REALIZE_MARGIN,
    workers: int | None = None,
) -> RealizeResult:
    """Look for centers and palette radii whose disk graph is `target`.

    Args:
        target: Graph to realize (at most 12 vertices)
        radius_palette: Allowed blockade radii in µm
        seed: Master seed; restart k uses the k-th spawned child
        restarts: Independent annealing runs
        iterations: Annealing steps per restart
        margin: Required relative slack on every edge and non-edge
        workers: Threads for the restarts

    Returns:
        The best restart, ranked by (success, violations, penalty, restart index)

    Raises:
        GraphTooLargeError: more than 12 vertices
    """
    if target.n > MAX_REALIZE_VERTICES:
        raise GraphTooLargeError(f"realize_disk handles at most {MAX_REALIZE_VERTICES} vertices, got {target.n}")
    if target.n == 0:
        raise ValidationError("target graph has no vertices")
    palette = np.unique(np.asarray(radius_palette, dtype=np.float64))
    if palette.size == 0 or np.any(~(palette > 0)):
        raise ValidationError("radius palette must be non-empty and positive")
    if restarts < 1 or iterations < 0:
        raise ValidationError("need restarts ≥ 1 and iterations ≥ 0")
    search_penalty = _Penalty(target, margin + _SEARCH_MARGIN_PAD)

    def run(job: tuple[int, np.random.SeedSequence]) -> RealizeResult:
        index, child = job
        rng = np.random.default_rng(child)
        centers, radii, _ = _anneal(target, palette, search_penalty, rng, iterations)
        centers, value = _polish(centers, radii, search_penalty)
        # Shift to the first quadrant for readable coordinates
        centers = centers - centers.min(axis=0)
        dg = DiskGraph(
            centers,
            radii,
            name=target.name,
            target_edges=target.edges,
            seed=seed,
            provenance=f"realize_disk seed={seed} restart={index} palette={[float(p) for p in palette]}",
        )
        success, violations = _evaluate(target, dg, margin)
        logger.debug("restart %d: penalty %.3g, %d violations, success=%s", index, value, violations, success)
        return RealizeResult(dg, success, violations, value, index)

    children = np.random.SeedSequence(seed).spawn(restarts)
    results = parallel_map(run, list(enumerate(children)), workers)
    return min(results, key=lambda r: (not r.success, r.violations, r.penalty, r.restart))
