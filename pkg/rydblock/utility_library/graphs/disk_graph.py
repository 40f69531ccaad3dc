"""Disk graphs and abstract target graphs.

A disk graph places vertex i at a center with blockade radius r_i; i and j are adjacent when
dist(i, j) ≤ ½(r_i + r_j). That is the overlap rule for disks of radius r_i/2, and under the
amplitude–radius map it is the pairwise local blockade condition.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx
import numpy as np
from numpy.typing import ArrayLike
from scipy.spatial.distance import pdist, squareform

from ..shared.error_handling import CoincidentAtomsError, EdgeMismatchError, ValidationError

Edge = tuple[int, int]


def normalize_edges(n: int, edges: Iterable[Iterable[int]]) -> frozenset[Edge]:
    """Edges as sorted (i, j) pairs with i < j, checked against n."""
    out = set()
    for edge in edges:
        i, j = (int(v) for v in edge)
        if i == j:
            raise ValidationError(f"self-loop on vertex {i}")
        if not (0 <= i < n and 0 <= j < n):
            raise ValidationError(f"edge {i}-{j} out of range for {n} vertices")
        out.add((min(i, j), max(i, j)))
    return frozenset(out)


@dataclass(frozen=True)
class AbstractGraph:
    """A simple undirected graph on vertices 0..n−1."""

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)
    name: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValidationError(f"vertex count must be non-negative, got {self.n}")
        object.__setattr__(self, "edges", normalize_edges(self.n, self.edges))

    @classmethod
    def from_networkx(cls, graph: nx.Graph, name: str | None = None) -> AbstractGraph:
        """Relabel nodes 0..n−1 in sorted order."""
        nodes = sorted(graph.nodes)
        index = {v: k for k, v in enumerate(nodes)}
        return cls(len(nodes), frozenset((index[u], index[v]) for u, v in graph.edges), name)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Bit j of entry i is set when i and j are adjacent."""
        masks = [0] * self.n
        for i, j in self.edges:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        return tuple(masks)

    def degree(self, v: int) -> int:
        return self.adjacency_masks[v].bit_count()

    @property
    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def with_edges(self, extra: Iterable[Edge]) -> AbstractGraph:
        return AbstractGraph(self.n, self.edges | normalize_edges(self.n, extra), self.name)


def _pair_distances(centers: np.ndarray) -> np.ndarray:
    return squareform(pdist(centers)) if len(centers) > 1 else np.zeros((len(centers), len(centers)))


def _check_distinct(distances: np.ndarray) -> None:
    n = distances.shape[0]
    iu, ju = np.triu_indices(n, k=1)
    hits = np.flatnonzero(distances[iu, ju] == 0)
    if hits.size:
        k = hits[0]
        raise CoincidentAtomsError(f"vertices {iu[k]} and {ju[k]} have the same center")


def induced_edges(centers: ArrayLike, radii: ArrayLike) -> frozenset[Edge]:
    """Pairs with dist(i, j) ≤ ½(r_i + r_j); equality counts as an edge.

    Raises:
        CoincidentAtomsError: two centers coincide
        ValidationError: shapes disagree or a radius is not positive
    """
    c = np.asarray(centers, dtype=np.float64)
    r = np.asarray(radii, dtype=np.float64)
    if c.ndim != 2 or c.shape[1] != 2 or r.shape != (c.shape[0],):
        raise ValidationError(f"need centers of shape (n, 2) and n radii, got {c.shape} and {r.shape}")
    if np.any(~(r > 0)):
        raise ValidationError("radii must be positive")
    distances = _pair_distances(c)
    _check_distinct(distances)
    reach = 0.5 * (r[:, None] + r[None, :])
    iu, ju = np.triu_indices(len(r), k=1)
    hit = distances[iu, ju] <= reach[iu, ju]
    return frozenset(zip(iu[hit].tolist(), ju[hit].tolist(), strict=True))


@dataclass(frozen=True, eq=False)
class DiskGraph:
    """Vertex centers (µm) with per-vertex blockade radii (µm).

    `target_edges`, when given, is the graph the geometry is meant to encode; `check_target`
    verifies it. `seed` and `provenance` record where a realization came from.
    """

    centers: np.ndarray
    radii: np.ndarray
    name: str | None = None
    target_edges: frozenset[Edge] | None = None
    seed: int | None = None
    provenance: str | None = None

    def __post_init__(self) -> None:
        centers = np.array(self.centers, dtype=np.float64)
        radii = np.array(self.radii, dtype=np.float64)
        if centers.ndim != 2 or centers.shape[1] != 2 or radii.shape != (centers.shape[0],):
            raise ValidationError(f"need centers of shape (n, 2) and n radii, got {centers.shape} and {radii.shape}")
        if not np.all(np.isfinite(centers)):
            raise ValidationError("centers must be finite")
        if np.any(~(radii > 0)) or not np.all(np.isfinite(radii)):
            raise ValidationError("radii must be positive and finite")
        _check_distinct(_pair_distances(centers))
        centers.setflags(write=False)
        radii.setflags(write=False)
        object.__setattr__(self, "centers", centers)
        object.__setattr__(self, "radii", radii)
        if self.target_edges is not None:
            object.__setattr__(self, "target_edges", normalize_edges(self.n, self.target_edges))

    @property
    def n(self) -> int:
        return int(self.radii.size)

    @cached_property
    def edges(self) -> frozenset[Edge]:
        return induced_edges(self.centers, self.radii)

    def graph(self) -> AbstractGraph:
        """The induced graph."""
        return AbstractGraph(self.n, self.edges, self.name)

    def target_graph(self) -> AbstractGraph:
        """The declared target, or the induced graph when none is declared."""
        if self.target_edges is None:
            return self.graph()
        return AbstractGraph(self.n, self.target_edges, self.name)

    def distances(self) -> np.ndarray:
        return _pair_distances(self.centers)

    def edge_mismatch(self, target: Iterable[Edge]) -> tuple[list[Edge], list[Edge]]:
        """(target edges not induced, induced edges not in target)."""
        wanted = normalize_edges(self.n, target)
        return sorted(wanted - self.edges), sorted(self.edges - wanted)

    def check_target(self) -> None:
        """Raise EdgeMismatchError if the geometry does not induce `target_edges`."""
        if self.target_edges is None:
            return
        missing, extra = self.edge_mismatch(self.target_edges)
        if missing or extra:
            raise EdgeMismatchError(missing, extra)

    def scaled(self, lam: float) -> DiskGraph:
        """Centers multiplied by λ, radii unchanged."""
        if not lam > 0:
            raise ValidationError(f"scale factor must be positive, got {lam}")
        return DiskGraph(self.centers * lam, self.radii, self.name, None, self.seed, self.provenance)

    def min_margins(self) -> tuple[float, float]:
        """Smallest relative slack over edges and over non-edges.

        For an edge the slack is 1 − d/h, for a non-edge d/h − 1, with h = ½(r_i + r_j).
        Either value is +inf when there are no pairs of that kind.
        """
        d = self.distances()
        h = 0.5 * (self.radii[:, None] + self.radii[None, :])
        edge_slack, gap_slack = np.inf, np.inf
        for i, j in itertools.combinations(range(self.n), 2):
            ratio = d[i, j] / h[i, j]
            if (i, j) in self.edges:
                edge_slack = min(edge_slack, 1.0 - ratio)
            else:
                gap_slack = min(gap_slack, ratio - 1.0)
        return float(edge_slack), float(gap_slack)


def lambda_breaks(dg: DiskGraph) -> tuple[float, float]:
    """(λ_c, λ_full): the scalings at which the first and the last edge break.

    Edge (i, j) survives scaling by λ while λ·dist(i, j) ≤ ½(r_i + r_j).

    Raises:
        ValidationError: the graph has no edges
    """
    if not dg.edges:
        raise ValidationError("lambda_breaks needs at least one edge")
    d = dg.distances()
    breaks = [0.5 * (dg.radii[i] + dg.radii[j]) / d[i, j] for i, j in dg.edges]
    return float(min(breaks)), float(max(breaks))
