"""Independent sets over bitmasks.

Vertex i is bit i, which is also the basis convention of the quantum core: basis index b
excites exactly the atoms in bitmask b. A table indexed by mask therefore doubles as the
diagonal of a projector.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from ..shared.config import MAX_MIS_VERTICES
from ..shared.error_handling import GraphTooLargeError, ValidationError
from ..shared.log import get_logger
from .disk_graph import AbstractGraph

logger = get_logger(__name__)


@dataclass(frozen=True, order=True)
class VertexSet:
    """A subset of {0, …, n−1} stored as a bitmask."""

    mask: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 0 or self.mask < 0 or self.mask >> self.n:
            raise ValidationError(f"mask {self.mask:#b} has bits beyond {self.n} vertices")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> VertexSet:
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ValidationError(f"vertex {v} out of range for {n} vertices")
            mask |= 1 << v
        return cls(mask, n)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.mask >> v & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.mask >> v & 1)

    def __iter__(self):
        return iter(self.vertices)


def is_independent(g: AbstractGraph, s: VertexSet | int) -> bool:
    """True when no edge of g has both endpoints in s."""
    mask = s.mask if isinstance(s, VertexSet) else int(s)
    adjacency = g.adjacency_masks
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        if adjacency[v] & mask:
            return False
        m &= m - 1
    return True


def _check_size(g: AbstractGraph) -> None:
    if g.n > MAX_MIS_VERTICES:
        raise GraphTooLargeError(f"{g.n} vertices exceeds the exhaustive limit of {MAX_MIS_VERTICES}")


def independent_table(g: AbstractGraph) -> np.ndarray:
    """Boolean array over all 2^n masks: True where the mask is independent.

    Built by doubling: a mask whose highest bit is v is independent when the mask without v is
    and v has no neighbour in it.
    """
    _check_size(g)
    table = np.zeros(1 << g.n, dtype=bool)
    table[0] = True
    for v, adjacency in enumerate(g.adjacency_masks):
        low = np.arange(1 << v, dtype=np.int64)
        table[1 << v : 1 << (v + 1)] = table[: 1 << v] & ((low & adjacency) == 0)
    return table


def set_sizes(n: int) -> np.ndarray:
    """Popcount of every mask 0..2^n−1."""
    return np.bitwise_count(np.arange(1 << n, dtype=np.uint32)).astype(np.int64)


def mis_enumerate(g: AbstractGraph) -> tuple[int, list[VertexSet]]:
    """Size of a maximum independent set and every set attaining it.

    Sets are ordered lexicographically by their sorted vertex tuples.

    Raises:
        GraphTooLargeError: more than 24 vertices
    """
    table = independent_table(g)
    sizes = set_sizes(g.n)
    size = int(sizes[table].max())
    masks = np.flatnonzero(table & (sizes == size))
    sets = sorted((VertexSet(int(m), g.n) for m in masks), key=lambda s: s.vertices)
    logger.debug("graph %s: MIS size %d, %d maximum sets", g.name or "", size, len(sets))
    return size, sets
