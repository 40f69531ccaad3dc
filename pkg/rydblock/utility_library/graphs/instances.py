"""Instance files and named target graphs.

Instance JSON schema:
    {"name": str, "centers": [[x, y], ...], "radii": [r, ...], "target_edges": [[i, j], ...],
     "seed": int, "provenance": str}

Only `centers` and `radii` are required. When `target_edges` is present the geometry must
induce exactly those edges or loading fails with the differing pairs.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any

import networkx as nx

from ..shared.error_handling import InstanceSchemaError, ValidationError
from ..shared.log import get_logger
from .disk_graph import AbstractGraph, DiskGraph

logger = get_logger(__name__)

INSTANCE_PACKAGE = "rydblock.instances"
_KNOWN_KEYS = frozenset({"name", "centers", "radii", "target_edges", "seed", "provenance"})

# Ring order of the seven-atom star, counter-clockwise from the +x axis; atom 6 is the center
STAR_RING = (0, 1, 4, 2, 5, 3)
STAR_CENTER = 6
STAR_EXTRA_EDGES = ((0, 4), (0, 5), (4, 5))


def instance_from_dict(data: dict[str, Any], source: str = "<dict>") -> DiskGraph:
    """Validate an instance document and build its DiskGraph.

    Raises:
        InstanceSchemaError: missing or malformed fields
        CoincidentAtomsError: two centers coincide
        EdgeMismatchError: geometry does not induce target_edges
    """
    if not isinstance(data, dict):
        raise InstanceSchemaError(f"{source}: expected a JSON object")
    unknown = set(data) - _KNOWN_KEYS
    if unknown:
        raise InstanceSchemaError(f"{source}: unknown fields {', '.join(sorted(unknown))}")
    for key in ("centers", "radii"):
        if key not in data:
            raise InstanceSchemaError(f"{source}: missing field {key!r}")
    try:
        centers = [(float(x), float(y)) for x, y in data["centers"]]
        radii = [float(r) for r in data["radii"]]
        target = data.get("target_edges")
        target_edges = None if target is None else frozenset((int(i), int(j)) for i, j in target)
        seed = data.get("seed")
        seed = None if seed is None else int(seed)
    except (TypeError, ValueError) as e:
        raise InstanceSchemaError(f"{source}: malformed field ({e})") from e
    if len(centers) != len(radii):
        raise InstanceSchemaError(f"{source}: {len(centers)} centers but {len(radii)} radii")
    try:
        dg = DiskGraph(
            centers,
            radii,
            name=data.get("name"),
            target_edges=target_edges,
            seed=seed,
            provenance=data.get("provenance"),
        )
    except ValidationError as e:
        if type(e) is ValidationError:
            raise InstanceSchemaError(f"{source}: {e}") from e
        raise
    dg.check_target()
    return dg


def parse_instance(path: Path | str) -> DiskGraph:
    """Load and validate an instance file."""
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as e:
        raise InstanceSchemaError(f"{path}: no such instance file") from e
    except json.JSONDecodeError as e:
        raise InstanceSchemaError(f"{path}: not valid JSON ({e})") from e
    dg = instance_from_dict(data, str(path))
    if dg.name is None:
        dg = DiskGraph(dg.centers, dg.radii, path.stem, dg.target_edges, dg.seed, dg.provenance)
    logger.debug("loaded instance %s: %d vertices, %d edges", dg.name, dg.n, len(dg.edges))
    return dg


def instance_to_dict(dg: DiskGraph) -> dict[str, Any]:
    data: dict[str, Any] = {
        "name": dg.name,
        "centers": [[float(x), float(y)] for x, y in dg.centers],
        "radii": [float(r) for r in dg.radii],
        "target_edges": [list(e) for e in sorted(dg.target_edges if dg.target_edges is not None else dg.edges)],
    }
    if dg.seed is not None:
        data["seed"] = dg.seed
    if dg.provenance is not None:
        data["provenance"] = dg.provenance
    return data


def write_instance(dg: DiskGraph, path: Path | str) -> Path:
    path = Path(path)
    path.write_text(json.dumps(instance_to_dict(dg), indent=2) + "\n", encoding="utf-8")
    return path


def bundled_instance_names() -> list[str]:
    return sorted(
        entry.name.removesuffix(".json")
        for entry in resources.files(INSTANCE_PACKAGE).iterdir()
        if entry.name.endswith(".json")
    )


def load_bundled_instance(name: str) -> DiskGraph:
    """Load one of the instances shipped with the package (`star`, `k23`, ...)."""
    key = name.lower().removesuffix(".json")
    if key not in bundled_instance_names():
        raise InstanceSchemaError(
            f"no bundled instance {name!r}; available: {', '.join(bundled_instance_names())}"
        )
    resource = resources.files(INSTANCE_PACKAGE) / f"{key}.json"
    try:
        data = json.loads(resource.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise InstanceSchemaError(f"bundled {key}.json: not valid JSON ({e})") from e
    return instance_from_dict(data, f"bundled {key}.json")


def resolve_instance(ref: str | Path) -> DiskGraph:
    """An existing file path, else a bundled instance name (with or without `.json`)."""
    path = Path(ref)
    if path.is_file():
        return parse_instance(path)
    return load_bundled_instance(path.name)


def _star_graph(extra: bool) -> nx.Graph:
    graph = nx.cycle_graph(STAR_RING)
    graph.add_edges_from((STAR_CENTER, v) for v in STAR_RING)
    if extra:
        graph.add_edges_from(STAR_EXTRA_EDGES)
    return graph


_NAMED_GRAPHS = {
    "p3": lambda: nx.path_graph(3),
    "k23": lambda: nx.complete_bipartite_graph(2, 3),
    "k16": lambda: nx.star_graph(6),
    "star": lambda: _star_graph(extra=True),
    "star_unit": lambda: _star_graph(extra=False),
}


def named_graph_names() -> list[str]:
    return sorted(_NAMED_GRAPHS)


def named_graph(name: str) -> AbstractGraph:
    """Target graph by name, with the vertex labels the bundled instances use.

    K₂,₃ puts the two-vertex side on 0 and 1; K₁,₆ has its center on 0. `star` is the wheel
    around atom 6 plus the three edges the enlarged radii add; `star_unit` is the bare wheel.
    """
    key = name.lower()
    if key not in _NAMED_GRAPHS:
        raise ValidationError(f"unknown graph {name!r}; choose from {', '.join(named_graph_names())}")
    return AbstractGraph.from_networkx(_NAMED_GRAPHS[key](), name=key)
