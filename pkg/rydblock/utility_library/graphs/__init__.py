"""Graphs module.

Disk graphs, independent sets, instance files and the disk realization search.
"""

from .disk_graph import AbstractGraph, DiskGraph, induced_edges, lambda_breaks
from .independence import VertexSet, independent_table, is_independent, mis_enumerate, set_sizes
from .instances import (
    bundled_instance_names,
    load_bundled_instance,
    named_graph,
    parse_instance,
    resolve_instance,
    write_instance,
)
from .realize import RealizeResult, realize_disk

__all__ = [
    "AbstractGraph",
    "DiskGraph",
    "RealizeResult",
    "VertexSet",
    "bundled_instance_names",
    "independent_table",
    "induced_edges",
    "is_independent",
    "lambda_breaks",
    "load_bundled_instance",
    "mis_enumerate",
    "named_graph",
    "parse_instance",
    "realize_disk",
    "resolve_instance",
    "set_sizes",
    "write_instance",
]
