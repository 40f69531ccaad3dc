"""Sweep-level parallelism.

Every sweep in rydblock (r scans, fit combinations, λ ratios, optimization grids) is a list of
independent pure evaluations; `parallel_map` runs them on a thread pool and returns results in
input order. numpy releases the GIL inside LAPACK so threads give real speedups.
"""

import os
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

T = TypeVar("T")
R = TypeVar("R")


def default_workers() -> int:
    """Available parallelism."""
    return os.cpu_count() or 1


def parallel_map(
    fn: Callable[[T], R],
    items: Iterable[T],
    workers: int | None = None,
    on_done: Callable[[], None] | None = None,
) -> list[R]:
    """Map fn over items, preserving order.

    Args:
        fn: Pure function of one item
        items: Inputs
        workers: Pool size; None means `default_workers()`, 1 or less runs inline
        on_done: Called once per finished item (progress updates)

    Returns:
        Results in input order
    """
    items = list(items)
    n_workers = default_workers() if workers is None else workers

    def run(item: T) -> R:
        result = fn(item)
        if on_done is not None:
            on_done()
        return result

    if n_workers <= 1 or len(items) <= 1:
        return [run(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(n_workers, len(items))) as pool:
        return list(pool.map(run, items))
