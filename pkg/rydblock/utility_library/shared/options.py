"""Parsing helpers for command-line options shared by every command.

List-valued flags take comma-separated values (`--omega 1,3`, `--ratios 0.8,2.0`). Bad values
raise `typer.BadParameter`, which Typer reports as a usage error with exit code 2.
"""

from collections.abc import Iterable

import typer

from .config import C6_BY_LEVEL


def _split(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def parse_float_list(text: str, name: str) -> tuple[float, ...]:
    """Parse `"1,3.5"` into `(1.0, 3.5)`."""
    parts = _split(text)
    if not parts:
        raise typer.BadParameter(f"{name} needs at least one value")
    try:
        return tuple(float(p) for p in parts)
    except ValueError as e:
        raise typer.BadParameter(f"{name}: {e}") from e


def parse_name_list(text: str, name: str, allowed: Iterable[str] | None = None) -> tuple[str, ...]:
    """Parse `"global,local"`, optionally checking each name against `allowed`."""
    parts = tuple(p.lower() for p in _split(text))
    if not parts:
        raise typer.BadParameter(f"{name} needs at least one value")
    if allowed is not None:
        allowed = tuple(allowed)
        unknown = [p for p in parts if p not in allowed]
        if unknown:
            raise typer.BadParameter(f"unknown {name} {', '.join(unknown)} (choose from {', '.join(allowed)})")
    return parts


def parse_edge_list(text: str) -> tuple[tuple[int, int], ...]:
    """Parse `"0-1,1-2"` into `((0, 1), (1, 2))`."""
    edges = []
    for part in _split(text):
        left, sep, right = part.partition("-")
        try:
            if not sep:
                raise ValueError(part)
            edges.append((int(left), int(right)))
        except ValueError as e:
            raise typer.BadParameter(f"edges must look like 0-1,1-2, got {part!r}") from e
    return tuple(edges)


def c6_for_level(level: int) -> float:
    """C6 preset for a Rydberg level given on the command line."""
    if level not in C6_BY_LEVEL:
        levels = ", ".join(str(n) for n in sorted(C6_BY_LEVEL))
        raise typer.BadParameter(f"no C6 preset for n = {level} (available: {levels})")
    return C6_BY_LEVEL[level]


def parse_instance_list(text: str) -> tuple[str, ...]:
    """Parse `"k23,runs/g4.json"`; entries are kept verbatim since they may be paths."""
    parts = tuple(_split(text))
    if not parts:
        raise typer.BadParameter("instance needs at least one value")
    return parts
