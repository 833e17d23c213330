"""Named graphs available to the command line as ``@name``"""
from typing import Callable

from graphs.families import (
    complete_graph, directed_cycle, directed_path, edgeless_graph, g0, k2_looped, k3,
    odd_antihole, odd_hole, single_vertex, undirected_cycle, undirected_path,
)
from graphs.graph import EMPTY_GRAPH, Graph
from utils.errors import InputError

CATALOG: dict[str, Callable[[], Graph]] = {
    "empty": lambda: EMPTY_GRAPH,
    "point": single_vertex,
    "loop": lambda: single_vertex(loop=True),
    "g0": g0,
    "k3": k3,
    "k2-looped": k2_looped,
    "k2": lambda: complete_graph(2),
    "c4": lambda: undirected_cycle(4),
    "c5": lambda: odd_hole(2),
    "c5-complement": lambda: odd_antihole(2),
    "c7": lambda: odd_hole(3),
    "c7-complement": lambda: odd_antihole(3),
    "p3-undirected": lambda: undirected_path(4),
    "two-points": lambda: edgeless_graph(2),
    "directed-c3": lambda: directed_cycle(3),
}


def catalog_graph(name: str) -> Graph:
    """A catalog graph, or a parametrized family: ``path-N`` (directed P_N),
    ``cycle-N`` (directed), ``ucycle-N``, ``complete-N``"""
    key = name.lower()
    if key in CATALOG:
        return CATALOG[key]()
    family, _, size = key.rpartition("-")
    families = {
        "path": directed_path,
        "cycle": directed_cycle,
        "ucycle": undirected_cycle,
        "complete": complete_graph,
    }
    if family in families and size.isdigit():
        n = int(size)
        if family == "ucycle" and n < 3:
            raise InputError("undirected cycles need at least 3 vertices")
        return families[family](n)
    known = ", ".join(sorted(CATALOG))
    raise InputError(f"unknown catalog graph {name!r}; known: {known}, path-N, cycle-N, ucycle-N, complete-N")


def catalog_names() -> list[str]:
    return sorted(CATALOG)
