"""Hamiltonian cycles made of uncrossed edges."""

from __future__ import annotations

import networkx as nx

from twopage.core.config import get_settings
from twopage.core.exceptions import SearchLimitError
from twopage.core.logging import get_logger
from twopage.drawing.counting import edge_crossing_matrix
from twopage.drawing.model import Drawing

logger = get_logger(__name__)

Cycle = tuple[int, ...]


def uncrossed_graph(d: Drawing) -> nx.Graph:
    """Graph on 1..n whose edges are the edges of d crossed by nothing."""
    counts = edge_crossing_matrix(d.red)
    graph = nx.Graph()
    graph.add_nodes_from(range(1, d.n + 1))
    graph.add_edges_from(
        (i, j) for i, j, _ in d.entries() if counts[i - 1, j - 1] == 0
    )
    return graph


def _canonical(path: list[int]) -> Cycle | None:
    """Keep the listing that starts at 1 with the smaller neighbour second."""
    return tuple(path) if path[1] < path[-1] else None


def uncrossed_hamiltonian_cycles(d: Drawing, edge_cap: int | None = None) -> list[Cycle]:
    """
    All Hamiltonian cycles of the uncrossed subgraph.

    Each cycle is listed once, starting at vertex 1 and continuing to its smaller
    neighbour on the cycle. Cycles are sorted.

    Args:
        d: Drawing
        edge_cap: Abort above this many uncrossed edges (default from settings)

    Raises:
        SearchLimitError: the uncrossed subgraph is larger than the cap
    """
    cap = get_settings().hamiltonian_edge_cap if edge_cap is None else edge_cap
    graph = uncrossed_graph(d)
    if graph.number_of_edges() > cap:
        raise SearchLimitError(
            f"uncrossed subgraph has {graph.number_of_edges()} edges, cap is {cap}"
        )
    if min(dict(graph.degree()).values()) < 2 or not nx.is_connected(graph):
        return []

    n = d.n
    adjacency = {v: sorted(graph.neighbors(v)) for v in graph.nodes}
    cycles: list[Cycle] = []
    path = [1]
    seen = {1}

    def extend() -> None:
        last = path[-1]
        if len(path) == n:
            if graph.has_edge(last, 1):
                cycle = _canonical(path)
                if cycle is not None:
                    cycles.append(cycle)
            return
        for nxt in adjacency[last]:
            if nxt in seen:
                continue
            path.append(nxt)
            seen.add(nxt)
            extend()
            seen.discard(nxt)
            path.pop()

    extend()
    cycles.sort()
    logger.debug("Hamiltonian search done", extra={"n": n, "cycles": len(cycles)})
    return cycles


def spine_cycle(n: int) -> Cycle:
    """The cycle 1 2 ... n."""
    return tuple(range(1, n + 1))
