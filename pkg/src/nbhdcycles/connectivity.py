"""Connected components and exact vertex connectivity.

Connectivity is decided by removing every candidate separator of size below
``k`` and counting components. At the graph sizes this package targets
(n <= ~12) that is fast and obviously correct.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, iter_bits

__all__ = [
    "ComponentLabeling",
    "components",
    "component_masks",
    "is_connected_within",
    "has_separator_of_size",
    "vertex_connectivity",
    "is_k_connected",
]


@dataclass(frozen=True)
class ComponentLabeling:
    labels: tuple[int, ...]
    count: int

    def members(self, label: int) -> list[int]:
        return [v for v, lab in enumerate(self.labels) if lab == label]


def component_masks(G: Graph, alive: int | None = None) -> list[int]:
    """Vertex masks of the components of ``G[alive]``, ordered by smallest member."""
    rows = G.rows
    remaining = G.vertex_mask if alive is None else alive
    comps = []
    while remaining:
        frontier = remaining & -remaining
        seen = frontier
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= rows[v]
            frontier = reach & remaining & ~seen
            seen |= frontier
        comps.append(seen)
        remaining &= ~seen
    return comps


def is_connected_within(rows: tuple[int, ...], alive: int) -> bool:
    """True iff the subgraph induced on ``alive`` is connected (or empty)."""
    if not alive:
        return True
    frontier = alive & -alive
    seen = frontier
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= rows[v]
        frontier = reach & alive & ~seen
        seen |= frontier
    return seen == alive


def components(G: Graph) -> ComponentLabeling:
    labels = [0] * G.n
    comps = component_masks(G)
    for label, mask in enumerate(comps):
        for v in iter_bits(mask):
            labels[v] = label
    return ComponentLabeling(tuple(labels), len(comps))


def has_separator_of_size(G: Graph, size: int) -> bool:
    """True iff removing some ``size`` vertices leaves a disconnected graph."""
    n = G.n
    if n - size < 2:
        return False
    full = G.vertex_mask
    rows = G.rows
    for S in combinations(range(n), size):
        alive = full
        for v in S:
            alive &= ~(1 << v)
        if not is_connected_within(rows, alive):
            return True
    return False


def vertex_connectivity(G: Graph) -> int:
    """Minimum separator size; ``n - 1`` for complete graphs, 0 if disconnected."""
    if G.n < 1:
        raise ValueError("vertex connectivity needs at least one vertex")
    if G.is_complete():
        return G.n - 1
    k = 0
    while not has_separator_of_size(G, k):
        k += 1
    return k


def is_k_connected(G: Graph, k: int) -> bool:
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if G.n <= k:
        return False
    if G.min_degree() < k:
        return False
    return not any(has_separator_of_size(G, s) for s in range(k))
