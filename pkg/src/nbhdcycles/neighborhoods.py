"""Neighborhood cycles, the degree-3 / degree>=4 split, and set predicates."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, VertexSet, iter_bits
from .connectivity import component_masks

__all__ = [
    "DegreePartition",
    "degree_partition",
    "neighborhood_has_cycle",
    "all_neighborhoods_cyclic",
    "is_independent_set",
    "induces_forest",
    "induced_edge_count",
]


def induced_edge_count(G: Graph, mask: int) -> int:
    return sum((G.rows[v] & mask).bit_count() for v in iter_bits(mask)) // 2


def _mask_has_cycle(G: Graph, mask: int) -> bool:
    # A graph is a forest iff edges == vertices - components.
    edges = induced_edge_count(G, mask)
    if edges < 3:
        return False
    return edges > mask.bit_count() - len(component_masks(G, mask))


def neighborhood_has_cycle(G: Graph, v: int) -> bool:
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} out of range for n={G.n}")
    return _mask_has_cycle(G, G.rows[v])


def all_neighborhoods_cyclic(G: Graph) -> bool:
    return all(_mask_has_cycle(G, row) for row in G.rows)


@dataclass(frozen=True)
class DegreePartition:
    v3: VertexSet
    v_ge4: VertexSet
    min_degree: int

    @property
    def valid(self) -> bool:
        """The two classes cover V only when every degree is at least 3."""
        return self.min_degree >= 3


def degree_partition(G: Graph) -> DegreePartition:
    v3 = v_ge4 = 0
    for v, row in enumerate(G.rows):
        d = row.bit_count()
        if d == 3:
            v3 |= 1 << v
        elif d >= 4:
            v_ge4 |= 1 << v
    return DegreePartition(VertexSet(v3, G.n), VertexSet(v_ge4, G.n), G.min_degree())


def is_independent_set(G: Graph, S) -> bool:
    S = VertexSet.of(G, S)
    return all(not G.rows[v] & S.mask for v in S)


def induces_forest(G: Graph, S) -> bool:
    """True iff ``G[S]`` is acyclic, by depth-first search for a back edge."""
    S = VertexSet.of(G, S)
    rows = G.rows
    unvisited = S.mask
    while unvisited:
        root = (unvisited & -unvisited).bit_length() - 1
        unvisited &= ~(1 << root)
        stack = [(root, -1)]
        while stack:
            v, parent = stack.pop()
            for u in iter_bits(rows[v] & S.mask):
                if u == parent:
                    continue
                if not unvisited >> u & 1:
                    return False
                unvisited &= ~(1 << u)
                stack.append((u, v))
    return True
