"""Exhaustive search for independent cuts and forest cuts.

Candidates are generated by increasing size and lexicographically within a
size, so the returned certificate is the lexicographically first minimum cut.
Candidate sets are grown one vertex at a time and a branch is abandoned as soon
as the set stops being independent (or stops inducing a forest); bad sets are
never built and filtered afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .connectivity import component_masks, is_connected_within
from .graph import Graph, VertexSet, iter_bits
from .neighborhoods import induces_forest, is_independent_set

__all__ = [
    "CutCertificate",
    "is_separator",
    "find_independent_cut",
    "find_forest_cut",
    "validate_certificate",
]

INDEPENDENT = "independent"
FOREST = "forest"


@dataclass(frozen=True)
class CutCertificate:
    kind: str
    cut: VertexSet
    component_count_after_removal: int

    def to_record(self) -> dict:
        return {
            "kind": self.kind,
            "cut": self.cut.sorted(),
            "components": self.component_count_after_removal,
        }


def is_separator(G: Graph, S) -> bool:
    S = VertexSet.of(G, S)
    if S.mask == G.vertex_mask:
        raise ValueError("a separator must leave at least one vertex")
    return not is_connected_within(G.rows, G.vertex_mask & ~S.mask)


def validate_certificate(G: Graph, cert: CutCertificate) -> None:
    """Re-check a certificate from scratch; raises AssertionError when unsound."""
    if cert.kind == INDEPENDENT:
        assert is_independent_set(G, cert.cut), f"cut {cert.cut} is not independent"
    elif cert.kind == FOREST:
        assert induces_forest(G, cert.cut), f"cut {cert.cut} does not induce a forest"
    else:
        raise ValueError(f"unknown cut kind {cert.kind!r}")
    assert G.n - len(cert.cut) >= 2, "cut leaves fewer than two vertices"
    count = len(component_masks(G, G.vertex_mask & ~cert.cut.mask))
    assert count == cert.component_count_after_removal >= 2, (
        f"cut {cert.cut} leaves {count} components, certificate says "
        f"{cert.component_count_after_removal}"
    )


def _independent_extensions(rows, size: int, start: int, chosen: int, blocked: int, n: int) -> Iterator[int]:
    if size == 0:
        yield chosen
        return
    for v in range(start, n - size + 1):
        if blocked >> v & 1:
            continue
        yield from _independent_extensions(rows, size - 1, v + 1, chosen | 1 << v, blocked | rows[v], n)


def _forest_extensions(rows, size: int, start: int, chosen: int, comp: dict, n: int) -> Iterator[int]:
    # comp maps each chosen vertex to a component id of G[chosen]; a new vertex
    # keeps the set acyclic iff its chosen neighbors lie in distinct components.
    if size == 0:
        yield chosen
        return
    for v in range(start, n - size + 1):
        ids = [comp[u] for u in iter_bits(rows[v] & chosen)]
        if len(ids) != len(set(ids)):
            continue
        new_id = min(ids, default=v)
        merged = set(ids)
        new_comp = {u: (new_id if c in merged else c) for u, c in comp.items()}
        new_comp[v] = new_id
        yield from _forest_extensions(rows, size - 1, v + 1, chosen | 1 << v, new_comp, n)


def _search(G: Graph, kind: str) -> CutCertificate | None:
    if G.n < 2:
        raise ValueError("cut search needs at least two vertices")
    full = G.vertex_mask
    comps = component_masks(G)
    if len(comps) >= 2:
        return CutCertificate(kind, VertexSet(0, G.n), len(comps))
    rows = G.rows
    for size in range(1, G.n - 1):
        if kind == INDEPENDENT:
            candidates = _independent_extensions(rows, size, 0, 0, 0, G.n)
        else:
            candidates = _forest_extensions(rows, size, 0, 0, {}, G.n)
        for cut in candidates:
            alive = full & ~cut
            if not is_connected_within(rows, alive):
                count = len(component_masks(G, alive))
                return CutCertificate(kind, VertexSet(cut, G.n), count)
    return None


def find_independent_cut(G: Graph) -> CutCertificate | None:
    """Lexicographically first minimum independent cut, or None if none exists."""
    return _search(G, INDEPENDENT)


def find_forest_cut(G: Graph) -> CutCertificate | None:
    """Lexicographically first minimum forest cut, or None if none exists."""
    return _search(G, FOREST)
