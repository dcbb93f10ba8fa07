"""Canonical forms and isomorph-free generation of small graphs.

The canonical form of a graph is the smallest graph6 string over all vertex
orders that are compatible with its iterated degree refinement. The search
individualizes one vertex at a time in the first non-singleton cell and
re-refines. A branch is skipped when its vertex is a twin (same neighbors
apart from each other) of a vertex already tried in that cell, because
swapping the two is an automorphism that fixes the rest of the search path.

Generation is level by level in the edge count: every class with ``m + 1``
edges arises by adding one edge to some class with ``m`` edges, so canonical
deduplication of all one-edge extensions is complete. With lower-bound
constraints that are closed under adding edges (minimum degree, minimum
connectivity) the walk runs downward from K_n instead and prunes.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .connectivity import is_connected_within, is_k_connected
from .graph import Graph, Graph6Error, encode_graph6, iter_bits, parse_graph6
from .neighborhoods import all_neighborhoods_cyclic

__all__ = [
    "MAX_NATIVE_N",
    "EnumerationConstraints",
    "StreamFormatError",
    "canonical_form",
    "canonical_graph",
    "canonical_code",
    "satisfies",
    "enumerate_graphs",
    "ingest_graph6_stream",
]

MAX_NATIVE_N = 9
# Up to this n the complete class list is built once and filtered.
_FULL_LIST_N = 8


class StreamFormatError(ValueError):
    def __init__(self, lineno: int, reason: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {reason}")


# canonical labeling ------------------------------------------------------


def _refine(rows, cells):
    while True:
        masks = []
        for cell in cells:
            mask = 0
            for v in cell:
                mask |= 1 << v
            masks.append(mask)
        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sigs = {}
            for v in cell:
                row = rows[v]
                sig = 0
                for mask in masks:
                    sig = sig << 4 | (row & mask).bit_count()
                sigs.setdefault(sig, []).append(v)
            if len(sigs) == 1:
                new_cells.append(cell)
            else:
                new_cells.extend(sigs[s] for s in sorted(sigs))
        if len(new_cells) == len(cells):
            return cells
        cells = new_cells


def _code(rows, order):
    code = 0
    for j in range(1, len(order)):
        col = rows[order[j]]
        for i in range(j):
            code = code << 1 | (col >> order[i] & 1)
    return code


def _canonical_order(rows, n):
    """Return ``(code, order)`` with ``order[i]`` the vertex placed at position i."""
    full = (1 << n) - 1
    twins = [0] * n
    for u in range(n):
        for w in range(u + 1, n):
            if rows[u] & ~(1 << w) == rows[w] & ~(1 << u):
                twins[u] |= 1 << w
                twins[w] |= 1 << u
    degree_cells = {}
    for v in range(n):
        degree_cells.setdefault((rows[v] & full).bit_count(), []).append(v)
    start = [degree_cells[d] for d in sorted(degree_cells)]

    best_code = None
    best_order = None
    stack = [start]
    while stack:
        cells = _refine(rows, stack.pop())
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _code(rows, order)
            if best_code is None or code < best_code:
                best_code, best_order = code, order
            continue
        cell = cells[target]
        tried = 0
        head, tail = cells[:target], cells[target + 1:]
        for v in cell:
            if twins[v] & tried:
                continue
            tried |= 1 << v
            stack.append(head + [[v], [w for w in cell if w != v]] + tail)
    if best_order is None:
        best_code, best_order = 0, []
    return best_code, best_order


def _relabel(rows, order):
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    new = []
    for v in order:
        row = 0
        for u in iter_bits(rows[v]):
            row |= 1 << pos[u]
        new.append(row)
    return tuple(new)


def _check_cap(G: Graph) -> None:
    if G.n > MAX_NATIVE_N:
        raise ValueError(f"canonical forms are limited to n <= {MAX_NATIVE_N}, got n={G.n}")


def canonical_code(G: Graph) -> int:
    """The canonical graph6 bit string of ``G`` as an integer (for fixed n)."""
    _check_cap(G)
    return _canonical_order(G.rows, G.n)[0]


def canonical_graph(G: Graph) -> Graph:
    """The canonically relabeled copy of ``G``."""
    _check_cap(G)
    _, order = _canonical_order(G.rows, G.n)
    return Graph(G.n, _relabel(G.rows, order))


def canonical_form(G: Graph) -> bytes:
    return encode_graph6(canonical_graph(G))


# constraints -------------------------------------------------------------


@dataclass(frozen=True)
class EnumerationConstraints:
    n: int
    connected_only: bool = False
    min_degree: int | None = None
    min_connectivity: int | None = None
    max_edges: int | None = None
    min_edges: int | None = None
    require_neighborhood_cycles: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")
        top = self.n * (self.n - 1) // 2
        for name in ("max_edges", "min_edges"):
            value = getattr(self, name)
            if value is not None and not 0 <= value <= top:
                raise ValueError(f"{name}={value} outside [0, {top}] for n={self.n}")
        if self.min_edges is not None and self.max_edges is not None and self.min_edges > self.max_edges:
            raise ValueError("min_edges exceeds max_edges")

    def to_record(self) -> dict:
        return asdict(self)


def satisfies(G: Graph, c: EnumerationConstraints) -> bool:
    if G.n != c.n:
        return False
    m = G.m
    if c.max_edges is not None and m > c.max_edges:
        return False
    if c.min_edges is not None and m < c.min_edges:
        return False
    if c.min_degree is not None and G.min_degree() < c.min_degree:
        return False
    if c.connected_only and not is_connected_within(G.rows, G.vertex_mask):
        return False
    if c.require_neighborhood_cycles and not all_neighborhoods_cyclic(G):
        return False
    if c.min_connectivity is not None and not is_k_connected(G, c.min_connectivity):
        return False
    return True


# generation --------------------------------------------------------------


@lru_cache(maxsize=None)
def _grow(n: int, max_edges: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """All classes with at most ``max_edges`` edges as ``(code, canonical rows)``."""
    level = {0: (0,) * n}
    found = dict(level)
    for _ in range(max_edges):
        nxt = {}
        for rows in level.values():
            for j in range(1, n):
                free = ~rows[j] & ((1 << j) - 1)
                for i in iter_bits(free):
                    child = list(rows)
                    child[i] |= 1 << j
                    child[j] |= 1 << i
                    code, order = _canonical_order(child, n)
                    if code not in nxt:
                        nxt[code] = _relabel(child, order)
        found.update(nxt)
        level = nxt
    return tuple(sorted(found.items()))


@lru_cache(maxsize=None)
def _shrink(n: int, min_edges: int, min_degree: int, min_connectivity: int):
    """Classes with >= ``min_edges`` edges that keep both monotone lower bounds."""
    full = (1 << n) - 1
    top = tuple(full & ~(1 << v) for v in range(n))

    def keep(rows):
        if min(r.bit_count() for r in rows) < min_degree:
            return False
        return min_connectivity == 0 or is_k_connected(Graph(n, tuple(rows)), min_connectivity)

    if not keep(top):
        return ()
    level = {_canonical_order(top, n)[0]: top}
    found = dict(level)
    rejected = set()
    for _ in range(n * (n - 1) // 2 - min_edges):
        nxt = {}
        for rows in level.values():
            for j in range(1, n):
                for i in iter_bits(rows[j] & ((1 << j) - 1)):
                    child = list(rows)
                    child[i] &= ~(1 << j)
                    child[j] &= ~(1 << i)
                    if child[i].bit_count() < min_degree or child[j].bit_count() < min_degree:
                        continue
                    code, order = _canonical_order(child, n)
                    if code in nxt or code in rejected:
                        continue
                    if keep(child):
                        nxt[code] = _relabel(child, order)
                    else:
                        rejected.add(code)
        if not nxt:
            break
        found.update(nxt)
        level = nxt
    return tuple(sorted(found.items()))


def enumerate_graphs(c: EnumerationConstraints) -> Iterator[Graph]:
    """One canonical representative per isomorphism class meeting ``c``, in canonical order."""
    n = c.n
    if n > MAX_NATIVE_N:
        raise ValueError(f"native generation is capped at n={MAX_NATIVE_N}; ingest a graph6 stream for n={n}")
    top = n * (n - 1) // 2
    max_edges = top if c.max_edges is None else c.max_edges
    min_edges = 0 if c.min_edges is None else c.min_edges
    min_degree = c.min_degree or 0
    min_conn = c.min_connectivity or 0
    if c.connected_only and n > 1:
        min_conn = max(min_conn, 1)
        min_degree = max(min_degree, 1)
    min_degree = max(min_degree, min_conn)

    if n <= _FULL_LIST_N:
        classes = _grow(n, top)
    elif (min_degree >= 2 or min_conn >= 2) and top - min_edges < max_edges:
        # Walking down from K_n prunes on the lower bounds.
        classes = _shrink(n, min_edges, min_degree, min_conn)
    else:
        classes = _grow(n, max_edges)
    for _, rows in classes:
        G = Graph(n, rows)
        if satisfies(G, c):
            yield G


def _records(source) -> Iterator[tuple[int, bytes]]:
    for lineno, line in enumerate(source, 1):
        if isinstance(line, str):
            line = line.encode("ascii", errors="replace")
        line = line.strip()
        if not line or (lineno == 1 and line == b">>graph6<<"):
            continue
        yield lineno, line


def ingest_graph6_stream(source: Iterable, c: EnumerationConstraints) -> Iterator[Graph]:
    """Parse newline-separated graph6 records and keep those meeting ``c``.

    A malformed record raises StreamFormatError carrying its line number.
    """
    for lineno, line in _records(source):
        try:
            G = parse_graph6(line)
        except Graph6Error as exc:
            raise StreamFormatError(lineno, str(exc)) from None
        if satisfies(G, c):
            yield G
