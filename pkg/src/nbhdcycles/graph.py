"""Immutable simple graphs on vertices ``0..n-1`` with bitmask adjacency rows.

Row ``v`` of a graph is an int whose bit ``u`` is set iff ``u`` and ``v`` are
adjacent, so adjacency queries, neighborhood intersections and induced-edge
counts are single integer operations.
"""

from __future__ import annotations

from typing import Iterable, Iterator

__all__ = [
    "Graph",
    "VertexSet",
    "Graph6Error",
    "build_graph",
    "neighborhood",
    "induced_subgraph",
    "remove_vertices",
    "parse_graph6",
    "encode_graph6",
    "parse_edge_list",
    "format_edge_list",
    "iter_bits",
]

# Largest n representable with the 1-byte and the '~'+3-byte size fields.
SHORT_N_MAX = 62
EXTENDED_N_MAX = 258047


class Graph6Error(ValueError):
    pass


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph. Treat instances as immutable."""

    __slots__ = ("n", "rows", "_m")

    def __init__(self, n: int, rows: tuple[int, ...]):
        # Trusted constructor: rows must already be symmetric and loop-free.
        # Use build_graph or Graph.from_rows for unchecked input.
        self.n = n
        self.rows = rows
        self._m = None

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> Graph:
        rows = tuple(rows)
        n = len(rows)
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex >= {n}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        return cls(n, rows)

    @property
    def m(self) -> int:
        if self._m is None:
            self._m = sum(row.bit_count() for row in self.rows) // 2
        return self._m

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def min_degree(self) -> int:
        return min((row.bit_count() for row in self.rows), default=0)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for u, row in enumerate(self.rows):
            out.extend((u, v) for v in iter_bits(row >> (u + 1) << (u + 1)))
        return out

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


class VertexSet:
    """A set of vertices of a graph with ``host_n`` vertices."""

    __slots__ = ("mask", "host_n")

    def __init__(self, members: Iterable[int] | int = (), host_n: int | None = None):
        if isinstance(members, int):
            mask = members
        else:
            mask = 0
            for v in members:
                if v < 0:
                    raise ValueError(f"negative vertex {v}")
                mask |= 1 << v
        if host_n is None:
            host_n = mask.bit_length()
        if mask >> host_n:
            raise ValueError(f"vertex set {sorted(iter_bits(mask))} exceeds n={host_n}")
        self.mask = mask
        self.host_n = host_n

    @classmethod
    def of(cls, G: Graph, members: Iterable[int] | int | VertexSet) -> VertexSet:
        """Coerce ``members`` to a vertex set of ``G``, validating range."""
        if isinstance(members, VertexSet):
            if members.host_n != G.n:
                raise ValueError(f"vertex set belongs to a graph with n={members.host_n}, not {G.n}")
            return members
        return cls(members, G.n)

    @property
    def members(self) -> frozenset[int]:
        return frozenset(iter_bits(self.mask))

    def __iter__(self):
        return iter_bits(self.mask)

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, v):
        return v >= 0 and bool(self.mask >> v & 1)

    def __eq__(self, other):
        if isinstance(other, VertexSet):
            return self.mask == other.mask and self.host_n == other.host_n
        if isinstance(other, (set, frozenset)):
            return self.members == other
        return NotImplemented

    def __hash__(self):
        return hash((self.mask, self.host_n))

    def __repr__(self):
        return f"VertexSet({sorted(self)}, host_n={self.host_n})"

    def sorted(self) -> list[int]:
        return list(iter_bits(self.mask))


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph; repeated pairs collapse, loops are rejected."""
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def _check_vertex(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} out of range for n={G.n}")


def neighborhood(G: Graph, v: int) -> VertexSet:
    _check_vertex(G, v)
    return VertexSet(G.rows[v], G.n)


def _induced_on_mask(G: Graph, keep: int) -> Graph:
    order = list(iter_bits(keep))
    rows = []
    for v in order:
        row = G.rows[v] & keep
        new = 0
        for i, u in enumerate(order):
            if row >> u & 1:
                new |= 1 << i
        rows.append(new)
    return Graph(len(order), tuple(rows))


def induced_subgraph(G: Graph, S) -> Graph:
    """``G[S]`` relabeled by the ascending order of ``S``."""
    S = VertexSet.of(G, S)
    if S.mask == G.vertex_mask:
        return G
    return _induced_on_mask(G, S.mask)


def remove_vertices(G: Graph, S) -> Graph:
    S = VertexSet.of(G, S)
    if not S.mask:
        return G
    return _induced_on_mask(G, G.vertex_mask & ~S.mask)


# graph6 -----------------------------------------------------------------


def _size_field(n: int) -> bytes:
    if n <= SHORT_N_MAX:
        return bytes([n + 63])
    if n <= EXTENDED_N_MAX:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise Graph6Error(f"n={n} exceeds the supported graph6 size {EXTENDED_N_MAX}")


def encode_graph6(G: Graph) -> bytes:
    """Encode ``G`` as graph6 (no header, no trailing newline)."""
    out = bytearray(_size_field(G.n))
    rows = G.rows
    acc = 0
    nbits = 0
    for j in range(1, G.n):
        col = rows[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 record.

    Rejects bytes outside 63..126, truncated or overlong bit data, non-zero
    padding and non-minimal size fields so that decoding and
    :func:`encode_graph6` are exact inverses.
    """
    if isinstance(text, str):
        text = text.encode("ascii", errors="replace")
    data = text.strip(b"\r\n")
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise Graph6Error("empty graph6 record")
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte!r} at offset {pos} is outside 63..126")
    if data[0] != 126:
        n, body = data[0] - 63, data[1:]
    else:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("8-byte size field is not supported")
        if len(data) < 4:
            raise Graph6Error("truncated extended size field")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        if n <= SHORT_N_MAX:
            raise Graph6Error(f"extended size field used for n={n}")
        body = data[4:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) < expected:
        raise Graph6Error(f"truncated bit stream: {len(body)} of {expected} data bytes")
    if len(body) > expected:
        raise Graph6Error(f"{len(body) - expected} trailing bytes after the bit stream")
    pad = expected * 6 - nbits
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise Graph6Error("non-zero padding bits")

    rows = [0] * n
    i, j = 0, 1
    for byte in body:
        group = byte - 63
        for shift in range(5, -1, -1):
            if j >= n:
                break
            if group >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(rows))


# edge-list text ---------------------------------------------------------


def format_edge_list(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse one or more concatenated edge-list records.

    Each record is a line ``n m`` followed by ``m`` lines ``u v``. Blank lines
    between records are ignored.
    """
    it = iter(enumerate(lines, 1))
    for lineno, line in it:
        if not line.strip():
            continue
        header = line.split()
        if len(header) != 2:
            raise ValueError(f"line {lineno}: expected 'n m', got {line.strip()!r}")
        n, m = int(header[0]), int(header[1])
        edges = []
        for _ in range(m):
            try:
                lineno, line = next(it)
            except StopIteration:
                raise ValueError(f"line {lineno}: record ended after {len(edges)} of {m} edges") from None
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected 'u v', got {line.strip()!r}")
            edges.append((int(parts[0]), int(parts[1])))
        try:
            yield build_graph(n, edges)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
