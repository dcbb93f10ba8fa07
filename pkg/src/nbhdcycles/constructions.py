"""Named graph families: book graphs, prisms, and the K4-substitution of a cubic graph."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .connectivity import is_k_connected
from .graph import Graph, build_graph

__all__ = [
    "SubstitutionMap",
    "book_graph",
    "prism",
    "complete_graph",
    "cycle_graph",
    "octahedron",
    "petersen",
    "k4_substitution",
    "named_graph",
    "NAMED_FAMILIES",
]

# Copy-local vertex of every K4 copy that carries no base edge.
INTERNAL_PORT = 3


def book_graph(k: int) -> Graph:
    """``k`` triangles sharing the spine edge ``0-1``; pages are ``2..k+1``."""
    if k < 1:
        raise ValueError(f"a book graph needs at least one page, got {k}")
    edges = [(0, 1)]
    for page in range(2, k + 2):
        edges += [(0, page), (1, page)]
    return build_graph(k + 2, edges)


def prism(t: int) -> Graph:
    """C_t x K2: outer cycle ``0..t-1``, inner cycle ``t..2t-1``, spokes ``i -- t+i``."""
    if t < 3:
        raise ValueError(f"prism needs cycle length >= 3, got {t}")
    edges = []
    for i in range(t):
        j = (i + 1) % t
        edges += [(i, j), (t + i, t + j), (i, t + i)]
    return build_graph(2 * t, edges)


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def octahedron() -> Graph:
    """K_{2,2,2}: antipodal pairs are {0,1}, {2,3}, {4,5}."""
    return build_graph(6, [(u, v) for u, v in combinations(range(6), 2) if u // 2 != v // 2])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


@dataclass(frozen=True)
class SubstitutionMap:
    """How a K4-substituted graph sits over its cubic base.

    ``copy_of[x]`` is the base vertex whose K4 copy contains ``x``;
    ``port_of[(a, b)]`` (``a < b``) is the pair ``(x, y)`` of substituted
    vertices carrying base edge ``ab``, with ``x`` in the copy of ``a``.
    ``base_three_connected`` is False when the base is cubic but not
    3-connected; the substitution is still built in that case.
    """

    copy_of: tuple[int, ...]
    port_of: dict
    base_three_connected: bool

    def copy_vertices(self, b: int) -> list[int]:
        return [x for x, base in enumerate(self.copy_of) if base == b]


def k4_substitution(H: Graph) -> tuple[Graph, SubstitutionMap]:
    """Replace every vertex of the cubic graph ``H`` by a K4.

    Base vertex ``b`` becomes ``4b..4b+3``. Copy-local vertices 0, 1, 2 take
    the base edges to ``b``'s neighbors in ascending neighbor order, and
    copy-local vertex 3 keeps degree 3.
    """
    bad = [v for v in range(H.n) if H.degree(v) != 3]
    if bad:
        raise ValueError(f"base graph is not 3-regular (vertex {bad[0]} has degree {H.degree(bad[0])})")
    edges = []
    for b in range(H.n):
        edges.extend((4 * b + i, 4 * b + j) for i, j in combinations(range(4), 2))
    port = {}
    for b in range(H.n):
        for local, nb in enumerate(H.neighbors(b)):
            port[b, nb] = 4 * b + local
    port_of = {}
    for a, b in H.edges():
        port_of[a, b] = (port[a, b], port[b, a])
        edges.append(port_of[a, b])
    G = build_graph(4 * H.n, edges)
    copy_of = tuple(x // 4 for x in range(G.n))
    return G, SubstitutionMap(copy_of, port_of, is_k_connected(H, 3))


NAMED_FAMILIES = ("complete", "cycle", "book", "prism", "octahedron", "petersen", "k4sub")


def named_graph(name: str, param: int | None = None) -> Graph:
    """Look up a graph by family name, e.g. ``named_graph("prism", 4)`` or ``"prism:4"``.

    ``k4sub`` takes a base description such as ``"k4sub:prism:3"``.
    """
    if param is None and ":" in name:
        name, _, rest = name.partition(":")
        if name == "k4sub":
            return k4_substitution(named_graph(rest))[0]
        try:
            param = int(rest)
        except ValueError:
            raise ValueError(f"bad parameter {rest!r} for {name}") from None
    builders = {
        "complete": complete_graph,
        "cycle": cycle_graph,
        "book": book_graph,
        "prism": prism,
    }
    if name in builders:
        if param is None:
            raise ValueError(f"{name} needs an integer parameter")
        return builders[name](param)
    fixed = {"octahedron": octahedron, "petersen": petersen}
    if name in fixed:
        if param is not None:
            raise ValueError(f"{name} takes no parameter")
        return fixed[name]()
    raise ValueError(f"unknown graph family {name!r}; expected one of {', '.join(NAMED_FAMILIES)}")
