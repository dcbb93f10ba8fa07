"""Step-by-step checking of the 15n/8 edge bound on a concrete graph.

The bound argument runs: every vertex has degree >= 3; each degree-3 vertex
sees a triangle; degree-3 vertices are pairwise non-adjacent; degree-3 twins
can be deleted one at a time; afterwards every vertex of degree >= 4 has at
least three neighbors of degree >= 4. Summing the two degree-sum inequalities

    2m >= 3n + 3|V3|        and        2m >= 4n - |V3|

(the second one three times) gives 8m >= 15n. Each step below returns a
witness on failure instead of raising, so a report can say exactly which link
breaks on a given graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .connectivity import is_k_connected
from .cuts import is_separator
from .graph import Graph, VertexSet, iter_bits, remove_vertices
from .neighborhoods import all_neighborhoods_cyclic, degree_partition, induced_edge_count

__all__ = [
    "BoundReport",
    "StepFailure",
    "ProofPreconditionError",
    "HypothesisError",
    "check_v3_independent",
    "check_v3_triangles",
    "two_separator_witness",
    "find_v3_twins",
    "twin_reduce",
    "check_big_vertex_bound",
    "compute_bound_report",
    "verify_theorem1",
]

MIN_DEGREE = "min-degree<3"
NON_TRIANGLE = "non-triangle V3 neighborhood"
V3_NOT_INDEPENDENT = "V3 not independent"
TWINS = "twins present"
BIG_VERTEX = "big-vertex bound fails"
SMALL_BASE = "reduced graph has n<5"
REDUCTION_CONNECTIVITY = "reduction broke 3-connectivity"
REDUCTION_CYCLES = "reduction broke neighborhood cycles"


class ProofPreconditionError(ValueError):
    """A proof step was invoked on a graph that does not meet its preconditions."""

    def __init__(self, precondition: str, detail: str = ""):
        self.precondition = precondition
        super().__init__(f"precondition {precondition!r} fails" + (f": {detail}" if detail else ""))


class HypothesisError(ValueError):
    """The graph violates a hypothesis of the bound (3-connected, cyclic neighborhoods)."""

    def __init__(self, hypothesis: str):
        self.hypothesis = hypothesis
        super().__init__(f"hypothesis violated: {hypothesis}")


@dataclass(frozen=True)
class StepFailure:
    step: str
    witness: object = None

    def to_record(self) -> dict:
        witness = self.witness
        if isinstance(witness, tuple):
            witness = list(witness)
        return {"step": self.step, "witness": witness}


@dataclass
class BoundReport:
    n: int
    m: int
    v3_size: int
    lhs_handshake: int
    rhs_eq1: int
    rhs_eq2: int
    eq1_holds: bool
    eq2_holds: bool
    final_lhs: int
    final_rhs: int
    bound_holds: bool
    step_failures: list[StepFailure] = field(default_factory=list)
    # The graph the bound was asked about, before any twin deletions.
    original_n: int | None = None
    original_m: int | None = None
    twins_removed: list[int] = field(default_factory=list)

    @property
    def original_bound_holds(self) -> bool:
        return 8 * self.original_m >= 15 * self.original_n

    def failed_steps(self) -> list[str]:
        return [f.step for f in self.step_failures]

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "v3_size": self.v3_size,
            "lhs_handshake": self.lhs_handshake,
            "rhs_eq1": self.rhs_eq1,
            "rhs_eq2": self.rhs_eq2,
            "eq1_holds": self.eq1_holds,
            "eq2_holds": self.eq2_holds,
            "final_lhs": self.final_lhs,
            "final_rhs": self.final_rhs,
            "bound_holds": self.bound_holds,
            "original_n": self.original_n,
            "original_m": self.original_m,
            "original_bound_holds": self.original_bound_holds,
            "twins_removed": list(self.twins_removed),
            "step_failures": [f.to_record() for f in self.step_failures],
        }


def _v3_mask(G: Graph) -> int:
    return degree_partition(G).v3.mask


def check_v3_independent(G: Graph) -> tuple[int, int] | None:
    """None if no edge joins two degree-3 vertices, else the first such edge."""
    part = degree_partition(G)
    if not part.valid:
        raise ProofPreconditionError(MIN_DEGREE, f"minimum degree is {part.min_degree}")
    v3 = part.v3.mask
    for u in iter_bits(v3):
        later = G.rows[u] & v3 & ~((1 << (u + 1)) - 1)
        if later:
            return u, (later & -later).bit_length() - 1
    return None


def check_v3_triangles(G: Graph) -> int | None:
    """None if every degree-3 vertex has a triangle as neighborhood, else the first that does not."""
    for v in iter_bits(_v3_mask(G)):
        if induced_edge_count(G, G.rows[v]) != 3:
            return v
    return None


def two_separator_witness(G: Graph, u: int, v: int) -> VertexSet:
    """The common neighborhood of two adjacent degree-3 vertices, which separates them off."""
    for x in (u, v):
        if not 0 <= x < G.n:
            raise ValueError(f"vertex {x} out of range for n={G.n}")
    if not G.adjacent(u, v):
        raise ProofPreconditionError("u and v adjacent", f"{u} and {v} are not adjacent")
    for x in (u, v):
        if G.degree(x) != 3:
            raise ProofPreconditionError("degree 3", f"vertex {x} has degree {G.degree(x)}")
        if induced_edge_count(G, G.rows[x]) != 3:
            raise ProofPreconditionError("triangle neighborhood", f"N({x}) does not induce a triangle")
    if G.n < 5:
        raise ProofPreconditionError("n >= 5", f"n={G.n}: removing the common neighbors leaves only u and v")
    common = VertexSet(G.rows[u] & G.rows[v], G.n)
    if len(common) != 2 or not is_separator(G, common):
        raise AssertionError(f"{common} should be a 2-separator")
    return common


def find_v3_twins(G: Graph) -> tuple[int, int] | None:
    """Lexicographically first pair of degree-3 vertices with equal neighborhoods."""
    v3 = list(iter_bits(_v3_mask(G)))
    for i, u in enumerate(v3):
        for v in v3[i + 1:]:
            if G.rows[u] == G.rows[v]:
                return u, v
    return None


def _twin_reduce_steps(G: Graph):
    labels = list(range(G.n))
    while True:
        twins = find_v3_twins(G)
        if twins is None:
            return
        u = twins[0]
        G = remove_vertices(G, [u])
        removed = labels.pop(u)
        yield G, removed


def twin_reduce(G: Graph) -> tuple[Graph, list[int]]:
    """Delete the smaller vertex of the first degree-3 twin pair until none remain.

    Removed vertices are reported in the labels of the input graph.
    """
    removed = []
    for G, vertex in _twin_reduce_steps(G):
        removed.append(vertex)
    return G, removed


def _big_vertex_preconditions(G: Graph) -> None:
    part = degree_partition(G)
    if not part.valid:
        raise ProofPreconditionError(MIN_DEGREE, f"minimum degree is {part.min_degree}")
    v = check_v3_triangles(G)
    if v is not None:
        raise ProofPreconditionError(NON_TRIANGLE, f"vertex {v}")
    edge = check_v3_independent(G)
    if edge is not None:
        raise ProofPreconditionError(V3_NOT_INDEPENDENT, f"edge {edge}")
    twins = find_v3_twins(G)
    if twins is not None:
        raise ProofPreconditionError(TWINS, f"vertices {twins}")


def check_big_vertex_bound(G: Graph) -> int | None:
    """None if each degree>=4 vertex has >= 3 neighbors of degree >= 4, else the first violator."""
    _big_vertex_preconditions(G)
    part = degree_partition(G)
    v3 = part.v3.mask
    for v in part.v_ge4:
        if (G.rows[v] & ~v3).bit_count() < 3:
            return v
    return None


def _step_failures(G: Graph) -> list[StepFailure]:
    part = degree_partition(G)
    if not part.valid:
        low = next(v for v in range(G.n) if G.degree(v) < 3)
        return [StepFailure(MIN_DEGREE, low)]
    failures = []
    v = check_v3_triangles(G)
    if v is not None:
        failures.append(StepFailure(NON_TRIANGLE, v))
    edge = check_v3_independent(G)
    if edge is not None:
        failures.append(StepFailure(V3_NOT_INDEPENDENT, edge))
    twins = find_v3_twins(G)
    if twins is not None:
        failures.append(StepFailure(TWINS, twins))
    if not failures:
        v = check_big_vertex_bound(G)
        if v is not None:
            failures.append(StepFailure(BIG_VERTEX, v))
    return failures


def compute_bound_report(G: Graph) -> BoundReport:
    n, m = G.n, G.m
    v3 = _v3_mask(G).bit_count()
    rhs1 = 3 * n + 3 * v3
    rhs2 = 4 * n - v3
    return BoundReport(
        n=n,
        m=m,
        v3_size=v3,
        lhs_handshake=2 * m,
        rhs_eq1=rhs1,
        rhs_eq2=rhs2,
        eq1_holds=2 * m >= rhs1,
        eq2_holds=2 * m >= rhs2,
        final_lhs=8 * m,
        final_rhs=15 * n,
        bound_holds=8 * m >= 15 * n,
        step_failures=_step_failures(G),
        original_n=n,
        original_m=m,
    )


def verify_theorem1(G: Graph) -> BoundReport:
    """Run the whole argument on ``G``: hypotheses, twin deletion, then every step.

    Raises HypothesisError if ``G`` is not 3-connected or some neighborhood
    is acyclic. Everything else, including failures of the argument itself,
    ends up in the report's ``step_failures``.
    """
    if not is_k_connected(G, 3):
        raise HypothesisError("not 3-connected")
    if not all_neighborhoods_cyclic(G):
        raise HypothesisError("some neighborhood is acyclic")
    reduction_failures = []
    removed = []
    reduced = G
    for reduced, vertex in _twin_reduce_steps(G):
        removed.append(vertex)
        if not is_k_connected(reduced, 3):
            reduction_failures.append(StepFailure(REDUCTION_CONNECTIVITY, vertex))
        if not all_neighborhoods_cyclic(reduced):
            reduction_failures.append(StepFailure(REDUCTION_CYCLES, vertex))
    report = compute_bound_report(reduced)
    if reduced.n < 5:
        report.step_failures.insert(0, StepFailure(SMALL_BASE, reduced.n))
    report.step_failures[:0] = reduction_failures
    report.original_n = G.n
    report.original_m = G.m
    report.twins_removed = removed
    return report
