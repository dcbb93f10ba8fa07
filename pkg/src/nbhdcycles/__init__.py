"""Small-graph tools for independent cuts, forest cuts and 3-connected graphs
whose every vertex neighborhood contains a cycle."""

__version__ = "0.1.0"

from .graph import (
    Graph,
    Graph6Error,
    VertexSet,
    build_graph,
    encode_graph6,
    induced_subgraph,
    neighborhood,
    parse_graph6,
    remove_vertices,
)
from .connectivity import components, is_k_connected, vertex_connectivity
from .neighborhoods import (
    all_neighborhoods_cyclic,
    degree_partition,
    induces_forest,
    is_independent_set,
    neighborhood_has_cycle,
)
from .cuts import CutCertificate, find_forest_cut, find_independent_cut, is_separator
from .constructions import book_graph, k4_substitution, named_graph, prism
from .verifier import BoundReport, compute_bound_report, verify_theorem1
from .enumeration import EnumerationConstraints, canonical_form, enumerate_graphs, ingest_graph6_stream
from .harness import SearchReport, run_chen_yu_check, run_extremal_search, run_forest_cut_check

__all__ = [
    "Graph", "Graph6Error", "VertexSet", "build_graph", "encode_graph6", "induced_subgraph",
    "neighborhood", "parse_graph6", "remove_vertices",
    "components", "is_k_connected", "vertex_connectivity",
    "all_neighborhoods_cyclic", "degree_partition", "induces_forest", "is_independent_set",
    "neighborhood_has_cycle",
    "CutCertificate", "find_forest_cut", "find_independent_cut", "is_separator",
    "book_graph", "k4_substitution", "named_graph", "prism",
    "BoundReport", "compute_bound_report", "verify_theorem1",
    "EnumerationConstraints", "canonical_form", "enumerate_graphs", "ingest_graph6_stream",
    "SearchReport", "run_chen_yu_check", "run_extremal_search", "run_forest_cut_check",
]
