import pytest

from nbhdcycles.connectivity import components, is_k_connected, vertex_connectivity
from nbhdcycles.constructions import book_graph, complete_graph, cycle_graph, prism
from nbhdcycles.graph import build_graph, remove_vertices

from conftest import all_graphs_up_to, graphs_on
from oracles import naive_vertex_connectivity


def test_components_examples():
    assert components(complete_graph(4)).count == 1
    two_k2 = build_graph(4, [(0, 1), (2, 3)])
    lab = components(two_k2)
    assert lab.count == 2 and lab.labels == (0, 0, 1, 1)
    assert components(remove_vertices(book_graph(2), [0, 1])).count == 2
    assert components(build_graph(0, [])).count == 0


def test_component_ids_follow_smallest_member():
    G = build_graph(5, [(1, 4), (0, 2)])
    assert components(G).labels == (0, 1, 0, 2, 1)


@pytest.mark.parametrize("G, kappa", [
    (complete_graph(4), 3),
    (cycle_graph(5), 2),
    (book_graph(3), 2),
    (complete_graph(1), 0),
    (build_graph(3, [(0, 1)]), 0),
    (prism(3), 3),
])
def test_vertex_connectivity_examples(G, kappa):
    assert vertex_connectivity(G) == kappa
    assert naive_vertex_connectivity(G) == kappa


def test_is_k_connected_examples():
    assert is_k_connected(complete_graph(4), 3)
    assert not is_k_connected(complete_graph(3), 3)  # needs more than k vertices
    assert is_k_connected(prism(3), 3)
    assert not is_k_connected(book_graph(4), 3)
    with pytest.raises(ValueError):
        is_k_connected(prism(3), -1)


def test_oracle_equivalence_up_to_7():
    for G in all_graphs_up_to(7):
        if G.n == 0:
            continue
        assert vertex_connectivity(G) == naive_vertex_connectivity(G), G


def test_monotone_in_k():
    for G in all_graphs_up_to(7):
        for k in range(1, 8):
            if is_k_connected(G, k):
                assert is_k_connected(G, k - 1)


def test_bounded_by_min_degree_up_to_8():
    for n in range(2, 9):
        for G in graphs_on(n, connected_only=True):
            if not G.is_complete():
                assert vertex_connectivity(G) <= G.min_degree()
