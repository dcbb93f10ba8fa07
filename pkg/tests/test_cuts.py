import pytest

from nbhdcycles.constructions import book_graph, complete_graph, cycle_graph
from nbhdcycles.cuts import (
    find_forest_cut,
    find_independent_cut,
    is_separator,
    validate_certificate,
)
from nbhdcycles.graph import build_graph

from conftest import all_graphs_up_to
from oracles import naive_cuts


def test_is_separator_examples():
    assert is_separator(cycle_graph(4), [0, 2])
    K4 = complete_graph(4)
    assert not any(is_separator(K4, S) for S in ([], [0], [1, 3], [0, 2]))
    assert is_separator(book_graph(3), [0, 1])
    with pytest.raises(ValueError):
        is_separator(K4, range(4))


def test_independent_cut_examples():
    cert = find_independent_cut(build_graph(3, [(0, 1), (1, 2)]))
    assert cert.cut == {1} and cert.component_count_after_removal == 2
    assert find_independent_cut(cycle_graph(4)).cut == {0, 2}
    for k in range(2, 7):
        assert find_independent_cut(book_graph(k)) is None


def test_forest_cut_examples():
    assert find_forest_cut(complete_graph(5)) is None
    cert = find_forest_cut(book_graph(2))
    assert cert.cut == {0, 1} and cert.kind == "forest"
    assert find_forest_cut(cycle_graph(5)).cut == {0, 2}


def test_disconnected_gives_empty_cut():
    G = build_graph(4, [(0, 1), (2, 3)])
    for finder in (find_independent_cut, find_forest_cut):
        cert = finder(G)
        assert len(cert.cut) == 0 and cert.component_count_after_removal == 2


def test_too_small():
    with pytest.raises(ValueError):
        find_independent_cut(build_graph(1, []))


def test_complete_against_subset_oracle_up_to_7():
    for G in all_graphs_up_to(7):
        if G.n < 2:
            continue
        for kind, finder in (("independent", find_independent_cut), ("forest", find_forest_cut)):
            cuts = naive_cuts(G, kind)
            cert = finder(G)
            if not cuts:
                assert cert is None, (G, kind)
                continue
            validate_certificate(G, cert)
            # smallest size, lexicographically first within it
            best = min(cuts, key=lambda S: (len(S), S))
            assert tuple(cert.cut.sorted()) == best, (G, kind)


def test_independent_cut_implies_forest_cut():
    for G in all_graphs_up_to(7):
        if G.n >= 2 and find_independent_cut(G) is not None:
            assert find_forest_cut(G) is not None
