from functools import lru_cache

import pytest

from nbhdcycles.enumeration import EnumerationConstraints, enumerate_graphs


@lru_cache(maxsize=None)
def graphs_on(n, **kw):
    return tuple(enumerate_graphs(EnumerationConstraints(n, **kw)))


@lru_cache(maxsize=None)
def all_graphs_up_to(n_max):
    return tuple(G for n in range(n_max + 1) for G in graphs_on(n))


@pytest.fixture(scope="session")
def small_graphs():
    """Every isomorphism class on at most 7 vertices."""
    return all_graphs_up_to(7)
