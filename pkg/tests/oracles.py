"""Slow, independent reference implementations used only by the tests.

Nothing here imports the package's algorithms: graphs are taken apart into
plain edge lists and adjacency sets first.
"""

import os
import shutil
from collections import Counter
from fractions import Fraction
from itertools import combinations
from math import factorial, gcd


def adjacency_sets(G):
    adj = {v: set() for v in range(G.n)}
    for u, v in G.edges():
        adj[u].add(v)
        adj[v].add(u)
    return adj


def count_components(adj, alive):
    alive = set(alive)
    seen = set()
    count = 0
    for s in alive:
        if s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u in alive and u not in seen:
                    seen.add(u)
                    stack.append(u)
    return count


def naive_vertex_connectivity(G):
    """Smallest |S| whose removal leaves >= 2 components; n-1 if no such S exists."""
    adj = adjacency_sets(G)
    verts = range(G.n)
    for size in range(G.n - 1):
        for S in combinations(verts, size):
            rest = [v for v in verts if v not in S]
            if len(rest) >= 2 and count_components(adj, rest) >= 2:
                return size
    return G.n - 1


def union_find_is_forest(G, S):
    """Acyclicity of G[S] by union-find over its edges."""
    S = set(S)
    parent = {v: v for v in S}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in G.edges():
        if u in S and v in S:
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
    return True


def component_edge_criterion(G, S):
    """Every component of G[S] has exactly (vertices - 1) edges."""
    S = set(S)
    adj = adjacency_sets(G)
    seen = set()
    for s in S:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for u in adj[v] & S:
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        edges = sum(1 for u, v in G.edges() if u in comp and v in comp)
        if edges != len(comp) - 1:
            return False
    return True


def naive_cuts(G, kind):
    """All subsets S (as sorted tuples) that are cuts of the given kind."""
    adj = adjacency_sets(G)
    edges = G.edges()
    found = []
    for size in range(G.n - 1):
        for S in combinations(range(G.n), size):
            Sset = set(S)
            if kind == "independent":
                if any(u in Sset and v in Sset for u, v in edges):
                    continue
            elif not union_find_is_forest(G, S):
                continue
            rest = [v for v in range(G.n) if v not in Sset]
            if count_components(adj, rest) >= 2:
                found.append(S)
    return found


# Counting isomorphism classes ---------------------------------------------


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


def burnside_graph_count(n):
    """Number of unlabeled graphs on n vertices, by averaging fixed points over S_n."""
    total = Fraction(0)
    for parts in _partitions(n):
        # Cycles induced on unordered pairs by a permutation of this cycle type.
        cycles = sum(k // 2 for k in parts)
        cycles += sum(gcd(a, b) for a, b in combinations(parts, 2))
        size = factorial(n)
        for k in parts:
            size //= k
        for mult in Counter(parts).values():
            size //= factorial(mult)
        total += size * 2 ** cycles
    total /= factorial(n)
    assert total.denominator == 1
    return int(total)


def connected_counts(totals):
    """Inverse Euler transform: connected-class counts from all-class counts.

    ``totals[k]`` is the number of graphs on k vertices (``totals[0] == 1``).
    """
    N = len(totals) - 1
    b = [0] * (N + 1)
    for n in range(1, N + 1):
        b[n] = n * totals[n] - sum(b[k] * totals[n - k] for k in range(1, n))
    conn = [0] * (N + 1)
    for n in range(1, N + 1):
        s = b[n] - sum(d * conn[d] for d in range(1, n) if n % d == 0)
        assert s % n == 0
        conn[n] = s // n
    return conn


def geng_path():
    path = os.environ.get("GENG") or shutil.which("geng") or shutil.which("nauty-geng")
    return path if path and os.access(path, os.X_OK) else None
