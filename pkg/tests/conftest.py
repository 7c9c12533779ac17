"""Shared fixtures: hand-built reference graphs and independent checkers.

Reference graphs are constructed directly from edge lists here, independent
of the package's generators, so generator tests have something to agree with.
"""

from __future__ import annotations

import itertools
from collections import deque

import pytest

from eds_audit.graph import Graph


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def hypercube(d: int) -> Graph:
    n = 1 << d
    return Graph.from_edges(
        n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)])


PETERSEN_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),        # outer 5-cycle
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),        # spokes
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),        # inner pentagram
]


def petersen() -> Graph:
    return Graph.from_edges(10, PETERSEN_EDGES)


def two_triangles() -> Graph:
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Independent BFS oracle for distance-based assertions."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if dist[u] == -1:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def eds_by_definition(g: Graph, members: frozenset[int]) -> bool:
    """Literal definition check, independent of the package's verifier:
    independent set, and every outside vertex has exactly one member neighbor."""
    for v in members:
        if g.adj[v] & members:
            return False
    for v in range(g.n):
        if v not in members and len(g.adj[v] & members) != 1:
            return False
    return True


def all_eds_bruteforce(g: Graph) -> list[frozenset[int]]:
    """Enumerate every efficient dominating set by testing all subsets."""
    assert g.n <= 16, "brute force oracle is for tiny graphs"
    out = []
    for k in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            s = frozenset(combo)
            if eds_by_definition(g, s):
                out.append(s)
    return sorted(out, key=lambda s: tuple(sorted(s)))


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def c6():
    return cycle(6)


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def q3():
    return hypercube(3)


@pytest.fixture
def pet():
    return petersen()
