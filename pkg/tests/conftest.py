import random

import pytest

from forestcut.graph import Graph, build_graph, is_connected


def _random_connected_graph(n: int, seed: int) -> Graph:
    """Deterministic connected graph: random spanning tree plus extra edges."""
    rng = random.Random(seed)
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    extra = rng.randrange(0, n * (n - 1) // 2)
    for _ in range(extra):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    g = build_graph(n, sorted(edges))
    assert is_connected(g)
    return g


@pytest.fixture(scope="session")
def random_connected_graph():
    return _random_connected_graph


@pytest.fixture(scope="session")
def random_corpus():
    """The 200 seeded connected graphs on up to 12 vertices used by the oracles."""
    return [_random_connected_graph(4 + (i % 9), 1000 + i) for i in range(200)]


@pytest.fixture(scope="session")
def stacked_corpus():
    """20 seeded stacked triangulations with orders cycling through 4..10."""
    from forestcut.planar import random_stacked_triangulation

    return [random_stacked_triangulation(4 + (i % 7), 40 + i) for i in range(20)]
