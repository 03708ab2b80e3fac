"""Generators for the extremal families and the named fixture graphs.

Vertex numbering is fixed so tests are bit-reproducible: cycle vertices
come first in cycle order and a universal vertex, when present, is always
the last index.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadParametersError,
    KTooSmallError,
    NotACliqueError,
    UnknownFixtureError,
)
from .graph import Graph, build_graph


def cycle_diagonals_universal(k: int) -> Graph:
    """Cycle of order 2k, the k long diagonals, and one universal vertex.

    Order 2k+1 and size 5k, so the density is exactly 5(n-1)/2; every
    vertex cut must contain the universal vertex 2k.
    """
    if k < 2:
        raise KTooSmallError("needs k >= 2")
    n = 2 * k + 1
    edges = [(i, (i + 1) % (2 * k)) for i in range(2 * k)]
    edges += [(i, i + k) for i in range(k)]
    edges += [(i, 2 * k) for i in range(2 * k)]
    return build_graph(n, edges)


def k3_band_cycle(n: int, c: int) -> Graph:
    """K_{3,n-3} plus a cycle of length c inside the large partite set.

    Vertices 0,1,2 form the small side; the cycle runs through vertices
    3..3+c-1.  Requires n > 6 and 3 <= c < n-3, which keeps the graph
    3-connected with the small side as its unique minimal forest cut.
    """
    if n <= 6 or not 3 <= c < n - 3:
        raise BadParametersError(f"need n > 6 and 3 <= c < n-3, got n={n}, c={c}")
    edges = [(a, b) for a in range(3) for b in range(3, n)]
    edges += [(3 + i, 3 + (i + 1) % c) for i in range(c)]
    return build_graph(n, edges)


def conjecture2_family(k: int) -> Graph:
    """Cycle u_0..u_{3k+2}, chords u_{3i}u_{3i+2}, and a universal vertex.

    Order 3k+4 and size 7k+7; 3-connected with every vertex neighborhood
    containing a cycle, meeting the 7(n-1)/3 density exactly.
    """
    if k < 1:
        raise KTooSmallError("needs k >= 1")
    ring = 3 * k + 3
    n = ring + 1
    edges = [(i, (i + 1) % ring) for i in range(ring)]
    edges += [(3 * i, 3 * i + 2) for i in range(k + 1)]
    edges += [(i, ring) for i in range(ring)]
    return build_graph(n, edges)


@dataclass(frozen=True)
class GlueSpec:
    """Matched clique tuples (length 2, 3, or 4) in the two operands."""

    clique_a: tuple[int, ...]
    clique_b: tuple[int, ...]

    def __post_init__(self):
        if len(self.clique_a) != len(self.clique_b):
            raise BadParametersError("clique tuples must have equal length")
        if not 2 <= len(self.clique_a) <= 4:
            raise BadParametersError("gluing is along K2, K3, or K4 only")
        if len(set(self.clique_a)) != len(self.clique_a) or len(set(self.clique_b)) != len(self.clique_b):
            raise BadParametersError("clique tuples must not repeat vertices")


def _check_clique(g: Graph, tup: tuple[int, ...], label: str) -> None:
    for i, u in enumerate(tup):
        if not 0 <= u < g.order:
            raise NotACliqueError(f"{label}: vertex {u} outside graph")
        for v in tup[i + 1:]:
            if not g.has_edge(u, v):
                raise NotACliqueError(f"{label}: {u} and {v} are not adjacent")


def clique_glue(g1: Graph, g2: Graph, spec: GlueSpec) -> Graph:
    """Identify the two clique tuples pointwise; edges merge without duplicates."""
    _check_clique(g1, spec.clique_a, "clique_a")
    _check_clique(g2, spec.clique_b, "clique_b")
    t = len(spec.clique_a)
    remap = {}
    for a, b in zip(spec.clique_a, spec.clique_b):
        remap[b] = a
    nxt = g1.order
    for v in range(g2.order):
        if v not in remap:
            remap[v] = nxt
            nxt += 1
    edges = list(g1.edges())
    edges += [(remap[u], remap[v]) for u, v in g2.edges()]
    return build_graph(g1.order + g2.order - t, edges)


def _k4() -> Graph:
    return build_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


def _k33() -> Graph:
    return build_graph(6, [(a, b) for a in range(3) for b in range(3, 6)])


def _prism() -> Graph:
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
    return build_graph(6, edges)


def _octahedron() -> Graph:
    edges = [(u, v) for u in range(6) for v in range(u + 1, 6) if v - u != 3]
    return build_graph(6, edges)


_ICOSAHEDRON_EDGES = (
    (0, 2), (0, 4), (0, 6), (0, 8), (0, 9), (1, 3), (1, 4), (1, 6), (1, 10),
    (1, 11), (2, 5), (2, 7), (2, 8), (2, 9), (3, 5), (3, 7), (3, 10), (3, 11),
    (4, 6), (4, 8), (4, 10), (5, 7), (5, 8), (5, 10), (6, 9), (6, 11), (7, 9),
    (7, 11), (8, 10), (9, 11),
)


def _icosahedron() -> Graph:
    return build_graph(12, list(_ICOSAHEDRON_EDGES))


def _wheel5() -> Graph:
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)] + [(i, 4) for i in range(4)]
    return build_graph(5, edges)


# The four sparse 3-connected graphs on 6 and 7 vertices, as edge lists.
_FIG1_A = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 4), (2, 5)]
_FIG1_B = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 3), (1, 5), (5, 2), (4, 5)]
_FIG1_C = [(0, 1), (1, 2), (2, 3), (3, 0), (2, 5), (5, 3), (2, 6), (6, 1), (0, 4), (4, 5), (4, 6)]
_FIG1_D = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 6), (6, 4), (3, 6), (6, 5), (5, 2), (1, 5)]

_FIXTURES = {
    "k4": _k4,
    "k33": _k33,
    "prism": _prism,
    "octahedron": _octahedron,
    "icosahedron": _icosahedron,
    "wheel5": _wheel5,
    "fig1_a": lambda: build_graph(6, _FIG1_A),
    "fig1_b": lambda: build_graph(6, _FIG1_B),
    "fig1_c": lambda: build_graph(7, _FIG1_C),
    "fig1_d": lambda: build_graph(7, _FIG1_D),
}

FIXTURE_NAMES = tuple(sorted(_FIXTURES))


def fixture(name: str) -> Graph:
    """Return a named fixture graph (see FIXTURE_NAMES)."""
    try:
        maker = _FIXTURES[name]
    except KeyError:
        raise UnknownFixtureError(f"unknown fixture {name!r}; choose from {FIXTURE_NAMES}") from None
    return maker()
