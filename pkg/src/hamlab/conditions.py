"""Forbidden-subgraph and heavy-subgraph predicates, plus the small pattern library."""

from __future__ import annotations

from itertools import combinations

from .graph import (
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    distances_from,
    enumerate_induced,
    is_connected,
    path_graph,
    star_graph,
)

CLAW = star_graph(3)
P3 = path_graph(3)
P4 = path_graph(4)
P5 = path_graph(5)
P6 = path_graph(6)
C3 = cycle_graph(3)
DIAMOND = complete_graph(4).remove_edges([(2, 3)])

# Triangle 0-1-2 with pendant paths hanging off it, transcribed from the drawings:
# Z1 = one pendant edge (the paw), Z2 = one pendant path of two edges,
# B (bull) = pendant edges at two triangle vertices, N (net) = at all three,
# W (wounded) = a pendant edge at one vertex and a pendant two-edge path at another.
Z1 = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
Z2 = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
BULL = Graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])
NET = Graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
WOUNDED = Graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (4, 5)])

PATTERNS: dict[str, Graph] = {
    "claw": CLAW,
    "P3": P3,
    "P4": P4,
    "P5": P5,
    "P6": P6,
    "C3": C3,
    "Z1": Z1,
    "Z2": Z2,
    "B": BULL,
    "N": NET,
    "W": WOUNDED,
    "diamond": DIAMOND,
}


def _check_pattern(h: Graph) -> None:
    if h.n < 2:
        raise GraphError("pattern must have at least 2 vertices")
    if not is_connected(h):
        raise GraphError("pattern must be connected")


def is_H_free(g: Graph, h: Graph) -> bool:
    _check_pattern(h)
    return next(enumerate_induced(g, h), None) is None


def find_light_copy(g: Graph, h: Graph):
    """First induced copy of ``h`` with no nonadjacent heavy pair, or ``None``."""
    _check_pattern(h)
    pairs = [(a, b) for a, b in combinations(range(h.n), 2) if not h.has_edge(a, b)]
    n = g.n
    deg = g.degrees
    for e in enumerate_induced(g, h):
        if not any(deg[e[a]] + deg[e[b]] >= n for a, b in pairs):
            return e
    return None


def is_H_o_heavy(g: Graph, h: Graph) -> bool:
    """Every induced copy of ``h`` has two nonadjacent vertices with degree sum >= n."""
    return find_light_copy(g, h) is None


def _distance_two_pairs(h: Graph) -> list[tuple[int, int]]:
    out = []
    for a in range(h.n):
        dist = distances_from(h, a)
        out.extend((a, b) for b in range(a + 1, h.n) if dist[b] == 2)
    return out


def is_H_f_heavy(g: Graph, h: Graph) -> bool:
    """Every pair at distance 2 inside every induced copy has an endpoint of degree >= n/2.

    Distances are taken inside the copy, not in ``g``.
    """
    _check_pattern(h)
    pairs = _distance_two_pairs(h)
    n = g.n
    deg = g.degrees
    for e in enumerate_induced(g, h):
        for a, b in pairs:
            if 2 * max(deg[e[a]], deg[e[b]]) < n:
                return False
    return True


def dirac_holds(g: Graph) -> bool:
    return all(2 * d >= g.n for d in g.degrees)


def ore_holds(g: Graph) -> bool:
    deg = g.degrees
    return all(
        deg[u] + deg[v] >= g.n
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    )


def is_claw_free(g: Graph) -> bool:
    return is_H_free(g, CLAW)


def is_claw_o_heavy(g: Graph) -> bool:
    return is_H_o_heavy(g, CLAW)
