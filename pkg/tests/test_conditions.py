from itertools import combinations

import pytest
from hypothesis import given

from conftest import graphs
from hamlab.conditions import (
    BULL,
    CLAW,
    DIAMOND,
    NET,
    P6,
    PATTERNS,
    WOUNDED,
    Z1,
    Z2,
    dirac_holds,
    find_light_copy,
    is_claw_free,
    is_claw_o_heavy,
    is_H_f_heavy,
    is_H_free,
    is_H_o_heavy,
    ore_holds,
)
from hamlab.families import brousek, g1
from hamlab.graph import Graph, GraphError, complete_graph, cycle_graph, enumerate_induced, path_graph, star_graph
from hamlab.hamilton import find_hamiltonian_cycle


def test_pattern_shapes_are_locked():
    # order, size, sorted degree sequence of the small named graphs
    shapes = {
        "Z1": (4, 4, [1, 2, 2, 3]),
        "Z2": (5, 5, [1, 2, 2, 2, 3]),
        "B": (5, 5, [1, 1, 2, 3, 3]),
        "N": (6, 6, [1, 1, 1, 3, 3, 3]),
        "W": (6, 6, [1, 1, 2, 2, 3, 3]),
    }
    for name, (n, m, degs) in shapes.items():
        h = PATTERNS[name]
        assert (h.n, h.m, sorted(h.degrees)) == (n, m, degs), name
    assert PATTERNS["B"] is BULL and PATTERNS["N"] is NET and PATTERNS["W"] is WOUNDED
    assert PATTERNS["Z1"] is Z1 and PATTERNS["Z2"] is Z2


def test_named_patterns_contain_a_triangle_and_are_claw_free():
    for h in (Z1, Z2, BULL, NET, WOUNDED):
        assert not is_H_free(h, complete_graph(3))
        assert is_claw_free(h)


def test_free_examples():
    assert is_H_free(complete_graph(4), CLAW)
    assert not is_H_free(star_graph(3), CLAW)
    assert not is_H_free(brousek((3, 3, 3)).graph, P6)


def test_pattern_must_be_connected():
    with pytest.raises(GraphError):
        is_H_free(cycle_graph(5), Graph(2))
    with pytest.raises(GraphError):
        is_H_o_heavy(cycle_graph(5), Graph(1))


def test_o_heavy_examples():
    # the claw K_{1,3} itself: leaves have degree sum 2 < 4
    assert not is_claw_o_heavy(star_graph(3))
    # g1(7) has claws centred in the clique, each with a heavy pair of leaves
    w = g1(7)
    assert not is_claw_free(w.graph)
    assert is_claw_o_heavy(w.graph)


def test_light_copy_is_light():
    g = star_graph(3)
    e = find_light_copy(g, CLAW)
    assert e is not None and e[0] == 0


def test_f_heavy_uses_distances_inside_the_copy():
    # C5 has induced P3s whose ends are at distance 2 within the copy
    g = cycle_graph(5)
    assert not is_H_f_heavy(g, path_graph(3))
    assert is_H_f_heavy(complete_graph(5), path_graph(3))


def test_k4_satisfies_everything():
    g = complete_graph(4)
    for h in (CLAW, P6, DIAMOND, Z1):
        assert is_H_free(g, h)
        assert is_H_o_heavy(g, h)
        assert is_H_f_heavy(g, h)
    assert dirac_holds(g) and ore_holds(g)


def test_brousek_flags():
    g = brousek((3, 3, 3)).graph
    assert is_claw_free(g)
    assert not is_H_free(g, P6)
    assert not ore_holds(g)


@given(graphs(max_n=8))
def test_free_implies_heavy(g):
    for h in (CLAW, path_graph(4)):
        if is_H_free(g, h):
            assert is_H_o_heavy(g, h)
            assert is_H_f_heavy(g, h)


@given(graphs(max_n=8))
def test_o_heavy_matches_definition(g):
    non_edges = [(a, b) for a, b in combinations(range(4), 2) if not CLAW.has_edge(a, b)]
    want = all(
        any(g.degree(e[a]) + g.degree(e[b]) >= g.n for a, b in non_edges) for e in enumerate_induced(g, CLAW)
    )
    assert is_claw_o_heavy(g) == want


@given(graphs(max_n=8))
def test_dirac_implies_ore(g):
    if dirac_holds(g):
        assert ore_holds(g)


@given(graphs(min_n=3, max_n=8))
def test_ore_graphs_are_hamiltonian(g):
    if ore_holds(g):
        assert find_hamiltonian_cycle(g).status == "found"
