import random

import pytest
from hypothesis import given, settings

from conftest import graphs
from hamlab.families import brousek, brousek_specs, g1, g2, g3
from hamlab.graph import Graph, complete_bipartite, complete_graph, cycle_graph, petersen_graph
from hamlab.hamilton import (
    Cycle,
    CutWitness,
    ExhaustedSearch,
    ThreeChannelWitness,
    certify_three_channel,
    detect_three_channel,
    find_cut_witness,
    find_hamiltonian_cycle,
    hamiltonian_by_permutations,
    is_hamiltonian,
    verify_certificate,
)


def test_cycle_found_on_c5():
    res = find_hamiltonian_cycle(cycle_graph(5))
    assert res.status == "found"
    assert verify_certificate(cycle_graph(5), Cycle(res.cycle))
    assert verify_certificate(cycle_graph(5), Cycle((0, 1, 2, 3, 4)))


def test_petersen_and_brousek_exhausted():
    for g in (petersen_graph(), brousek((3, 3, 3)).graph):
        res = find_hamiltonian_cycle(g)
        assert res.status == "none"
        assert verify_certificate(g, ExhaustedSearch(res.nodes))


def test_budget_gives_inconclusive_not_no():
    res = find_hamiltonian_cycle(petersen_graph(), budget=5)
    assert res.status == "inconclusive"
    dec = is_hamiltonian(petersen_graph(), budget=5)
    assert dec.inconclusive and dec.certificate is None


def test_bad_cycles_rejected():
    w = g1(7)
    fake = Cycle(tuple(range(15)))
    check = verify_certificate(w.graph, fake)
    assert not check and "15" in check.reason
    assert not verify_certificate(cycle_graph(5), Cycle((0, 2, 1, 3, 4)))
    assert not verify_certificate(cycle_graph(5), Cycle((0, 1, 2, 3, 3)))


def test_cut_witness_examples():
    g = complete_bipartite(2, 3)
    assert find_cut_witness(g) == CutWitness((0, 1))
    assert verify_certificate(g, CutWitness((0, 1)))
    assert not verify_certificate(g, CutWitness((2,)))
    assert find_cut_witness(cycle_graph(6), 5) is None
    assert find_cut_witness(brousek((3, 3, 3)).graph, 5) is None
    with pytest.raises(ValueError):
        find_cut_witness(cycle_graph(6), 6)


def test_disconnected_graph_has_empty_separator():
    g = Graph(2)
    assert find_cut_witness(g) == CutWitness(())
    assert verify_certificate(g, CutWitness(()))
    assert not verify_certificate(complete_graph(3), CutWitness(()))
    dec = is_hamiltonian(Graph(4, [(0, 1), (2, 3)]))
    assert dec.hamiltonian is False and dec.certificate == CutWitness(())


def test_three_channel_on_families():
    for w in (g1(7), g3(8, 31), g2(6, 12, 12, 23)):
        r = w.roles
        cert = certify_three_channel(w.graph, r["apex"], r["channels"], r["ports"])
        assert isinstance(cert, ThreeChannelWitness), w.family
        assert verify_certificate(w.graph, cert)


def test_three_channel_rejects_bad_roles():
    assert certify_three_channel(cycle_graph(6), (0, 1, 2), ((3,), (4,), (5,)), (3, 4, 5)) is None
    w = g1(7)
    r = w.roles
    # drop a channel/port pairing so a boundary check fails
    assert certify_three_channel(w.graph, r["apex"], r["channels"], r["ports"][::-1]) is None
    assert detect_three_channel(cycle_graph(6)) is None


def test_three_channel_agrees_with_search_on_small_g2():
    # structure only: parameters far below the degree bounds, but the graph stays small enough to exhaust
    for q, r, s, t in ((1, 1, 1, 1), (2, 1, 2, 1), (2, 2, 1, 2)):
        w = g2(q, r, s, t)
        rr = w.roles
        assert certify_three_channel(w.graph, rr["apex"], rr["channels"], rr["ports"]) is not None
        assert find_hamiltonian_cycle(w.graph).status == "none"


def test_g1_non_hamiltonian_by_search_for_small_r():
    for r in range(1, 13):
        w = g1(r)
        assert find_hamiltonian_cycle(w.graph).status == "none", r


def test_brousek_family_non_hamiltonian():
    for spec in brousek_specs(13):
        g = brousek(spec).graph
        assert find_hamiltonian_cycle(g).status == "none", spec
        dec = is_hamiltonian(g)
        assert dec.hamiltonian is False and verify_certificate(g, dec.certificate)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_agrees_with_permutation_oracle(g):
    truth = hamiltonian_by_permutations(g)
    dec = is_hamiltonian(g)
    assert dec.hamiltonian == truth
    assert verify_certificate(g, dec.certificate)
    assert (find_hamiltonian_cycle(g).status == "found") == truth


def with_twins(g: Graph, rnd: random.Random) -> Graph:
    # copy random vertices, each copy adjacent to the original's neighbours (and maybe to it)
    rows = list(g.adj)
    while len(rows) < 9:
        v = rnd.randrange(len(rows))
        new = len(rows)
        rows.append(rows[v])
        for u in range(new):
            if rows[v] >> u & 1:
                rows[u] |= 1 << new
        if rnd.random() < 0.5:
            rows[v] |= 1 << new
            rows[new] |= 1 << v
    return Graph.from_rows(rows)


def test_twin_rich_graphs_agree_with_oracle():
    rnd = random.Random(11)
    for _ in range(300):
        n = rnd.randint(3, 6)
        base = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < 0.5])
        g = with_twins(base, rnd)
        assert (find_hamiltonian_cycle(g).status == "found") == hamiltonian_by_permutations(g)


def test_adding_edges_keeps_hamiltonicity():
    rnd = random.Random(7)
    checked = 0
    while checked < 100:
        n = rnd.randint(5, 10)
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < 0.45])
        missing = [(u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)]
        if not missing:
            continue
        h = g.add_edges([rnd.choice(missing)])
        if find_hamiltonian_cycle(g).status == "found":
            assert find_hamiltonian_cycle(h).status == "found"
        checked += 1


def test_decision_serialises():
    d = is_hamiltonian(cycle_graph(5)).to_dict()
    assert d["hamiltonian"] is True and d["certificate"]["kind"] == "cycle"
