import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from hamlab.conditions import P6, is_H_f_heavy, is_H_free
from hamlab.families import brousek, g1
from hamlab.gamma import (
    EPSILON,
    FULL,
    GAMMA1,
    GAMMA2,
    GAMMA3,
    SIGMA,
    GammaPattern,
    enumerate_symmetrical,
    essentially_same,
    find_bad_p6,
    gamma_constants,
    gamma_heavy_from_classes,
    guarantee_split,
    heavy_signature,
    involution_orbits,
    is_p6_gamma_heavy,
    is_symmetrical,
    p6_signature_classes,
    symmetric_image,
    theorem9_guarantees,
)
from hamlab.graph import GraphError, complete_graph, cycle_graph, induced_paths, path_graph

patterns = st.integers(0, FULL.mask).map(GammaPattern)


def test_constants():
    g1_, g2_, g3_ = gamma_constants()
    assert (len(g1_), len(g2_), len(g3_)) == (9, 10, 7)
    assert g1_ == GammaPattern.from_edges((i, j) for i in (1, 2, 3) for j in (4, 5, 6))
    assert str(g2_) == "11,12,14,15,16,25,26,36,56,66"
    assert str(g3_) == "13,14,15,25,26,36,46"
    for tok, owners in (("46", {3}), ("13", {3}), ("11", {2}), ("66", {2}), ("14", {1, 2, 3})):
        assert {k for k, gm in enumerate((g1_, g2_, g3_), 1) if tok in gm} == owners
    assert all(gm.is_symmetrical() for gm in (g1_, g2_, g3_))


def test_parse_and_format():
    gm = GammaPattern.parse("31, 64")
    assert gm.edges == [(1, 3), (4, 6)]
    assert str(gm) == "13,46"
    assert str(EPSILON) == "eps"
    assert GammaPattern.parse("22").loops == [2]
    for bad in ("1", "17", "ab", "123"):
        with pytest.raises(ValueError):
            GammaPattern.parse(bad)


def test_mirror():
    assert symmetric_image(GammaPattern.parse("12")) == GammaPattern.parse("56")
    assert symmetric_image(GammaPattern.parse("11,25")) == GammaPattern.parse("66,25")
    assert is_symmetrical(GammaPattern.parse("12,56"))
    assert not is_symmetrical(GammaPattern.parse("12"))
    assert SIGMA.is_symmetrical() and len(SIGMA) == 10


@given(patterns)
def test_mirror_is_an_involution(gm):
    assert gm.symmetric_image().symmetric_image() == gm
    assert len(gm.symmetric_image()) == len(gm)
    assert (gm | gm.symmetric_image()).is_symmetrical()


def test_enumeration():
    pats = list(enumerate_symmetrical())
    assert len(pats) == 4096 == 2 ** len(involution_orbits())
    assert len(set(pats)) == 4096
    assert all(p.is_symmetrical() for p in pats)
    assert len(involution_orbits()) == 12


def test_enumeration_matches_brute_force():
    fixed = [m for m in range(FULL.mask + 1) if GammaPattern(m).is_symmetrical()]
    assert sorted(p.mask for p in enumerate_symmetrical()) == fixed


def test_guarantee_split_is_frozen():
    assert guarantee_split() == (120, 3976)
    assert guarantee_split() == guarantee_split()


def test_guarantee_examples():
    assert theorem9_guarantees(GammaPattern.parse("13,46"))
    assert not theorem9_guarantees(GammaPattern.parse("12,13,46,56"))
    assert theorem9_guarantees(EPSILON)
    with pytest.raises(ValueError, match="not symmetrical"):
        theorem9_guarantees(GammaPattern.parse("12"))


def test_heavy_signature_on_g1():
    w = g1(7)
    sig = heavy_signature(w.graph, w.path(["x'", "x", "y", "y''", "w", "z''"]))
    assert sig == GammaPattern.parse("44,45,46,55,56,66")


def test_signature_rejects_non_paths():
    g = cycle_graph(6)
    with pytest.raises(GraphError):
        heavy_signature(g, (0, 1, 2, 3, 4, 5))
    with pytest.raises(GraphError):
        heavy_signature(path_graph(6), (0, 1, 2))


def test_essentially_same_is_positional():
    w = g1(7)
    p = w.path(["x'", "x", "y", "y''", "w", "z''"])
    assert essentially_same(w.graph, p, p)
    assert not essentially_same(w.graph, p, p[::-1])
    assert essentially_same(w.graph, p, p[::-1], up_to_reversal=True)


def test_brousek_has_bad_p6_for_epsilon():
    g = brousek((3, 3, 3)).graph
    bad = find_bad_p6(g, EPSILON)
    assert bad is not None
    assert not is_p6_gamma_heavy(g, EPSILON)


def test_complete_graph_is_vacuously_heavy():
    assert is_p6_gamma_heavy(complete_graph(7), EPSILON)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=6, max_n=9), patterns, patterns)
def test_heaviness_is_monotone_in_the_pattern(g, a, b):
    if is_p6_gamma_heavy(g, a):
        assert is_p6_gamma_heavy(g, a | b)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=6, max_n=9), patterns)
def test_pattern_and_mirror_agree(g, gm):
    assert is_p6_gamma_heavy(g, gm) == is_p6_gamma_heavy(g, gm.symmetric_image())


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=6, max_n=9), patterns)
def test_bad_p6_consistent(g, gm):
    bad = find_bad_p6(g, gm)
    assert (bad is None) == is_p6_gamma_heavy(g, gm)
    assert gamma_heavy_from_classes(p6_signature_classes(g), gm) == is_p6_gamma_heavy(g, gm)
    if bad is not None:
        sig = heavy_signature(g, bad)
        assert not (sig & gm).mask and not (sig.symmetric_image() & gm).mask


def brute_heavy(g, gm):
    deg = g.degrees
    for e in induced_paths(g, 6):
        for rev in (e, e[::-1]):
            if any(deg[rev[i - 1]] + deg[rev[j - 1]] >= g.n for i, j in gm.edges):
                break
        else:
            return False
    return True


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=6, max_n=9), patterns)
def test_heaviness_matches_definition(g, gm):
    assert is_p6_gamma_heavy(g, gm) == brute_heavy(g, gm)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=6, max_n=9))
def test_epsilon_is_p6_free_and_loops_give_f_heavy(g):
    assert is_p6_gamma_heavy(g, EPSILON) == is_H_free(g, P6)
    # f-heaviness of P6 is the requirement 'loop i or loop i+2' for i = 1..4 on every copy
    f_heavy = all(
        all(sig.mask & GammaPattern.parse(f"{i}{i},{i + 2}{i + 2}").mask for i in range(1, 5))
        for sig in p6_signature_classes(g)
    )
    assert is_H_f_heavy(g, P6) == f_heavy


def test_gamma_constants_nest_known_conditions():
    assert GammaPattern.parse("11,66").issubset(GAMMA2)
    assert GAMMA1 != GAMMA3
    assert not SIGMA.issubset(GAMMA1)
