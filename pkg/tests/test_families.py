import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamlab.conditions import is_claw_free, is_claw_o_heavy
from hamlab.families import (
    G1_CLAIM_PATH4_ALTERNATIVE,
    G1_CLAIM_PATHS,
    G2_GAMMA,
    G2_VARIANTS,
    BrousekSpec,
    GenerationError,
    ValidationFailed,
    brousek,
    brousek_specs,
    claim_path_checks,
    g1,
    g2,
    g3,
    random_claw_free_nonhamiltonian,
    random_claw_o_heavy,
    validate_counterexample,
    validated_g2,
)
from hamlab.gamma import EPSILON, GammaPattern, heavy_signature
from hamlab.graph import heavy_vertices, is_induced_copy, is_two_connected, path_graph
from hamlab.hamilton import find_hamiltonian_cycle


def failed(report):
    return [c.name for c in report.checks if not c.passed]


def test_brousek_counts():
    assert (brousek((3, 3, 3)).graph.n, brousek((3, 3, 3)).graph.m) == (9, 12)
    assert (brousek(("T", "T", "T")).graph.n, brousek(("T", "T", "T")).graph.m) == (9, 15)
    w = brousek(("T", 4, 5))
    assert w.graph.n == BrousekSpec("T", 4, 5).order == 6 + 1 + 2 + 3
    assert {"a1", "b3", "c1", "c2^2", "c3^3"} <= set(w.names)


def test_brousek_spec_validation():
    with pytest.raises(GenerationError):
        BrousekSpec(2, 3, 3)
    with pytest.raises(GenerationError):
        BrousekSpec("X", 3, 3)
    assert str(BrousekSpec("T", 3, 4)) == "P_{T,3,4}"


def test_brousek_specs_enumeration():
    assert len(brousek_specs(9)) == 4
    assert all(s.order <= 11 for s in brousek_specs(11))


def test_brousek_members_are_claw_free_two_connected_non_hamiltonian():
    for spec in brousek_specs(15):
        g = brousek(spec).graph
        assert is_claw_free(g) and is_two_connected(g)
        assert find_hamiltonian_cycle(g).status == "none", spec


def test_g1_degrees():
    w = g1(7)
    g = w.graph
    assert g.n == 16
    assert [g.degree(w.v(s)) for s in ("x''", "w", "x", "x'")] == [9, 9, 4, 2]
    want = set(w.groups["K_r"]) | {w.v("x''"), w.v("y''"), w.v("z''")}
    assert set(heavy_vertices(g)) == want


def test_g3_degrees_and_tight_identities():
    w = g3(8, 31)
    g = w.graph
    assert g.n == 64
    d = {s: g.degree(w.v(s)) for s in ("x_1", "x''", "w", "x", "x'")}
    assert d == {"x_1": 32, "x''": 10, "w": 54, "x": 4, "x'": 2}
    assert g.degree(w.v("x_1")) + g.degree(w.v("y_1")) == g.n
    assert g.degree(w.v("w")) + g.degree(w.v("x''")) == g.n
    assert set(heavy_vertices(g)) == set(w.groups["K_r"]) | set(w.groups["X"] + w.groups["Y"] + w.groups["Z"])


def test_g2_orders():
    assert g2(6, 12, 12, 23).graph.n == 61
    assert g2(7, 13, 13, 25).graph.n == 66
    assert g2(6, 12, 12, 23, "y_prime_in_clique").graph.n == 62
    with pytest.raises(GenerationError):
        g2(6, 12, 12, 23, "nonsense")


def test_generators_reject_bad_parameters():
    for bad in (lambda: g1(0), lambda: g3(0, 5), lambda: g2(0, 1, 1, 1)):
        with pytest.raises(GenerationError):
            bad()


def test_below_bound_warns(caplog):
    g1(5)
    assert "below the validity bound" in caplog.text


def test_g1_claim_paths_and_validation():
    w = g1(7)
    rep = validate_counterexample(w, GammaPattern.parse("22"))
    assert rep.passed, failed(rep)
    assert rep.certificate["kind"] == "three_channel"
    assert heavy_signature(w.graph, w.path(["x'", "x", "y", "y''", "w", "z''"])) == GammaPattern.parse("44,45,46,55,56,66")


def test_g1_fourth_path_truncation():
    w = g1(7)
    names, tokens = G1_CLAIM_PATHS[3]
    want = GammaPattern.parse(tokens)
    sig = heavy_signature(w.graph, w.path(names))
    assert want in (sig, sig.symmetric_image())
    # the other truncation closes the apex triangle between its ends
    assert not is_induced_copy(w.graph, path_graph(6), w.path(G1_CLAIM_PATH4_ALTERNATIVE))


def test_g3_validation():
    w = g3(8, 31)
    assert validate_counterexample(w, GammaPattern.parse("11,13,46,66")).passed
    # a lone 11 misses the path x'' x_1 w y_1 y'' y', which carries 13 and 46 but no end loop
    rep = validate_counterexample(w, GammaPattern.parse("11"))
    assert failed(rep) == ["p6_gamma_heavy[11]"]
    assert all(c.passed for c in claim_path_checks(w))


def test_brousek_validation_epsilon():
    rep = validate_counterexample(brousek((3, 3, 3)), EPSILON)
    assert failed(rep) == ["p6_gamma_heavy[eps]"]


def test_validated_g2_default():
    w = validated_g2()
    assert w.params["variant"] == "figure"
    assert validate_counterexample(w, G2_GAMMA).passed


def test_g2_at_smaller_parameters_is_not_gamma_heavy():
    w = g2(6, 12, 12, 23)
    rep = validate_counterexample(w, G2_GAMMA)
    assert failed(rep) == ["p6_gamma_heavy[12,13,46,56]"]
    with pytest.raises(ValidationFailed):
        validated_g2(6, 12, 12, 23)


def test_g2_variants():
    # every reading is non-hamiltonian; only the default one is claw-o-heavy
    for variant in G2_VARIANTS:
        rep = validate_counterexample(g2(7, 13, 13, 25, variant))
        want = [] if variant == "figure" else ["claw_o_heavy"]
        assert failed(rep) == want, variant


def test_labels_cover_every_vertex():
    for w in (g1(7), g3(8, 31), g2(6, 12, 12, 23), brousek(("T", 3, 5))):
        d = w.label_dict()
        assert len(d["names"]) == w.graph.n == len(set(d["names"]))


@settings(max_examples=25, deadline=None)
@given(st.integers(4, 14), st.integers(0, 10**6), st.sampled_from(["rejection", "line", "grown"]))
def test_sampler_postconditions(n, seed, strategy):
    if strategy == "grown" and n < 9:
        with pytest.raises(GenerationError):
            random_claw_o_heavy(n, seed, strategy)
        return
    g = random_claw_o_heavy(n, seed, strategy)
    assert g.n == n
    assert is_two_connected(g) and is_claw_o_heavy(g)
    assert random_claw_o_heavy(n, seed, strategy) == g


def test_line_strategy_is_claw_free():
    assert all(is_claw_free(random_claw_o_heavy(n, s, "line")) for n in (6, 10, 14) for s in range(20))


def test_sampler_errors():
    with pytest.raises(GenerationError):
        random_claw_o_heavy(20, 0, "rejection")
    with pytest.raises(GenerationError):
        random_claw_o_heavy(10, 0, "bogus")


def test_claw_free_nonhamiltonian_sampler():
    for seed in range(5):
        g = random_claw_free_nonhamiltonian(11, seed)
        assert g is not None and g.n == 11
        assert is_claw_free(g) and is_two_connected(g)
        assert find_hamiltonian_cycle(g).status == "none"
