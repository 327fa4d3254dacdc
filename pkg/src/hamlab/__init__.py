"""Hamiltonicity of claw-heavy graphs: heaviness predicates, closure, families and an exact solver."""

from .closure import (
    ClosureTrace,
    Eligibility,
    NotClawOHeavyError,
    RegionDecomposition,
    closure,
    compute_closure,
    dissociated,
    eligibility,
    heavy_neighborhood_edges,
    interior_path,
    is_o_eligible,
    lemma_violations,
    local_completion,
    maximal_cliques,
    regions,
)
from .conditions import (
    PATTERNS,
    dirac_holds,
    find_light_copy,
    is_claw_free,
    is_claw_o_heavy,
    is_H_f_heavy,
    is_H_free,
    is_H_o_heavy,
    ore_holds,
)
from .families import (
    BrousekSpec,
    FamilyWitness,
    brousek,
    brousek_specs,
    g1,
    g2,
    g3,
    random_claw_free_nonhamiltonian,
    random_claw_o_heavy,
    validate_counterexample,
    validated_g2,
)
from .gamma import (
    EPSILON,
    GAMMA1,
    GAMMA2,
    GAMMA3,
    SIGMA,
    GammaPattern,
    enumerate_symmetrical,
    essentially_same,
    find_bad_p6,
    gamma_constants,
    heavy_signature,
    is_p6_gamma_heavy,
    is_symmetrical,
    p6_signature_classes,
    symmetric_image,
    theorem9_guarantees,
)
from .graph import (
    Graph,
    GraphError,
    ParseError,
    enumerate_induced,
    is_heavy_pair,
    is_heavy_vertex,
    is_two_connected,
    read_edge_list,
    read_graph6,
    write_edge_list,
    write_graph6,
)
from .hamilton import (
    CutWitness,
    Cycle,
    ExhaustedSearch,
    HamDecision,
    ThreeChannelWitness,
    certify_three_channel,
    find_cut_witness,
    find_hamiltonian_cycle,
    is_hamiltonian,
    verify_certificate,
)

__version__ = "0.1.0"
