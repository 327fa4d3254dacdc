"""Seeded verification campaigns over random corpora and the counterexample families.

Every campaign is a pure function of its configuration.  Work items are
independent; with ``jobs > 1`` they run in a process pool and are merged in
item order, so the report does not depend on the degree of parallelism.
"""

from __future__ import annotations

import logging
import multiprocessing
import random
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Optional, Sequence

from .closure import compute_closure, lemma_violations
from .conditions import CLAW, DIAMOND, P6, is_claw_free, is_H_f_heavy, is_H_free
from .families import (
    G1_CLAIM_PATHS,
    G3_CLAIM_PATHS,
    STRATEGIES,
    FamilyWitness,
    GenerationError,
    brousek,
    brousek_specs,
    g1,
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
    GammaPattern,
    enumerate_symmetrical,
    gamma_heavy_from_classes,
    heavy_signature,
    p6_signature_classes,
    theorem9_guarantees,
)
from .graph import Graph, enumerate_induced, petersen_graph, write_graph6
from .hamilton import (
    DEFAULT_BUDGET,
    ExhaustedSearch,
    find_hamiltonian_cycle,
    hamiltonian_by_permutations,
    is_hamiltonian,
    verify_certificate,
)

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1


@dataclass
class Report:
    command: str
    config: dict
    counters: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    inconclusive: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.inconclusive

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "config": self.config,
            "ok": self.ok,
            "counters": self.counters,
            "violations": self.violations,
            "warnings": self.warnings,
            "inconclusive": self.inconclusive,
            "details": self.details,
        }


def run_items(fn: Callable, items: Sequence, jobs: int = 1) -> list:
    """``[fn(x) for x in items]``, optionally in a process pool; order is preserved."""
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (jobs * 8))
    with multiprocessing.get_context("fork").Pool(jobs) as pool:
        return pool.map(fn, items, chunksize=chunk)


def corpus_graph(seed: int, index: int, n_min: int, n_max: int, strategies: Sequence[str] = STRATEGIES):
    """Item ``index`` of the claw-o-heavy corpus: ``(graph, provenance)``, or ``(None, provenance)``."""
    rnd = random.Random(f"corpus:{seed}:{index}")
    n = rnd.randint(n_min, n_max)
    allowed = [s for s in strategies if s != "grown" or n >= 9]
    strategy = rnd.choice(allowed)
    sub = rnd.randrange(2**32)
    info = {"index": index, "n": n, "strategy": strategy, "sample_seed": sub}
    try:
        return random_claw_o_heavy(n, sub, strategy), info
    except GenerationError as exc:
        info["error"] = str(exc)
        return None, info


def _tally(counter: dict, key: str, by: int = 1) -> None:
    counter[key] = counter.get(key, 0) + by


# sufficiency direction

IF_FILTERS: dict[str, GammaPattern] = {
    "gamma1": GAMMA1,
    "gamma2": GAMMA2,
    "gamma3": GAMMA3,
    "eps": EPSILON,
    "ends_heavy": GammaPattern.parse("11,66"),
}


def _if_item(index: int, seed: int, n_max: int, budget: int) -> dict:
    g, info = corpus_graph(seed, index, 6, n_max)
    if g is None:
        return {"info": info}
    classes = p6_signature_classes(g)
    filters = {name: gamma_heavy_from_classes(classes, gm) for name, gm in IF_FILTERS.items()}
    filters["f_heavy"] = is_H_f_heavy(g, P6)
    dec = is_hamiltonian(g, budget=budget)
    out = {"info": info, "filters": filters, "hamiltonian": dec.hamiltonian, "method": dec.method}
    if dec.certificate is not None and not isinstance(dec.certificate, ExhaustedSearch):
        check = verify_certificate(g, dec.certificate)
        if not check:
            out["bad_certificate"] = check.reason
    if dec.hamiltonian is False:
        out["graph6"] = write_graph6(g)
        out["bad_p6"] = {sig.tokens(): list(e) for sig, e in classes.items()}
    return out


def if_campaign(trials: int = 10_000, n_max: int = 12, seed: int = 0, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> Report:
    """Sample 2-connected claw-o-heavy graphs; each filter that holds must imply a Hamilton cycle."""
    if n_max > 14:
        raise ValueError("n_max must be at most 14")
    rep = Report("verify-theorem9-if", {"trials": trials, "nmax": n_max, "seed": seed, "budget": budget})
    results = run_items(partial(_if_item, seed=seed, n_max=n_max, budget=budget), range(trials), jobs)
    per_filter = {name: {"held": 0, "hamiltonian": 0} for name in [*IF_FILTERS, "f_heavy"]}
    counters: dict = {}
    for res in results:
        info = res["info"]
        if "error" in info:
            _tally(counters, "generation_failures")
            rep.warnings.append({"property": "sampling", **info})
            continue
        _tally(counters, "graphs")
        _tally(counters, f"strategy_{info['strategy']}")
        if res.get("bad_certificate"):
            rep.violations.append({"property": "certificate_verifies", "reason": res["bad_certificate"], **info})
        if res["hamiltonian"] is None:
            rep.inconclusive.append(info)
            continue
        _tally(counters, "hamiltonian" if res["hamiltonian"] else "non_hamiltonian")
        for name, held in res["filters"].items():
            if not held:
                continue
            per_filter[name]["held"] += 1
            if res["hamiltonian"]:
                per_filter[name]["hamiltonian"] += 1
            else:
                rep.violations.append(
                    {"property": f"filter_{name}_implies_hamiltonian", "graph6": res["graph6"],
                     "p6_classes": res["bad_p6"], **info}
                )
    rep.counters = {**counters, "filters": per_filter}
    return rep


# necessity direction

# Positions that the first family fails on, and the loops that route to the third.
ROUTE_G1 = GammaPattern.parse("22,23,24,33,34,35,44,45,55")
ROUTE_G3 = GammaPattern.parse("11,16,66")


def route(gamma: GammaPattern) -> str:
    """Which counterexample family the case analysis assigns to a non-guaranteed pattern."""
    if gamma.mask & ROUTE_G1.mask:
        return "g1"
    if gamma.mask & ROUTE_G3.mask:
        return "g3"
    return "g2"


def counterexamples(budget: int = DEFAULT_BUDGET) -> dict[str, FamilyWitness]:
    return {"g1": g1(7), "g3": g3(8, 31), "g2": validated_g2(budget=budget)}


def onlyif_campaign(budget: int = DEFAULT_BUDGET, witnesses: Optional[dict[str, FamilyWitness]] = None) -> Report:
    """Every non-guaranteed symmetrical pattern is carried by a non-hamiltonian claw-o-heavy graph."""
    if witnesses is None:
        witnesses = counterexamples(budget)
    rep = Report("verify-theorem9-onlyif", {"budget": budget})
    classes = {}
    family_info = {}
    for name, w in witnesses.items():
        vr = validate_counterexample(w, budget=budget)
        family_info[name] = {"n": w.graph.n, "m": w.graph.m, "params": w.params, "validation": vr.to_dict()}
        for c in vr.checks:
            if not c.passed:
                rep.violations.append({"property": c.name, "family": name, "params": w.params, "detail": c.detail})
        classes[name] = list(p6_signature_classes(w.graph))
        family_info[name]["p6_classes"] = [s.tokens() for s in sorted(classes[name])]
    if "g1" in witnesses:
        res = find_hamiltonian_cycle(witnesses["g1"].graph, budget)
        family_info["g1"]["exhaustive_search"] = {"status": res.status, "nodes": res.nodes}
        if res.status == "found":
            rep.violations.append({"property": "g1_exhaustive_non_hamiltonian", "cycle": list(res.cycle)})
        elif res.status == "inconclusive":
            rep.inconclusive.append({"family": "g1", "nodes": res.nodes})
    per_gamma = []
    counters = {"symmetrical": 0, "guaranteed": 0, "not_guaranteed": 0}
    for gm in enumerate_symmetrical():
        counters["symmetrical"] += 1
        if theorem9_guarantees(gm):
            counters["guaranteed"] += 1
            continue
        counters["not_guaranteed"] += 1
        covering = [name for name, cls in classes.items() if gamma_heavy_from_classes(cls, gm)]
        routed = route(gm)
        per_gamma.append({"gamma": gm.tokens(), "routed": routed, "covered_by": covering})
        _tally(counters, f"routed_{routed}")
        if not covering:
            rep.violations.append({"property": "gamma_covered", "gamma": gm.tokens()})
        elif routed not in covering:
            rep.violations.append({"property": "routed_family_covers", "gamma": gm.tokens(), "routed": routed,
                                   "covered_by": covering})
    rep.counters = counters
    rep.details = {"families": family_info, "patterns": per_gamma}
    return rep


def claim_classes(w: FamilyWitness) -> dict:
    """Distinct heavy signatures of the induced P6s against the tabulated paths of the family."""
    table = {"g1": G1_CLAIM_PATHS, "g3": G3_CLAIM_PATHS}[w.family]
    g = w.graph
    listed = {}
    for names, tokens in table:
        listed[" ".join(names)] = heavy_signature(g, w.path(names))
    out = []
    for sig, emb in sorted(p6_signature_classes(g).items()):
        hits = [p for p, s in listed.items() if s == sig or s == sig.symmetric_image()]
        out.append({"signature": sig.tokens(), "witness": [w.names[v] for v in emb], "tabulated": hits})
    return {"family": w.family, "count": len(out), "classes": out}


# closure and region structure

def _closure_item(index: int, seed: int, n_min: int, n_max: int, orders: int, budget: int) -> dict:
    g, info = corpus_graph(seed, index, n_min, n_max)
    if g is None:
        return {"info": info}
    found: list[dict] = []
    warn: list[dict] = []
    tr = compute_closure(g)
    cl = tr.result
    again = compute_closure(cl)
    if again.steps:
        found.append({"property": "closure_idempotent", "extra_steps": len(again.steps)})
    if any(g.adj[v] & ~cl.adj[v] for v in range(g.n)):
        found.append({"property": "closure_edge_monotone"})
    if not is_claw_free(cl):
        found.append({"property": "closure_claw_free", "claw": list(next(enumerate_induced(cl, CLAW)))})
    if not is_H_free(cl, DIAMOND):
        warn.append({"property": "closure_diamond_free", "diamond": list(next(enumerate_induced(cl, DIAMOND)))})
    for k in range(orders):
        other = compute_closure(g, rng=random.Random(f"order:{seed}:{index}:{k}")).result
        if other != cl:
            found.append({"property": "closure_order_invariant", "order_seed": k})
            break
    dg = is_hamiltonian(g, budget=budget)
    dc = is_hamiltonian(cl, budget=budget)
    inconclusive = dg.inconclusive or dc.inconclusive
    if not inconclusive and dg.hamiltonian != dc.hamiltonian:
        found.append({"property": "closure_preserves_hamiltonicity", "graph": dg.hamiltonian, "closure": dc.hamiltonian})
    lemmas = lemma_violations(g, tr)
    out = {"info": info, "closure": found, "lemmas": lemmas, "warnings": warn, "inconclusive": inconclusive,
           "steps": len(tr.steps), "hamiltonian": dg.hamiltonian}
    if found or lemmas or warn:
        out["graph6"] = write_graph6(g)
    return out


def closure_campaign(
    trials: int = 500,
    n_min: int = 6,
    n_max: int = 14,
    seed: int = 0,
    orders: int = 20,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
    command: str = "verify-lemmas",
) -> Report:
    """Closure properties and region lemmas on a seeded claw-o-heavy corpus."""
    cfg = {"trials": trials, "nmin": n_min, "nmax": n_max, "seed": seed, "orders": orders, "budget": budget}
    rep = Report(command, cfg)
    fn = partial(_closure_item, seed=seed, n_min=n_min, n_max=n_max, orders=orders, budget=budget)
    counters: dict = {"closure_violations": 0, "lemma_violations": 0}
    for res in run_items(fn, range(trials), jobs):
        info = res["info"]
        if "error" in info:
            _tally(counters, "generation_failures")
            rep.warnings.append({"property": "sampling", **info})
            continue
        _tally(counters, "graphs")
        _tally(counters, f"strategy_{info['strategy']}")
        _tally(counters, "closure_steps", res["steps"])
        if res["steps"]:
            _tally(counters, "graphs_changed_by_closure")
        if res["hamiltonian"] is False:
            _tally(counters, "non_hamiltonian")
        if res["inconclusive"]:
            rep.inconclusive.append(info)
        g6 = res.get("graph6")
        for v in res["closure"]:
            counters["closure_violations"] += 1
            rep.violations.append({**v, **info, "graph6": g6})
        for v in res["lemmas"]:
            counters["lemma_violations"] += 1
            rep.violations.append({**v, **info, "graph6": g6})
        for v in res["warnings"]:
            rep.warnings.append({**v, **info, "graph6": g6})
    rep.counters = counters
    return rep


# exact solver against brute force

def _oracle_item(index: int, seed: int, n_max: int) -> dict:
    rnd = random.Random(f"oracle:{seed}:{index}")
    n = rnd.randint(3, n_max)
    p = rnd.uniform(0.2, 0.9)
    g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < p])
    truth = hamiltonian_by_permutations(g)
    found = []
    res = find_hamiltonian_cycle(g)
    if (res.status == "found") != truth or res.status == "inconclusive":
        found.append({"property": "search_matches_oracle", "search": res.status, "oracle": truth})
    dec = is_hamiltonian(g)
    if dec.hamiltonian != truth:
        found.append({"property": "decision_matches_oracle", "decision": dec.hamiltonian, "method": dec.method, "oracle": truth})
    if dec.certificate is None or not verify_certificate(g, dec.certificate):
        found.append({"property": "certificate_verifies", "method": dec.method})
    non_edges = [(u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)]
    if truth and non_edges:
        h = g.add_edges([rnd.choice(non_edges)])
        if find_hamiltonian_cycle(h).status != "found":
            found.append({"property": "adding_edge_keeps_hamiltonian"})
    info = {"index": index, "n": n, "graph6": write_graph6(g)}
    return {"info": info, "hamiltonian": truth, "method": dec.method, "violations": found}


def solver_oracle_campaign(trials: int = 2000, n_max: int = 9, seed: int = 0, jobs: int = 1) -> Report:
    rep = Report("solver-oracle", {"trials": trials, "nmax": n_max, "seed": seed})
    counters: dict = {}
    for res in run_items(partial(_oracle_item, seed=seed, n_max=n_max), range(trials), jobs):
        _tally(counters, "graphs")
        _tally(counters, "hamiltonian" if res["hamiltonian"] else "non_hamiltonian")
        _tally(counters, f"method_{res['method']}")
        for v in res["violations"]:
            rep.violations.append({**v, **res["info"]})
    for name, g in (("petersen", petersen_graph()), ("brousek_3_3_3", brousek((3, 3, 3)).graph)):
        res = find_hamiltonian_cycle(g)
        rep.details[name] = {"status": res.status, "nodes": res.nodes}
        if res.status != "none":
            rep.violations.append({"property": "exhausted_non_hamiltonian", "graph": name, "status": res.status})
    rep.counters = counters
    return rep


# induced obstructions in claw-free non-hamiltonian graphs

def find_brousek_member(g: Graph, max_order: Optional[int] = None):
    """Smallest spec with an induced copy in ``g``, and that copy; ``None`` if there is none."""
    for spec in sorted(brousek_specs(max_order or g.n), key=lambda s: (s.order, str(s))):
        emb = next(enumerate_induced(g, brousek(spec).graph), None)
        if emb is not None:
            return spec, emb
    return None


def _brousek_item(index: int, seed: int, n_max: int, budget: int) -> dict:
    rnd = random.Random(f"obstruction:{seed}:{index}")
    if index % 2 == 0:
        n = rnd.randint(9, n_max)
        sub = rnd.randrange(2**32)
        info = {"index": index, "n": n, "source": "grown", "sample_seed": sub}
        g = random_claw_free_nonhamiltonian(n, sub)
    else:
        n = rnd.randint(6, n_max)
        sub = rnd.randrange(2**32)
        info = {"index": index, "n": n, "source": "line", "sample_seed": sub}
        try:
            g = random_claw_o_heavy(n, sub, "line")
        except GenerationError:
            g = None
    if g is None or not is_claw_free(g):
        return {"info": info, "status": "skipped"}
    res = find_hamiltonian_cycle(g, budget)
    if res.status == "inconclusive":
        return {"info": info, "status": "inconclusive"}
    if res.status == "found":
        return {"info": info, "status": "hamiltonian"}
    hit = find_brousek_member(g)
    out = {"info": {**info, "graph6": write_graph6(g)}, "status": "non_hamiltonian"}
    if hit is None:
        out["violation"] = {"property": "contains_induced_brousek_member"}
    else:
        out["member"] = {"spec": str(hit[0]), "embedding": list(hit[1])}
    return out


def brousek_campaign(trials: int = 400, n_max: int = 12, seed: int = 0, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> Report:
    """Every 2-connected claw-free non-hamiltonian sample must contain an induced Brousek graph."""
    rep = Report("verify-obstructions", {"trials": trials, "nmax": n_max, "seed": seed, "budget": budget})
    counters: dict = {}
    members: dict = {}
    for res in run_items(partial(_brousek_item, seed=seed, n_max=n_max, budget=budget), range(trials), jobs):
        _tally(counters, res["status"])
        if res["status"] == "inconclusive":
            rep.inconclusive.append(res["info"])
        if "violation" in res:
            rep.violations.append({**res["violation"], **res["info"]})
        if "member" in res:
            _tally(members, res["member"]["spec"])
    rep.counters = {**counters, "members_found": dict(sorted(members.items()))}
    return rep
