"""Command-line entry point: ``hamlab <command> ...``.

A plain-text summary goes to stdout; the full JSON report goes to ``--out``
(or to stdout with ``--json``).  Exit status is 0 when a run has no property
violations and no inconclusive solver results, 1 otherwise, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

from . import campaigns
from .campaigns import Report
from .closure import StructuralViolation, compute_closure, regions
from .conditions import CLAW, P6, dirac_holds, is_H_f_heavy, is_H_free, is_H_o_heavy, ore_holds
from .families import G2_VARIANTS, STRATEGIES, GenerationError, ValidationFailed, brousek, g1, g2, g3, random_claw_o_heavy
from .gamma import (
    GAMMA1,
    GAMMA2,
    GAMMA3,
    EPSILON,
    GammaPattern,
    containing_constant,
    enumerate_symmetrical,
    find_bad_p6,
    is_p6_gamma_heavy,
    theorem9_guarantees,
)
from .graph import Graph, ParseError, is_connected, is_two_connected, read_graph_text, write_edge_list
from .hamilton import DEFAULT_BUDGET, is_hamiltonian

log = logging.getLogger("hamlab")

NAMED_GAMMAS = {"eps": EPSILON, "gamma1": GAMMA1, "gamma2": GAMMA2, "gamma3": GAMMA3}


class UsageError(Exception):
    pass


def parse_gamma(text: str) -> GammaPattern:
    key = text.strip().lower()
    if key in NAMED_GAMMAS:
        return NAMED_GAMMAS[key]
    try:
        return GammaPattern.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _load(path: str) -> list[Graph]:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        graphs = read_graph_text(text)
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from exc
    if not graphs:
        raise UsageError(f"{path}: no graph found")
    return graphs


def _config(args: argparse.Namespace) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "json", "verbose")}


def _yes(flag: Optional[bool]) -> str:
    return {True: "yes", False: "no", None: "inconclusive"}[flag]


# single-graph commands

def cmd_check(args) -> tuple[Report, list[str]]:
    gamma = parse_gamma(args.gamma) if args.gamma else None
    rep = Report("check", _config(args))
    lines = []
    rows = []
    for i, g in enumerate(_load(args.file)):
        row = {
            "n": g.n,
            "m": g.m,
            "connected": is_connected(g),
            "two_connected": is_two_connected(g),
            "claw_free": is_H_free(g, CLAW),
            "claw_o_heavy": is_H_o_heavy(g, CLAW),
            "claw_f_heavy": is_H_f_heavy(g, CLAW),
            "p6_free": is_H_free(g, P6),
            "p6_f_heavy": is_H_f_heavy(g, P6),
            "dirac": dirac_holds(g),
            "ore": ore_holds(g),
        }
        if gamma is not None:
            row["p6_gamma_heavy"] = is_p6_gamma_heavy(g, gamma)
        rows.append(row)
        flags = " ".join(f"{k}={_yes(v)}" for k, v in row.items() if isinstance(v, bool))
        lines.append(f"graph {i}: n={g.n} m={g.m} {flags}")
    rep.details = {"graphs": rows, "gamma": None if gamma is None else gamma.tokens()}
    return rep, lines


def cmd_closure(args) -> tuple[Report, list[str]]:
    rep = Report("closure", _config(args))
    out, lines = [], []
    for i, g in enumerate(_load(args.file)):
        tr = compute_closure(g)
        out.append({**tr.to_dict(), "closure_edges": [list(e) for e in tr.result.edges()]})
        lines.append(f"graph {i}: {len(tr.steps)} completions, m {g.m} -> {tr.result.m}")
    rep.details = {"graphs": out}
    return rep, lines


def cmd_regions(args) -> tuple[Report, list[str]]:
    rep = Report("regions", _config(args))
    out, lines = [], []
    for i, g in enumerate(_load(args.file)):
        tr = compute_closure(g)
        try:
            dec = regions(tr, g)
        except StructuralViolation as exc:
            rep.violations.append({"graph": i, "property": "vertex_in_at_most_two_regions", "detail": str(exc)})
            continue
        out.append(dec.to_dict())
        lines.append(
            f"graph {i}: {len(dec.regions)} regions, {dec.interior.bit_count()} interior, "
            f"{dec.frontier.bit_count()} frontier"
        )
    rep.details = {"graphs": out}
    return rep, lines


def cmd_ham(args) -> tuple[Report, list[str]]:
    rep = Report("ham", _config(args))
    out, lines = [], []
    for i, g in enumerate(_load(args.file)):
        dec = is_hamiltonian(g, budget=args.budget)
        out.append(dec.to_dict())
        if dec.inconclusive:
            rep.inconclusive.append({"graph": i, "nodes": dec.nodes})
        cert = json.dumps(dec.certificate.to_dict(), sort_keys=True) if dec.certificate else "none"
        lines.append(f"graph {i}: hamiltonian={_yes(dec.hamiltonian)} method={dec.method} certificate={cert}")
    rep.details = {"graphs": out}
    return rep, lines


def cmd_find_bad_p6(args) -> tuple[Report, list[str]]:
    gamma = parse_gamma(args.gamma)
    rep = Report("find-bad-p6", _config(args))
    out, lines = [], []
    for i, g in enumerate(_load(args.file)):
        bad = find_bad_p6(g, gamma)
        out.append({"bad_p6": None if bad is None else list(bad)})
        lines.append(f"graph {i}: " + ("P6-gamma-heavy" if bad is None else f"bad P6 {' '.join(map(str, bad))}"))
    rep.details = {"gamma": gamma.tokens(), "graphs": out}
    return rep, lines


# patterns

def classify(gamma: GammaPattern) -> str:
    if not theorem9_guarantees(gamma):
        return "not guaranteed"
    const = containing_constant(gamma)
    return f"guaranteed (⊆ γ{const[-1]})"


def cmd_classify_gamma(args) -> tuple[Report, list[str]]:
    gamma = parse_gamma(args.gamma)
    if not gamma.is_symmetrical():
        raise UsageError(f"pattern not symmetrical: {gamma} (its mirror image is {gamma.symmetric_image()})")
    verdict = classify(gamma)
    rep = Report("classify-gamma", _config(args), details={"gamma": gamma.tokens(), "classification": verdict})
    return rep, [f"{gamma}: {verdict}"]


def cmd_enumerate_gamma(args) -> tuple[Report, list[str]]:
    rows = []
    yes = 0
    for gm in enumerate_symmetrical():
        verdict = classify(gm)
        yes += verdict.startswith("guaranteed")
        rows.append({"gamma": gm.tokens(), "classification": verdict})
    rep = Report("enumerate-gamma", _config(args), details={"patterns": rows})
    rep.counters = {"symmetrical": len(rows), "guaranteed": yes, "not_guaranteed": len(rows) - yes}
    return rep, [f"{len(rows)} symmetrical patterns: {yes} guaranteed, {len(rows) - yes} not guaranteed"]


# generators

def _params(text: str) -> list:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok.upper() == "T":
            out.append("T")
        else:
            try:
                out.append(int(tok))
            except ValueError as exc:
                raise UsageError(f"bad parameter {tok!r}") from exc
    return out


def cmd_generate(args) -> tuple[Report, list[str]]:
    p = _params(args.params) if args.params else []
    try:
        if args.family == "brousek":
            w = brousek(p or [3, 3, 3])
        elif args.family == "g1":
            w = g1(*(p or [7]))
        elif args.family == "g3":
            w = g3(*(p or [8, 31]))
        elif args.family == "g2":
            w = g2(*(p or [7, 13, 13, 25]), variant=args.variant)
        else:
            n = p[0] if p else 10
            g = random_claw_o_heavy(n, args.seed, args.strategy)
            w = None
    except (GenerationError, TypeError) as exc:
        raise UsageError(f"cannot generate {args.family}: {exc}") from exc
    graph = w.graph if w is not None else g
    labels = w.label_dict() if w is not None else {"family": "random", "params": {"n": graph.n, "seed": args.seed, "strategy": args.strategy}}
    text = write_edge_list(graph)
    rep = Report("generate", _config(args), details={"n": graph.n, "m": graph.m, "labels": labels})
    if args.out:
        Path(args.out).write_text(text)
        Path(args.out + ".labels.json").write_text(json.dumps(labels, sort_keys=True, indent=2) + "\n")
        return rep, [f"wrote {args.out} (n={graph.n}, m={graph.m}) and {args.out}.labels.json"]
    return rep, [text.rstrip("\n")]


# campaigns

def _campaign_lines(rep: Report) -> list[str]:
    lines = [f"{rep.command}: {'ok' if rep.ok else 'FAILED'}"]
    for k, v in rep.counters.items():
        lines.append(f"  {k}: {json.dumps(v, sort_keys=True)}")
    lines.append(f"  violations: {len(rep.violations)}  inconclusive: {len(rep.inconclusive)}  warnings: {len(rep.warnings)}")
    for v in rep.violations[:10]:
        lines.append(f"  ! {json.dumps(v, sort_keys=True)}")
    return lines


def cmd_verify_if(args):
    rep = campaigns.if_campaign(args.trials, args.nmax, args.seed, args.budget, args.jobs)
    rep.config = _config(args)
    return rep, _campaign_lines(rep)


def cmd_verify_onlyif(args):
    try:
        rep = campaigns.onlyif_campaign(args.budget)
    except ValidationFailed as exc:
        rep = Report("verify-theorem9-onlyif", {})
        rep.violations.append({"property": "g2_validation", "report": exc.report.to_dict()})
    rep.config = _config(args)
    lines = _campaign_lines(rep)
    for name, info in rep.details.get("families", {}).items():
        lines.append(f"  {name}: n={info['n']} validated={info['validation']['passed']} "
                     f"certificate={info['validation']['certificate']['kind']} p6_classes={len(info['p6_classes'])}")
    return rep, lines


def cmd_verify_lemmas(args):
    rep = campaigns.closure_campaign(args.trials, 6, args.nmax, args.seed, budget=args.budget, jobs=args.jobs)
    rep.config = _config(args)
    return rep, _campaign_lines(rep)


def cmd_verify_solver(args):
    rep = campaigns.solver_oracle_campaign(args.trials, args.nmax, args.seed, args.jobs)
    rep.config = _config(args)
    return rep, _campaign_lines(rep)


def cmd_verify_obstructions(args):
    rep = campaigns.brousek_campaign(args.trials, args.nmax, args.seed, args.budget, args.jobs)
    rep.config = _config(args)
    return rep, _campaign_lines(rep)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hamlab", description="Closure, heaviness and hamiltonicity tools for claw-heavy graphs.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_text, file=False, gamma=None, campaign=None):
        p = sub.add_parser(name, help=help_text)
        if file:
            p.add_argument("file", help="edge-list or graph6 file ('-' for stdin)")
        if gamma == "required":
            p.add_argument("--gamma", required=True, help="pattern tokens like '13,46', or eps/gamma1/gamma2/gamma3")
        elif gamma == "optional":
            p.add_argument("--gamma", help="pattern tokens like '13,46', or eps/gamma1/gamma2/gamma3")
        if campaign:
            trials, nmax = campaign
            p.add_argument("--trials", type=int, default=trials)
            p.add_argument("--nmax", type=int, default=nmax)
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--out", help="write the JSON report here")
        p.add_argument("--json", action="store_true", help="print the JSON report instead of the summary")
        p.set_defaults(func=func)
        return p

    command("check", cmd_check, "predicate table for each input graph", file=True, gamma="optional")
    command("closure", cmd_closure, "closure trace", file=True)
    command("regions", cmd_regions, "region decomposition of the closure", file=True)
    ham = command("ham", cmd_ham, "decide hamiltonicity with a certificate", file=True)
    ham.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    command("find-bad-p6", cmd_find_bad_p6, "an induced P6 with no heavy pair on the pattern", file=True, gamma="required")
    command("classify-gamma", cmd_classify_gamma, "is hamiltonicity guaranteed for this pattern", gamma="required")
    command("enumerate-gamma", cmd_enumerate_gamma, "classify all symmetrical patterns")
    gen = sub.add_parser("generate", help="write a family member as an edge list plus a label sidecar")
    gen.add_argument("family", choices=["brousek", "g1", "g2", "g3", "random"])
    gen.add_argument("--params", help="comma-separated, e.g. 'T,3,4' or '8,31'; for random, the order n")
    gen.add_argument("--variant", choices=G2_VARIANTS, default="figure")
    gen.add_argument("--strategy", choices=STRATEGIES, default="rejection")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", help="edge-list path; labels go to <out>.labels.json")
    gen.add_argument("--json", action="store_true")
    gen.set_defaults(func=cmd_generate)

    for name, func, help_text, defaults in (
        ("verify-theorem9-if", cmd_verify_if, "sampled graphs meeting a guaranteed pattern are hamiltonian", (10_000, 12)),
        ("verify-lemmas", cmd_verify_lemmas, "closure properties and region lemmas on a sampled corpus", (500, 14)),
        ("verify-solver", cmd_verify_solver, "exact solver against a brute-force oracle", (2000, 9)),
        ("verify-obstructions", cmd_verify_obstructions, "claw-free non-hamiltonian samples contain a Brousek graph", (400, 12)),
    ):
        p = command(name, func, help_text, campaign=defaults)
        if name != "verify-solver":
            p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    onlyif = command("verify-theorem9-onlyif", cmd_verify_onlyif, "every non-guaranteed pattern has a counterexample")
    onlyif.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    return parser


def render(rep: Report) -> str:
    doc = rep.to_dict()
    doc["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        rep, lines = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"hamlab {args.command}: error: {exc}", file=sys.stderr)
        return 2
    text = render(rep)
    if args.out and args.command != "generate":
        Path(args.out).write_text(text)
    if args.json:
        sys.stdout.write(text)
    else:
        print("\n".join(lines))
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
