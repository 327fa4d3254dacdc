"""Closure of claw-o-heavy graphs by local completion at o-eligible vertices, and regions."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .conditions import find_light_copy, CLAW
from .graph import Graph, bits, is_nonseparable, shortest_path, to_mask


class NotClawOHeavyError(ValueError):
    pass


class StructuralViolation(RuntimeError):
    pass


class Eligibility(enum.Enum):
    CONNECTED = "connected"
    TWO_CLIQUES_WITH_JOIN = "two_cliques_with_join"
    TWO_CLIQUES_NO_JOIN = "two_cliques_no_join"
    NOT_APPLICABLE = "not_applicable"

    @property
    def eligible(self) -> bool:
        return self in (Eligibility.CONNECTED, Eligibility.TWO_CLIQUES_WITH_JOIN)


def local_completion(g: Graph, x: int) -> Graph:
    nbrs = g.adj[x]
    rows = list(g.adj)
    for v in bits(nbrs):
        rows[v] |= nbrs & ~(1 << v)
    return Graph.from_rows(rows)


def heavy_neighborhood_edges(g: Graph, x: int) -> set[tuple[int, int]]:
    """All pairs inside ``N(x)`` with degree sum at least ``n``, adjacent or not."""
    deg = g.degrees
    return {(u, v) for u, v in combinations(bits(g.adj[x]), 2) if deg[u] + deg[v] >= g.n}


def _augmented_rows(g: Graph, x: int) -> dict[int, int]:
    # adjacency of G^o_x restricted to N(x)
    nbrs = g.adj[x]
    rows = {v: g.adj[v] & nbrs for v in bits(nbrs)}
    for u, v in heavy_neighborhood_edges(g, x):
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return rows


def _components(rows: dict[int, int], mask: int) -> list[int]:
    out = []
    while mask:
        comp = frontier = mask & -mask
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            nxt &= mask & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        mask &= ~comp
    return out


def _is_clique(rows: dict[int, int], mask: int) -> bool:
    return all((mask & ~(1 << v)) & ~rows[v] == 0 for v in bits(mask))


def eligibility(g: Graph, x: int) -> Eligibility:
    nbrs = g.adj[x]
    if g.is_clique(nbrs):
        return Eligibility.NOT_APPLICABLE
    rows = _augmented_rows(g, x)
    comps = _components(rows, nbrs)
    if len(comps) == 1:
        return Eligibility.CONNECTED
    if len(comps) != 2 or not all(_is_clique(rows, c) for c in comps):
        return Eligibility.NOT_APPLICABLE
    c1, c2 = comps
    dx = g.degree(x)
    outside = g.vertex_mask & ~nbrs & ~(1 << x)
    for z in bits(outside):
        if dx + g.degree(z) >= g.n and g.adj[z] & c1 and g.adj[z] & c2:
            return Eligibility.TWO_CLIQUES_WITH_JOIN
    return Eligibility.TWO_CLIQUES_NO_JOIN


def is_o_eligible(g: Graph, x: int) -> bool:
    return eligibility(g, x).eligible


def eligible_vertices(g: Graph) -> list[int]:
    return [x for x in range(g.n) if is_o_eligible(g, x)]


@dataclass
class ClosureStep:
    vertex: int
    kind: Eligibility
    added: tuple[tuple[int, int], ...]


@dataclass
class ClosureTrace:
    source: Graph
    steps: list[ClosureStep] = field(default_factory=list)
    result: Optional[Graph] = None

    def to_dict(self) -> dict:
        return {
            "n": self.source.n,
            "m_before": self.source.m,
            "m_after": self.result.m if self.result is not None else None,
            "steps": [
                {"vertex": s.vertex, "kind": s.kind.value, "added": [list(e) for e in s.added]}
                for s in self.steps
            ],
        }


def compute_closure(g: Graph, rng: Optional[random.Random] = None, check: bool = True) -> ClosureTrace:
    """Complete at o-eligible vertices until none is left.

    The lowest-indexed eligible vertex is used unless ``rng`` is given, in which
    case the vertex is drawn uniformly among the eligible ones.
    """
    if check:
        bad = find_light_copy(g, CLAW)
        if bad is not None:
            raise NotClawOHeavyError(f"graph is not claw-o-heavy; light claw {bad}")
    trace = ClosureTrace(g)
    cur = g
    while True:
        if rng is None:
            pick = next(((x, k) for x in range(cur.n) if (k := eligibility(cur, x)).eligible), None)
        else:
            cands = [(x, k) for x in range(cur.n) if (k := eligibility(cur, x)).eligible]
            pick = rng.choice(cands) if cands else None
        if pick is None:
            break
        x, kind = pick
        nbrs = list(bits(cur.adj[x]))
        added = tuple((u, v) for u, v in combinations(nbrs, 2) if not cur.has_edge(u, v))
        trace.steps.append(ClosureStep(x, kind, added))
        cur = local_completion(cur, x)
    trace.result = cur
    return trace


def closure(g: Graph) -> Graph:
    result = compute_closure(g).result
    assert result is not None
    return result


# maximal cliques and regions

def maximal_cliques(g: Graph) -> list[int]:
    """Bron-Kerbosch with pivoting; cliques as bitsets, sorted."""
    out: list[int] = []
    adj = g.adj

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(bits(p | x), key=lambda u: (adj[u] & p).bit_count())
        for v in bits(p & ~adj[pivot]):
            expand(r | (1 << v), p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        expand(0, g.vertex_mask, 0)
    return sorted(out, key=lambda c: sorted(bits(c)))


@dataclass
class RegionDecomposition:
    graph: Graph
    closure: Graph
    regions: list[int]
    vertex_regions: list[list[int]]

    @property
    def interior(self) -> int:
        return to_mask(v for v, rs in enumerate(self.vertex_regions) if len(rs) == 1)

    @property
    def frontier(self) -> int:
        return to_mask(v for v, rs in enumerate(self.vertex_regions) if len(rs) == 2)

    def interior_of(self, r: int) -> int:
        return self.regions[r] & self.interior

    def frontier_of(self, r: int) -> int:
        return self.regions[r] & self.frontier

    def common_region(self, u: int, v: int) -> Optional[int]:
        shared = set(self.vertex_regions[u]) & set(self.vertex_regions[v])
        return min(shared) if shared else None

    def to_dict(self) -> dict:
        return {
            "regions": [sorted(bits(r)) for r in self.regions],
            "interior": sorted(bits(self.interior)),
            "frontier": sorted(bits(self.frontier)),
        }


def regions(trace: ClosureTrace, g: Graph) -> RegionDecomposition:
    if trace.source != g or trace.result is None:
        raise ValueError("trace was not produced from this graph")
    cl = trace.result
    cliques = maximal_cliques(cl)
    owners: list[list[int]] = [[] for _ in range(g.n)]
    for i, c in enumerate(cliques):
        for v in bits(c):
            owners[v].append(i)
    crowded = [v for v, rs in enumerate(owners) if len(rs) > 2]
    if crowded:
        raise StructuralViolation(f"vertices in three or more regions: {crowded}")
    return RegionDecomposition(g, cl, cliques, owners)


def dissociated(dec: RegionDecomposition, u: int, v: int) -> bool:
    return dec.common_region(u, v) is None


def interior_path(dec: RegionDecomposition, g: Graph, u: int, v: int) -> list[int]:
    """Shortest path from ``u`` to ``v`` in ``g`` with all internal vertices interior to their shared region."""
    r = dec.common_region(u, v)
    if r is None:
        raise ValueError(f"vertices {u} and {v} are dissociated")
    path = shortest_path(g, u, v, dec.interior_of(r))
    if path is None:
        raise StructuralViolation(f"no interior path between {u} and {v} in region {sorted(bits(dec.regions[r]))}")
    return path


def lemma_violations(g: Graph, trace: Optional[ClosureTrace] = None) -> list[dict]:
    """Check the structural facts about regions on one claw-o-heavy graph; return every violation."""
    if trace is None:
        trace = compute_closure(g)
    out: list[dict] = []
    try:
        dec = regions(trace, g)
    except StructuralViolation as exc:
        return [{"property": "vertex_in_at_most_two_regions", "detail": str(exc)}]
    cl = dec.closure
    n = g.n
    for v, rs in enumerate(dec.vertex_regions):
        if len(rs) not in (1, 2):
            out.append({"property": "vertex_in_one_or_two_regions", "vertex": v, "regions": rs})
    for i, j in combinations(range(len(dec.regions)), 2):
        if (dec.regions[i] & dec.regions[j]).bit_count() > 1:
            out.append({"property": "regions_meet_in_at_most_one_vertex", "regions": [i, j]})
    for u, v in combinations(range(n), 2):
        if dissociated(dec, u, v):
            if cl.degree(u) + cl.degree(v) >= n or g.degree(u) + g.degree(v) >= n:
                out.append({"property": "dissociated_pair_light", "pair": [u, v]})
    deg = g.degrees
    for r, rmask in enumerate(dec.regions):
        members = sorted(bits(rmask))
        if not is_nonseparable(g, rmask):
            out.append({"property": "region_nonseparable", "region": members})
        inner = dec.interior_of(r)
        front = dec.frontier_of(r)
        for v in bits(front):
            if not g.adj[v] & inner and not (inner == 0 and g.is_clique(front)):
                out.append({"property": "frontier_has_interior_neighbour", "region": members, "vertex": v})
        for u, v in combinations(members, 2):
            path = shortest_path(g, u, v, inner)
            if path is None:
                out.append({"property": "interior_path_exists", "region": members, "pair": [u, v]})
                continue
            if not g.has_edge(u, v) and deg[u] + deg[v] >= n:
                common = (g.adj[u] & g.adj[v] & inner).bit_count()
                if common < 2:
                    out.append({"property": "heavy_pair_two_interior_neighbours", "region": members, "pair": [u, v]})
            for a, b in combinations(range(len(path)), 2):
                if b - a >= 3 and deg[path[a]] + deg[path[b]] >= n:
                    out.append({"property": "interior_path_light_at_distance_3", "path": path, "pair": [path[a], path[b]]})
    return out
