"""Exact Hamiltonicity decisions with certificates that can be re-checked independently."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb
from typing import Optional, Sequence, Union

from .graph import Graph, bits, components, to_mask

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8


class BudgetExhausted(Exception):
    pass


@dataclass(frozen=True)
class Cycle:
    order: tuple[int, ...]
    kind: str = field(default="cycle", init=False)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "cycle": list(self.order)}


@dataclass(frozen=True)
class ExhaustedSearch:
    nodes: int
    budget: int = DEFAULT_BUDGET
    kind: str = field(default="exhausted_search", init=False)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "nodes": self.nodes, "budget": self.budget}


@dataclass(frozen=True)
class CutWitness:
    separator: tuple[int, ...]
    kind: str = field(default="cut", init=False)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "separator": list(self.separator)}


@dataclass(frozen=True)
class ThreeChannelWitness:
    """Apex triangle ``a1 a2 a3``; channel ``C_i`` is attached to the rest only through ``a_i`` and ``port_i``.

    Every neighbour of ``a_i`` lies in ``C_i``, is ``port_i``, or is another
    apex vertex.  A Hamilton cycle would cross each channel exactly once,
    entering at ``a_i`` and leaving at ``port_i``, so each apex vertex keeps
    exactly one cycle edge inside the triangle: three edge-ends, an odd count.
    """

    apex: tuple[int, int, int]
    channels: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    ports: tuple[int, int, int]
    kind: str = field(default="three_channel", init=False)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "apex": list(self.apex),
            "channels": [list(c) for c in self.channels],
            "ports": list(self.ports),
        }


Certificate = Union[Cycle, ExhaustedSearch, CutWitness, ThreeChannelWitness]


@dataclass(frozen=True)
class Check:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class SearchResult:
    status: str  # "found" | "none" | "inconclusive"
    cycle: Optional[tuple[int, ...]]
    nodes: int
    budget: int


@dataclass
class HamDecision:
    hamiltonian: Optional[bool]
    certificate: Optional[Certificate]
    nodes: int = 0
    method: str = ""

    @property
    def inconclusive(self) -> bool:
        return self.hamiltonian is None

    def to_dict(self) -> dict:
        return {
            "hamiltonian": self.hamiltonian,
            "method": self.method,
            "nodes": self.nodes,
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
        }


# exhaustive search

def find_hamiltonian_cycle(g: Graph, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Depth-first path extension with pruning.

    Pruning: every unvisited vertex keeps two usable neighbours; a vertex whose
    only usable neighbours are the path end and one other is taken next; the
    unvisited part stays connected.  Among unvisited twins (same neighbourhood,
    so swapping them is an automorphism fixing the path) only the lowest is
    tried.  Neighbours are tried lowest available degree first.
    ``status == "none"`` only after the whole tree is exhausted.
    """
    n = g.n
    if n < 3 or min(g.degrees) < 2:
        return SearchResult("none", None, 0, budget)
    adj = g.adj
    lower_twins = _lower_twins(g)
    full = g.vertex_mask
    start = min(range(n), key=lambda v: (g.degree(v), v))
    sbit = 1 << start
    path = [start]
    nodes = 0

    def dfs(v: int, visited: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted
        if len(path) == n:
            return bool(adj[v] & sbit)
        unvisited = full & ~visited
        ends = (1 << v) | sbit
        live = unvisited | ends
        forced = -1
        need_start = 0
        for u in bits(unvisited):
            avail = adj[u] & live
            c = avail.bit_count()
            if c < 2:
                return False
            if c == 2 and v != start:
                if avail >> v & 1:
                    if forced >= 0:
                        return False
                    forced = u
                elif avail & sbit:
                    need_start += 1
                    if need_start > 1:
                        return False
        nxt = adj[v] & unvisited
        if not nxt:
            return False
        if v != start and not adj[start] & unvisited:
            return False
        if len(components(g, unvisited)) > 1:
            return False
        if forced >= 0:
            if not nxt >> forced & 1:
                return False
            order = [forced]
        else:
            order = sorted(
                (u for u in bits(nxt) if not lower_twins[u] & unvisited),
                key=lambda u: ((adj[u] & live).bit_count(), u),
            )
        for u in order:
            path.append(u)
            if dfs(u, visited | (1 << u)):
                return True
            path.pop()
        return False

    try:
        found = dfs(start, sbit)
    except BudgetExhausted:
        return SearchResult("inconclusive", None, nodes, budget)
    if found:
        return SearchResult("found", tuple(path), nodes, budget)
    return SearchResult("none", None, nodes, budget)


def _lower_twins(g: Graph) -> list[int]:
    """For each vertex, the lower-indexed vertices in its twin class, as a mask.

    Classes use equal closed neighbourhoods, or equal open neighbourhoods for
    vertices without a closed twin; transposing two members is an automorphism.
    """
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    out = [0] * g.n
    for v in range(g.n):
        same = to_mask(u for u in range(v) if closed[u] == closed[v])
        if not same and not any(closed[u] == closed[v] for u in range(v + 1, g.n)):
            same = to_mask(
                u for u in range(v)
                if g.adj[u] == g.adj[v] and not any(closed[w] == closed[u] for w in range(g.n) if w != u)
            )
        out[v] = same
    return out


# cut witnesses

def _cut_holds(g: Graph, sep: Sequence[int]) -> bool:
    rest = g.vertex_mask & ~to_mask(sep)
    c = len(components(g, rest))
    return c > len(sep) if sep else c > 1


def find_cut_witness(g: Graph, max_size: int = 3, max_subsets: Optional[int] = None) -> Optional[CutWitness]:
    """Smallest ``S`` (then lexicographically first) with more components in ``g - S`` than ``|S|``.

    The empty set counts only when ``g`` itself is disconnected.
    """
    if max_size > 5:
        raise ValueError("max_size is capped at 5")
    tried = 0
    for size in range(0, min(max_size, g.n) + 1):
        if max_subsets is not None:
            tried += comb(g.n, size)
            if tried > max_subsets:
                break
        for sep in combinations(range(g.n), size):
            if _cut_holds(g, sep):
                return CutWitness(sep)
    return None


# three-channel witnesses

def certify_three_channel(
    g: Graph,
    apex: Sequence[int],
    channels: Sequence[Sequence[int]],
    ports: Sequence[int],
) -> Optional[ThreeChannelWitness]:
    cert = ThreeChannelWitness(
        tuple(apex), tuple(tuple(sorted(c)) for c in channels), tuple(ports)  # type: ignore[arg-type]
    )
    return cert if _check_three_channel(g, cert) else None


def _check_three_channel(g: Graph, cert: ThreeChannelWitness) -> Check:
    apex, channels, ports = cert.apex, cert.channels, cert.ports
    if len(apex) != 3 or len(channels) != 3 or len(ports) != 3:
        return Check(False, "need three apex vertices, channels and ports")
    every = list(apex) + list(ports) + [v for c in channels for v in c]
    if any(not 0 <= v < g.n for v in every):
        return Check(False, "vertex out of range")
    if len(set(apex)) != 3:
        return Check(False, "apex vertices not distinct")
    for a, b in combinations(apex, 2):
        if not g.has_edge(a, b):
            return Check(False, f"apex vertices {a},{b} not adjacent")
    apex_mask = to_mask(apex)
    for a, chan, p in zip(apex, channels, ports):
        cmask = to_mask(chan)
        if not cmask:
            return Check(False, f"empty channel at apex {a}")
        if p in apex or cmask >> p & 1 or cmask & apex_mask:
            return Check(False, f"channel/port of apex {a} overlaps the apex or each other")
        boundary = 0
        for v in bits(cmask):
            boundary |= g.adj[v]
        boundary &= ~cmask
        if boundary != (1 << a) | (1 << p):
            return Check(False, f"channel of apex {a} touches {sorted(bits(boundary))}, expected {{{a},{p}}}")
        if g.adj[a] & ~(cmask | (1 << p) | apex_mask):
            return Check(False, f"apex {a} has neighbours outside its channel, port and the apex triangle")
    return Check(True, "")


def detect_three_channel(g: Graph) -> Optional[ThreeChannelWitness]:
    """Look for the template with single degree-2 bottlenecks as channels."""
    plan = {}
    for a in range(g.n):
        for b in bits(g.adj[a]):
            if g.degree(b) != 2:
                continue
            p = next(u for u in bits(g.adj[b]) if u != a)
            rest = g.adj[a] & ~((1 << b) | (1 << p))
            if rest.bit_count() == 2:
                plan.setdefault(a, (b, p, rest))
    for a, (_, _, rest) in plan.items():
        trio = sorted([a, *bits(rest)])
        if all(v in plan and plan[v][2] == to_mask(trio) & ~(1 << v) for v in trio):
            cert = certify_three_channel(g, trio, [[plan[v][0]] for v in trio], [plan[v][1] for v in trio])
            if cert is not None:
                return cert
    return None


# verification

def verify_certificate(g: Graph, cert: Certificate) -> Check:
    if isinstance(cert, Cycle):
        order = cert.order
        if len(order) != g.n or g.n < 3:
            return Check(False, f"cycle has {len(order)} vertices, graph has {g.n}")
        if sorted(order) != list(range(g.n)):
            return Check(False, "cycle does not visit every vertex exactly once")
        for i in range(g.n):
            u, v = order[i], order[(i + 1) % g.n]
            if not g.has_edge(u, v):
                return Check(False, f"{u}-{v} is not an edge")
        return Check(True)
    if isinstance(cert, CutWitness):
        if len(set(cert.separator)) != len(cert.separator) or any(not 0 <= v < g.n for v in cert.separator):
            return Check(False, "malformed separator")
        if _cut_holds(g, cert.separator):
            return Check(True)
        return Check(False, "separator leaves too few components")
    if isinstance(cert, ThreeChannelWitness):
        return _check_three_channel(g, cert)
    if isinstance(cert, ExhaustedSearch):
        if g.n < 3:
            return Check(True)
        rerun = find_hamiltonian_cycle(g, cert.budget)
        if rerun.status == "none":
            return Check(True)
        return Check(False, f"re-run of the search returned {rerun.status}")
    return Check(False, f"unknown certificate {cert!r}")


def is_hamiltonian(
    g: Graph,
    roles: Optional[dict] = None,
    budget: int = DEFAULT_BUDGET,
    cut_size: int = 2,
) -> HamDecision:
    """Cheap cut witness, then a three-channel template, then exhaustive search.

    ``roles`` may carry ``apex``, ``channels`` and ``ports`` for the template.
    """
    if g.n < 3:
        return HamDecision(False, ExhaustedSearch(0, budget), 0, "order")
    cut = find_cut_witness(g, cut_size, max_subsets=50_000)
    if cut is not None:
        return HamDecision(False, cut, 0, "cut")
    cert = None
    if roles is not None:
        cert = certify_three_channel(g, roles["apex"], roles["channels"], roles["ports"])
        if cert is None:
            log.info("supplied three-channel roles do not fit; falling back")
    if cert is None:
        cert = detect_three_channel(g)
    if cert is not None:
        return HamDecision(False, cert, 0, "three_channel")
    res = find_hamiltonian_cycle(g, budget)
    if res.status == "found":
        return HamDecision(True, Cycle(res.cycle), res.nodes, "search")
    if res.status == "none":
        return HamDecision(False, ExhaustedSearch(res.nodes, budget), res.nodes, "search")
    return HamDecision(None, None, res.nodes, "search")


def hamiltonian_by_permutations(g: Graph) -> bool:
    """Brute-force oracle: try every cyclic order with vertex 0 first."""
    n = g.n
    if n < 3:
        return False
    a = [[g.has_edge(u, v) for v in range(n)] for u in range(n)]
    for perm in permutations(range(1, n)):
        if perm[0] > perm[-1]:
            continue
        if not a[0][perm[0]] or not a[perm[-1]][0]:
            continue
        if all(a[perm[i]][perm[i + 1]] for i in range(n - 2)):
            return True
    return False
