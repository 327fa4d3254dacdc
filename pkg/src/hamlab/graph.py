"""Simple undirected graphs on vertices ``0..n-1`` with bitset adjacency.

Every row of the adjacency relation is stored as a Python ``int`` used as a
bitset, so neighbourhood intersections, candidate filtering and component
searches are single integer operations.  Graphs are immutable; anything that
"modifies" a graph returns a new one.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from typing import Optional

MAX_ORDER = 512
MAX_PATTERN_ORDER = 16

Embedding = tuple[int, ...]


class GraphError(ValueError):
    pass


class ParseError(GraphError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Immutable simple graph.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitset.  Two graphs compare
    equal when they have the same order and the same edge set.
    """

    __slots__ = ("n", "adj", "_deg")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), *, max_order: int = MAX_ORDER):
        if n < 0:
            raise GraphError("order must be non-negative")
        if n > max_order:
            raise GraphError(f"order {n} exceeds the configured cap {max_order}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.adj: tuple[int, ...] = tuple(rows)
        self._deg = tuple(r.bit_count() for r in rows)

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        n = len(rows)
        full = (1 << n) - 1
        for v, r in enumerate(rows):
            if r >> v & 1:
                raise GraphError(f"self-loop at {v}")
            if r & ~full:
                raise GraphError(f"row {v} references vertices outside 0..{n - 1}")
            for u in bits(r):
                if not rows[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at ({v}, {u})")
        g = cls.__new__(cls)
        g.n = n
        g.adj = tuple(rows)
        g._deg = tuple(r.bit_count() for r in rows)
        return g

    # basic queries

    @property
    def m(self) -> int:
        return sum(self._deg) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._deg

    def degree(self, v: int) -> int:
        return self._deg[v]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def is_clique(self, mask: int) -> bool:
        for v in bits(mask):
            if (mask & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    # derived graphs

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.adj)
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph.from_rows(rows)

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.adj)
        for u, v in edges:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph.from_rows(rows)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabelled by position in the sequence."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise GraphError("repeated vertex in induced subgraph")
        edges = [(index[u], index[v]) for u in vertices for v in bits(self.adj[u]) if v in index and index[u] < index[v]]
        return Graph(len(vertices), edges)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        return Graph(self.n + other.n, self.edges() + [(u + shift, v + shift) for u, v in other.edges()])

    # dunder

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# constructors for common graphs

def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def line_graph(g: Graph) -> Graph:
    edges = g.edges()
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    out = set()
    for inc in incident:
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                out.add((inc[a], inc[b]))
    return Graph(len(edges), out)


# connectivity

def components(g: Graph, mask: Optional[int] = None) -> list[int]:
    """Connected components of ``g[mask]`` as bitsets, ordered by lowest vertex."""
    if mask is None:
        mask = g.vertex_mask
    out = []
    adj = g.adj
    while mask:
        seed = mask & -mask
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            nxt &= mask & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        mask &= ~comp
    return out


def is_connected(g: Graph, mask: Optional[int] = None) -> bool:
    if mask is None:
        mask = g.vertex_mask
    return len(components(g, mask)) <= 1


def cut_vertices(g: Graph) -> list[int]:
    full = g.vertex_mask
    base = len(components(g))
    return [v for v in range(g.n) if len(components(g, full & ~(1 << v))) > base]


def is_two_connected(g: Graph) -> bool:
    """At least 3 vertices, connected, and no cut vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    full = g.vertex_mask
    return all(is_connected(g, full & ~(1 << v)) for v in range(g.n))


def is_nonseparable(g: Graph, mask: int) -> bool:
    """Connected with no cut vertex; K1 and K2 count as nonseparable."""
    size = mask.bit_count()
    if size == 0 or not is_connected(g, mask):
        return False
    if size <= 2:
        return True
    return all(is_connected(g, mask & ~(1 << v)) for v in bits(mask))


def shortest_path(g: Graph, u: int, v: int, allowed: Optional[int] = None) -> Optional[list[int]]:
    """BFS path from ``u`` to ``v`` whose internal vertices all lie in ``allowed``."""
    if u == v:
        return [u]
    if allowed is None:
        allowed = g.vertex_mask
    allowed &= ~(1 << u)
    parent = {u: -1}
    frontier = [u]
    while frontier:
        nxt = []
        for a in frontier:
            if g.adj[a] >> v & 1:
                path = [v, a]
                while parent[a] != -1:
                    a = parent[a]
                    path.append(a)
                return path[::-1]
            for b in bits(g.adj[a] & allowed):
                if b not in parent:
                    parent[b] = a
                    nxt.append(b)
        frontier = nxt
    return None


def distances_from(g: Graph, source: int) -> list[int]:
    """BFS distances; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for a in frontier:
            for b in bits(g.adj[a]):
                if dist[b] < 0:
                    dist[b] = d
                    nxt.append(b)
        frontier = nxt
    return dist


# heaviness

def is_heavy_vertex(g: Graph, v: int) -> bool:
    return 2 * g.degree(v) >= g.n


def is_heavy_pair(g: Graph, u: int, v: int) -> bool:
    if u == v:
        raise GraphError("a heavy pair needs two distinct vertices")
    return g.degree(u) + g.degree(v) >= g.n


def heavy_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if 2 * g.degree(v) >= g.n]


# induced subgraph enumeration

def _search_order(pattern: Graph) -> list[int]:
    # BFS from a max-degree vertex so every new position is constrained by an earlier neighbour
    order: list[int] = []
    seen = 0
    while len(order) < pattern.n:
        rest = [v for v in range(pattern.n) if not seen >> v & 1]
        root = max(rest, key=lambda v: (pattern.degree(v), -v))
        seen |= 1 << root
        queue = [root]
        while queue:
            a = queue.pop(0)
            order.append(a)
            for b in sorted(bits(pattern.adj[a] & ~seen), key=lambda v: (-pattern.degree(v), v)):
                seen |= 1 << b
                queue.append(b)
    return order


def enumerate_induced(g: Graph, pattern: Graph) -> Iterator[Embedding]:
    """Yield every injective map whose image induces ``pattern`` exactly.

    The yielded tuple ``e`` maps pattern vertex ``i`` to host vertex ``e[i]``.
    Each automorphism of the pattern produces its own embedding; callers that
    want one embedding per copy must deduplicate.
    """
    k = pattern.n
    if k > MAX_PATTERN_ORDER:
        raise GraphError(f"pattern order {k} exceeds {MAX_PATTERN_ORDER}")
    if k == 0 or k > g.n:
        return
    order = _search_order(pattern)
    pos = {p: i for i, p in enumerate(order)}
    # for position i: (earlier positions that must be adjacent, earlier positions that must not be)
    links = []
    for i, p in enumerate(order):
        on = [pos[q] for q in bits(pattern.adj[p]) if pos[q] < i]
        off = [j for j in range(i) if not pattern.adj[p] >> order[j] & 1]
        links.append((on, off))
    full = g.vertex_mask
    degree_ok = []
    for p in order:
        need = pattern.degree(p)
        degree_ok.append(to_mask(v for v in range(g.n) if g.degree(v) >= need))
    adj = g.adj
    image = [0] * k

    def extend(i: int, used: int) -> Iterator[Embedding]:
        cand = degree_ok[i] & ~used
        on, off = links[i]
        for j in on:
            cand &= adj[image[j]]
        for j in off:
            cand &= ~adj[image[j]]
        cand &= full
        for v in bits(cand):
            image[i] = v
            if i + 1 == k:
                out = [0] * k
                for t, p in enumerate(order):
                    out[p] = image[t]
                yield tuple(out)
            else:
                yield from extend(i + 1, used | (1 << v))

    yield from extend(0, 0)


def is_induced_copy(g: Graph, pattern: Graph, embedding: Sequence[int]) -> bool:
    if len(embedding) != pattern.n or len(set(embedding)) != pattern.n:
        return False
    if any(not 0 <= v < g.n for v in embedding):
        return False
    for i in range(pattern.n):
        for j in range(i + 1, pattern.n):
            if pattern.has_edge(i, j) != g.has_edge(embedding[i], embedding[j]):
                return False
    return True


def induced_paths(g: Graph, order: int) -> Iterator[Embedding]:
    """Induced paths on ``order`` vertices, one orientation each (first < last)."""
    for e in enumerate_induced(g, path_graph(order)):
        if order == 1 or e[0] < e[-1]:
            yield e


# text formats

def read_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("empty input", 1)
    lineno, head = rows[0]
    if len(head) != 2:
        raise ParseError(f"expected header 'n m', got {' '.join(head)!r}", lineno)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("header values must be integers", lineno) from None
    if n < 0 or m < 0:
        raise ParseError("header values must be non-negative", lineno)
    if n > MAX_ORDER:
        raise ParseError(f"order {n} exceeds the configured cap {MAX_ORDER}", lineno)
    if len(rows) - 1 != m:
        raise ParseError(f"header announces {m} edges but {len(rows) - 1} edge lines follow", lineno)
    seen = set()
    edges = []
    for lineno, parts in rows[1:]:
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {' '.join(parts)!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("vertex ids must be integers", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"self-loop at {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def _g6_size(data: bytes) -> tuple[int, int]:
    if data[0] != 126:
        return data[0] - 63, 1
    if data[1] != 126:
        return (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63), 4
    n = 0
    for c in data[2:8]:
        n = n << 6 | (c - 63)
    return n, 8


def read_graph6(line: str) -> Graph:
    """Decode one graph6 string (an optional ``>>graph6<<`` header is ignored)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = s.encode("ascii")
    if not data or any(c < 63 or c > 126 for c in data):
        raise ParseError(f"not a graph6 string: {line.strip()!r}")
    n, offset = _g6_size(data)
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[offset:]
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    stream = []
    for c in body:
        x = c - 63
        stream.extend((x >> (5 - i)) & 1 for i in range(6))
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if stream[k]:
                edges.append((u, v))
            k += 1
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n + 63]
    elif n < 258048:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    stream = [1 if g.has_edge(u, v) else 0 for v in range(1, n) for u in range(v)]
    stream += [0] * (-len(stream) % 6)
    body = [63 + int("".join(map(str, stream[i:i + 6])), 2) for i in range(0, len(stream), 6)]
    return bytes(head + body).decode("ascii")


def read_graph_text(text: str) -> list[Graph]:
    """Edge-list text gives one graph; otherwise every non-empty line is graph6."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ParseError("empty input", 1)
    first = lines[0].split()
    if len(first) == 2 and all(t.lstrip("-").isdigit() for t in first):
        return [read_edge_list(text)]
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.strip() and not raw.lstrip().startswith("#"):
            try:
                out.append(read_graph6(raw))
            except ParseError as exc:
                raise ParseError(str(exc), lineno) from None
    return out
