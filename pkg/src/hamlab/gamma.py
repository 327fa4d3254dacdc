"""Patterns on the six positions of an induced P6 and the P6-gamma-heavy predicate.

A pattern is a graph, loops allowed, on positions 1..6.  It is stored as a
21-bit mask: bits 0..5 are the loops 11..66 and bits 6..20 the pairs
12, 13, ..., 56 in lexicographic order.  The heavy signature of an induced P6
uses the same encoding, so "some heavy pair sits on a pattern edge" is a
single ``&``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import Optional

from .graph import Embedding, Graph, GraphError, induced_paths

POSITIONS = range(1, 7)
PAIRS: tuple[tuple[int, int], ...] = tuple((i, i) for i in POSITIONS) + tuple(
    (i, j) for i in POSITIONS for j in POSITIONS if i < j
)
_BIT = {p: k for k, p in enumerate(PAIRS)}
FULL_MASK = (1 << len(PAIRS)) - 1


def _mirror_pair(p: tuple[int, int]) -> tuple[int, int]:
    a, b = 7 - p[1], 7 - p[0]
    return (a, b)


_MIRROR_BIT = [_BIT[_mirror_pair(p)] for p in PAIRS]


def _mirror_mask(mask: int) -> int:
    out = 0
    k = 0
    while mask:
        if mask & 1:
            out |= 1 << _MIRROR_BIT[k]
        mask >>= 1
        k += 1
    return out


def _pair(i: int, j: int) -> tuple[int, int]:
    if not (1 <= i <= 6 and 1 <= j <= 6):
        raise ValueError(f"positions must lie in 1..6, got {i}{j}")
    return (i, j) if i <= j else (j, i)


@dataclass(frozen=True, order=True)
class GammaPattern:
    mask: int = 0

    def __post_init__(self):
        if not 0 <= self.mask <= FULL_MASK:
            raise ValueError(f"mask {self.mask} outside the 21-bit range")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]]) -> "GammaPattern":
        mask = 0
        for i, j in edges:
            mask |= 1 << _BIT[_pair(i, j)]
        return cls(mask)

    @classmethod
    def parse(cls, text: str) -> "GammaPattern":
        """Parse comma-separated two-digit tokens such as ``"13,46"``; empty text is epsilon."""
        edges = []
        for tok in text.replace(" ", "").split(","):
            if not tok:
                continue
            if len(tok) != 2 or not tok.isdigit():
                raise ValueError(f"bad pattern token {tok!r}; expected two digits like '13'")
            edges.append(_pair(int(tok[0]), int(tok[1])))
        return cls.from_edges(edges)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return sorted(p for k, p in enumerate(PAIRS) if self.mask >> k & 1)

    @property
    def loops(self) -> list[int]:
        return [i for i, j in self.edges if i == j]

    def tokens(self) -> str:
        return ",".join(f"{i}{j}" for i, j in self.edges)

    def symmetric_image(self) -> "GammaPattern":
        return GammaPattern(_mirror_mask(self.mask))

    def is_symmetrical(self) -> bool:
        return self.symmetric_image().mask == self.mask

    def issubset(self, other: "GammaPattern") -> bool:
        return self.mask & ~other.mask == 0

    def __contains__(self, pair) -> bool:
        if isinstance(pair, str):
            pair = (int(pair[0]), int(pair[1]))
        return bool(self.mask >> _BIT[_pair(*pair)] & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __or__(self, other: "GammaPattern") -> "GammaPattern":
        return GammaPattern(self.mask | other.mask)

    def __and__(self, other: "GammaPattern") -> "GammaPattern":
        return GammaPattern(self.mask & other.mask)

    def __str__(self) -> str:
        return self.tokens() or "eps"


EPSILON = GammaPattern(0)
GAMMA1 = GammaPattern.parse("14,15,16,24,25,26,34,35,36")
GAMMA2 = GammaPattern.parse("11,12,14,15,16,25,26,36,56,66")
GAMMA3 = GammaPattern.parse("13,14,15,25,26,36,46")
# nonadjacent positions of the path: the P6-o-heavy condition
SIGMA = GammaPattern.from_edges((i, j) for i in POSITIONS for j in POSITIONS if j - i >= 2)
FULL = GammaPattern(FULL_MASK)


def gamma_constants() -> tuple[GammaPattern, GammaPattern, GammaPattern]:
    return GAMMA1, GAMMA2, GAMMA3


def symmetric_image(gamma: GammaPattern) -> GammaPattern:
    return gamma.symmetric_image()


def is_symmetrical(gamma: GammaPattern) -> bool:
    return gamma.is_symmetrical()


def involution_orbits() -> list[int]:
    """Orbits of the reversal i -> 7-i on the 21 possible edges, as bitmasks."""
    seen = 0
    orbits = []
    for k in range(len(PAIRS)):
        if seen >> k & 1:
            continue
        orbit = (1 << k) | (1 << _MIRROR_BIT[k])
        seen |= orbit
        orbits.append(orbit)
    return orbits


def enumerate_symmetrical() -> Iterator[GammaPattern]:
    """Every pattern fixed by the reversal, each exactly once (4096 of them)."""
    orbits = involution_orbits()
    for choice in range(1 << len(orbits)):
        mask = 0
        for k, orbit in enumerate(orbits):
            if choice >> k & 1:
                mask |= orbit
        yield GammaPattern(mask)


def theorem9_guarantees(gamma: GammaPattern) -> bool:
    """Whether hamiltonicity is guaranteed: ``gamma`` lies inside gamma1, gamma2 or gamma3."""
    if not gamma.is_symmetrical():
        raise ValueError(f"pattern not symmetrical: {gamma}")
    return any(gamma.issubset(g) for g in (GAMMA1, GAMMA2, GAMMA3))


def guarantee_split() -> tuple[int, int]:
    """(guaranteed, not guaranteed) counts over all symmetrical patterns."""
    yes = sum(1 for gm in enumerate_symmetrical() if theorem9_guarantees(gm))
    return yes, 4096 - yes


def containing_constant(gamma: GammaPattern) -> Optional[str]:
    for name, const in (("gamma1", GAMMA1), ("gamma2", GAMMA2), ("gamma3", GAMMA3)):
        if gamma.issubset(const):
            return name
    return None


# signatures of induced P6s

def _check_p6(g: Graph, emb: Sequence[int]) -> None:
    if len(emb) != 6 or len(set(emb)) != 6 or any(not 0 <= v < g.n for v in emb):
        raise GraphError(f"not a P6 embedding: {tuple(emb)}")
    for a in range(6):
        for b in range(a + 1, 6):
            if g.has_edge(emb[a], emb[b]) != (b == a + 1):
                raise GraphError(f"not an induced P6: {tuple(emb)}")


def _signature_mask(deg: Sequence[int], n: int, emb: Sequence[int]) -> int:
    mask = 0
    for k, (i, j) in enumerate(PAIRS):
        if deg[emb[i - 1]] + deg[emb[j - 1]] >= n:
            mask |= 1 << k
    return mask


def heavy_signature(g: Graph, emb: Sequence[int]) -> GammaPattern:
    """Positions ``ij`` (loops included) with ``d(v_i) + d(v_j) >= n``."""
    _check_p6(g, emb)
    return GammaPattern(_signature_mask(g.degrees, g.n, emb))


def essentially_same(g: Graph, e1: Sequence[int], e2: Sequence[int], up_to_reversal: bool = False) -> bool:
    """Equal heavy signatures position by position.

    With ``up_to_reversal`` the second path may also be read backwards.
    """
    s1 = heavy_signature(g, e1)
    s2 = heavy_signature(g, e2)
    return s1 == s2 or (up_to_reversal and s1 == s2.symmetric_image())


def oriented_p6s(g: Graph) -> Iterator[Embedding]:
    """Every induced P6 in both orientations."""
    for e in induced_paths(g, 6):
        yield e
        yield e[::-1]


def p6_signature_classes(g: Graph) -> dict[GammaPattern, Embedding]:
    """Distinct heavy signatures over all oriented induced P6s, each with a witness path.

    Witnesses are the lexicographically smallest embedding of their class.
    """
    deg = g.degrees
    out: dict[GammaPattern, Embedding] = {}
    for e in oriented_p6s(g):
        sig = GammaPattern(_signature_mask(deg, g.n, e))
        if sig not in out or e < out[sig]:
            out[sig] = e
    return out


def _hits(sig_mask: int, gamma: GammaPattern) -> bool:
    return bool(sig_mask & gamma.mask) or bool(_mirror_mask(sig_mask) & gamma.mask)


def find_bad_p6(g: Graph, gamma: GammaPattern) -> Optional[Embedding]:
    """An induced P6 on which no edge of ``gamma`` carries a heavy pair, in either orientation."""
    deg = g.degrees
    for e in induced_paths(g, 6):
        if not _hits(_signature_mask(deg, g.n, e), gamma):
            return e
    return None


def is_p6_gamma_heavy(g: Graph, gamma: GammaPattern) -> bool:
    return find_bad_p6(g, gamma) is None


def gamma_heavy_from_classes(classes: Iterable[GammaPattern], gamma: GammaPattern) -> bool:
    """Same verdict as :func:`is_p6_gamma_heavy`, from precomputed signature classes."""
    return all(_hits(sig.mask, gamma) for sig in classes)

