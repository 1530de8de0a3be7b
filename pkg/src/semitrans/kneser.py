"""Generators for Kneser graphs K(n,k), their complements and related datasets.

Vertices of K(n,k) are the k-element subsets of {1,...,n} in lexicographic
order; two vertices are adjacent iff the subsets are disjoint.  Labels
concatenate the members, wrapping multi-digit members in parentheses, so
{2,9,10} renders as ``29(10)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graphs import Graph, from_adjacency, induced_subgraph


@dataclass(frozen=True, order=True)
class KSubset:
    """A k-element subset of {1,...,n}; ordering is lexicographic."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        if not self.members:
            raise ValueError("empty subset")
        prev = 0
        for m in self.members:
            if m <= prev:
                raise ValueError(f"members not strictly increasing: {self.members}")
            prev = m
        if prev > self.n:
            raise ValueError(f"member {prev} exceeds ground set size {self.n}")

    @property
    def k(self) -> int:
        return len(self.members)

    def label(self) -> str:
        return "".join(str(m) if m < 10 else f"({m})" for m in self.members)

    def mask(self) -> int:
        out = 0
        for m in self.members:
            out |= 1 << (m - 1)
        return out

    def disjoint(self, other: "KSubset") -> bool:
        return not self.mask() & other.mask()


def _check_params(n: int, k: int) -> None:
    if k < 1 or n < k:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")


def k_subsets(n: int, k: int) -> list[KSubset]:
    """All C(n,k) subsets in lexicographic order of member sequences."""
    _check_params(n, k)
    return [KSubset(n, c) for c in combinations(range(1, n + 1), k)]


def kneser_graph(n: int, k: int, complemented: bool = False) -> Graph:
    """K(n,k): subsets adjacent iff disjoint; complemented: iff intersecting."""
    subsets = k_subsets(n, k)
    masks = [s.mask() for s in subsets]
    count = len(subsets)
    adj = [0] * count
    for i in range(count):
        mi = masks[i]
        row = 0
        for j in range(count):
            if j == i:
                continue
            hit = not (mi & masks[j]) if not complemented else bool(mi & masks[j])
            if hit:
                row |= 1 << j
        adj[i] = row
    return from_adjacency([s.label() for s in subsets], adj)


def lex_prefix_subgraph(n: int, k: int, m: int, complemented: bool = False) -> Graph:
    """Induced subgraph on the m lexicographically smallest vertices."""
    _check_params(n, k)
    total = comb(n, k)
    if not 1 <= m <= total:
        raise ValueError(f"prefix size {m} out of range 1..{total}")
    g = kneser_graph(n, k, complemented)
    return induced_subgraph(g, g.labels[:m])


# The 16-vertex, 36-edge minimal non-semi-transitive induced subgraph of
# K(8,3).  Triples are listed in the dataset's own vertex order; edges are a
# hard-coded transcription, cross-validated against the disjointness relation
# by the test suite (double entry).
FIGURE1_TRIPLES: tuple[tuple[int, int, int], ...] = (
    (3, 5, 7),
    (4, 6, 8),
    (1, 2, 8),
    (1, 4, 6),
    (1, 4, 8),
    (1, 6, 8),
    (1, 2, 7),
    (2, 3, 5),
    (2, 3, 7),
    (2, 5, 7),
    (3, 4, 6),
    (3, 4, 5),
    (2, 5, 8),
    (4, 5, 8),
    (1, 6, 7),
    (3, 6, 7),
)

# 1-based vertex pairs in the order above.
_FIGURE1_EDGES: tuple[tuple[int, int], ...] = (
    (1, 2), (1, 3), (1, 4), (1, 5), (1, 6),
    (2, 7), (2, 8), (2, 9), (2, 10),
    (3, 11), (3, 12), (3, 16),
    (7, 12), (7, 11), (7, 14),
    (4, 8), (4, 9), (4, 10), (4, 13),
    (5, 8), (5, 9), (5, 10), (5, 16),
    (6, 8), (6, 9), (6, 10), (6, 12),
    (8, 15),
    (9, 14),
    (10, 11),
    (13, 15), (13, 16), (13, 11),
    (14, 15), (14, 16),
    (12, 15),
)


def figure1_graph() -> Graph:
    """The 16-vertex, 36-edge triangle-free certificate subgraph of K(8,3)."""
    subsets = [KSubset(8, t) for t in FIGURE1_TRIPLES]
    labels = [s.label() for s in subsets]
    adj = [0] * 16
    for a, b in _FIGURE1_EDGES:
        u, v = a - 1, b - 1
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return from_adjacency(labels, adj)


def pad_embedding(k: int) -> dict[KSubset, KSubset]:
    """Embed the fifteen 2-subsets of [6] into K(15k-24, k).

    Each 2-subset {a,b} maps to {a,b} plus a private block of k-2 fresh
    elements from {7,...,15k-24}, blocks assigned in lexicographic order of
    the 2-subsets.  Distinct images never share padding elements, so the
    image induces a copy of K(6,2).
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    ground = 15 * k - 24
    pad = k - 2
    mapping: dict[KSubset, KSubset] = {}
    nxt = 7
    for base in k_subsets(6, 2):
        block = tuple(range(nxt, nxt + pad))
        nxt += pad
        mapping[base] = KSubset(ground, base.members + block)
    return mapping
