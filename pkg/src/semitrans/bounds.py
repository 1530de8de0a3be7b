"""Exact combinatorial invariants and the semi-transitivity classifier.

Closed forms (chromatic numbers, independence/clique numbers, the binomial
gap inequality) are evaluated in exact integer arithmetic; small-instance
search routines (exact chromatic number, maximum independent set, clique
search) serve as independent oracles for them.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, _bits

SEMI_TRANSITIVE = "SemiTransitive"
NOT_SEMI_TRANSITIVE = "NotSemiTransitive"
UNKNOWN = "Unknown"


def binomial(n: int, k: int) -> int:
    """C(n,k) in exact arbitrary precision; rejects k > n and negatives."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial needs nonnegative arguments, got ({n},{k})")
    if k > n:
        raise ValueError(f"binomial needs k <= n, got ({n},{k})")
    return math.comb(n, k)


def kneser_chromatic(n: int, k: int) -> int:
    """Chromatic number of K(n,k): n - 2k + 2, valid for n >= 2k - 1."""
    if k < 1 or n < k:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    if n < 2 * k - 1:
        raise ValueError(f"formula requires n >= 2k-1, got n={n}, k={k}")
    return n - 2 * k + 2


def complement_chromatic(n: int, k: int) -> int:
    """Chromatic number of the complement of K(n,k): ceil(C(n,k)/floor(n/k))."""
    if k < 1 or n < k:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    groups = n // k
    return -(-binomial(n, k) // groups)


def ekr_independence(n: int, k: int) -> int:
    """Independence number of K(n,k) for n >= 2k: C(n-1,k-1).

    Equals the largest clique of the complement.  Below n = 2k the graph is
    edgeless and the formula does not apply.
    """
    if k < 1 or n < k:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return binomial(n - 1, k - 1)


def has_clique_threshold(n: int, k: int, c: int) -> bool:
    """Does K(n,k) contain a clique of size c?  True iff n >= c*k."""
    if c < 1:
        raise ValueError(f"need c >= 1, got {c}")
    if k < 1 or n < k:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return n >= c * k


def lemma14_holds(k: int) -> tuple[bool, int, Fraction]:
    """Evaluate C(2k,k-1) + k < C(2k+1,k)/2 - 2 exactly.

    Returns (holds, left side, right side).  The comparison is done over
    integers by clearing the halving denominator.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    left = binomial(2 * k, k - 1) + k
    right = Fraction(binomial(2 * k + 1, k), 2) - 2
    holds = 2 * left < binomial(2 * k + 1, k) - 4
    return holds, left, right


# --- small-instance exact oracles -------------------------------------------


def _greedy_clique(g: Graph) -> list[int]:
    order = sorted(range(g.vertex_count), key=lambda u: -g.degree(u))
    clique: list[int] = []
    cand = (1 << g.vertex_count) - 1
    for u in order:
        if cand >> u & 1:
            clique.append(u)
            cand &= g.adj[u]
    return clique


def find_coloring(
    g: Graph, colors: int, time_ms: float | None = 10_000
) -> list[int] | None:
    """A proper coloring with the given number of colors, or None.

    Backtracking with saturation-first vertex selection; a greedily found
    clique is pre-colored to break color symmetry.  Returns None either when
    no such coloring exists or when the time budget runs out; call
    exact_chromatic to distinguish.
    """
    deadline = None if time_ms is None else time.monotonic() + time_ms / 1000.0
    try:
        return _try_color(g, colors, deadline)
    except _ColoringBudget:
        return None


def _try_color(g: Graph, colors: int, deadline: float | None) -> list[int] | None:
    """None means proven uncolorable; budget exhaustion raises instead."""
    n = g.vertex_count
    if n == 0:
        return []
    if colors < 1:
        return None
    clique = _greedy_clique(g)
    if len(clique) > colors:
        return None
    assignment = [-1] * n
    used_masks = [0] * n  # bitmask of colors seen on colored neighbours
    for i, u in enumerate(clique):
        assignment[u] = i
        for w in _bits(g.adj[u]):
            used_masks[w] |= 1 << i
    uncolored = [u for u in range(n) if assignment[u] == -1]
    ticks = 0

    def pick() -> int | None:
        best = None
        best_key = None
        for u in uncolored:
            if assignment[u] != -1:
                continue
            key = (-used_masks[u].bit_count(), -g.degree(u), u)
            if best_key is None or key < best_key:
                best, best_key = u, key
        return best

    max_used = len(clique)

    def extend(remaining: int, max_used: int) -> bool:
        nonlocal ticks
        ticks += 1
        if deadline is not None and ticks % 256 == 0:
            if time.monotonic() > deadline:
                raise _ColoringBudget
        if remaining == 0:
            return True
        u = pick()
        assert u is not None
        # trying one brand-new color is enough; higher ones are symmetric
        limit = min(colors, max_used + 1)
        for c in range(limit):
            if used_masks[u] >> c & 1:
                continue
            assignment[u] = c
            touched = []
            for w in _bits(g.adj[u]):
                if not used_masks[w] >> c & 1:
                    used_masks[w] |= 1 << c
                    touched.append(w)
            if extend(remaining - 1, max(max_used, c + 1)):
                return True
            assignment[u] = -1
            for w in touched:
                used_masks[w] &= ~(1 << c)
        return False

    if extend(len(uncolored), max_used):
        return assignment
    return None


class _ColoringBudget(Exception):
    pass


def exact_chromatic(g: Graph, time_ms: float | None = 30_000) -> int | None:
    """Exact chromatic number by iterative deepening, None on budget exhaustion."""
    n = g.vertex_count
    if n == 0:
        return 0
    if g.edge_count == 0:
        return 1
    deadline = None if time_ms is None else time.monotonic() + time_ms / 1000.0
    lower = len(_greedy_clique(g))
    try:
        for c in range(max(lower, 2), n + 1):
            coloring = _try_color(g, c, deadline)
            if coloring is not None:
                return c
    except _ColoringBudget:
        return None
    return n


def max_independent_set(g: Graph) -> int:
    """Exact maximum independent set size by branch and bound."""
    adj = g.adj
    best = 0

    def grab(size: int, cand: int) -> None:
        nonlocal best
        while cand:
            if size + cand.bit_count() <= best:
                return
            # take isolated / degree-<=1 vertices greedily (always safe)
            pick = -1
            max_deg = -1
            rem = cand
            while rem:
                low = rem & -rem
                rem ^= low
                u = low.bit_length() - 1
                d = (adj[u] & cand).bit_count()
                if d <= 1:
                    size += 1
                    cand &= ~(low | adj[u])
                    pick = -2
                    break
                if d > max_deg:
                    max_deg, pick = d, u
            if pick == -2:
                continue
            if pick < 0:
                break
            # branch: exclude the max-degree vertex, or take it
            grab(size, cand & ~(1 << pick))
            size += 1
            cand &= ~((1 << pick) | adj[pick])
        if size > best:
            best = size

    grab(0, (1 << g.vertex_count) - 1)
    return best


def has_clique(g: Graph, c: int) -> bool:
    """Explicit clique-of-size-c search (oracle for has_clique_threshold)."""
    if c < 1:
        raise ValueError(f"need c >= 1, got {c}")
    if c == 1:
        return g.vertex_count >= 1
    adj = g.adj

    def extend(cand: int, need: int) -> bool:
        if need == 0:
            return True
        if cand.bit_count() < need:
            return False
        rem = cand
        while rem:
            low = rem & -rem
            rem ^= low
            u = low.bit_length() - 1
            if extend(rem & adj[u], need - 1):
                return True
        return False

    return extend((1 << g.vertex_count) - 1, c)


# --- classifier --------------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    n: int
    k: int
    complemented: bool
    status: str  # SEMI_TRANSITIVE, NOT_SEMI_TRANSITIVE or UNKNOWN
    provenance: str

    def render(self) -> str:
        name = f"K({self.n},{self.k})" + ("^c" if self.complemented else "")
        return f"{name} {self.status} {self.provenance}"


def classify(n: int, k: int, complemented: bool = False) -> Classification:
    """Theorem-backed semi-transitivity status of K(n,k) or its complement.

    The open region for plain Kneser graphs (2k+1 < n < 15k-24, k >= 4) is
    reported Unknown, never guessed.
    """
    if k < 1 or n < k:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")

    if complemented:
        if k == 1:
            # complement of a complete graph: edgeless, trivially orientable
            return Classification(n, k, True, SEMI_TRANSITIVE, "edgeless complement")
        if n < 2 * k:
            return Classification(n, k, True, SEMI_TRANSITIVE, "complete graph")
        if n == 2 * k:
            return Classification(n, k, True, SEMI_TRANSITIVE, "complement word")
        return Classification(
            n, k, True, NOT_SEMI_TRANSITIVE, "complement K(2k+1,k) + heredity"
        )

    if k == 1:
        return Classification(n, k, False, SEMI_TRANSITIVE, "complete graph")
    if n <= 2 * k + 1:
        return Classification(n, k, False, SEMI_TRANSITIVE, "3-colourable")
    if k == 2:
        return Classification(n, k, False, NOT_SEMI_TRANSITIVE, "K(6,2) heredity")
    if k == 3:
        return Classification(
            n, k, False, NOT_SEMI_TRANSITIVE,
            "computational S certificate + heredity",
        )
    if n >= 15 * k - 24:
        return Classification(n, k, False, NOT_SEMI_TRANSITIVE, "15k-24 padding")
    return Classification(n, k, False, UNKNOWN, "gap(2k+1,15k-24)")
