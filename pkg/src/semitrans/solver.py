"""Branch-and-prune search for semi-transitive orientability.

The search assigns directions edge by edge.  After every assignment a
forced-orientation propagator runs to fixpoint: for each undirected edge,
each direction is tentatively checked against the current partial state; if
only one direction survives it is forced, and if neither survives the branch
is dead.  A state is dead when its assigned arcs contain a directed cycle or
a completed shortcut, or when some still-undirected base edge closes a fully
directed long path with a missing pair (either way of orienting that edge
would then complete a cycle or a shortcut, so no extension can succeed).

Dead states stay dead as arcs are added, so pruning on them is sound both
for witnesses and for exhaustion claims.  The first branched edge is fixed
in a single direction: reversing every arc of a semi-transitive orientation
yields another one, so the mirrored half of the tree is redundant.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass

from .graphs import Graph, _bits
from .orient import (
    CYCLE,
    SHORTCUT,
    Orientation,
    PartialOrientation,
    ShortcutWitness,
    _nonadj_masks,
    find_shortcut,
    is_acyclic,
    orientation_from_arcs,
    verify_semi_transitive,
)

WITNESS = "witness"
EXHAUSTED = "exhausted"
TIMEOUT = "timeout"

FORCED = "forced"
CONFLICT = "conflict"
QUIESCENT = "quiescent"

DEFAULT_TIME_MS = 60_000


@dataclass(frozen=True)
class Conflict:
    """Both directions of `edge` lead to a dead state.

    When witnessed, `cycle` or `shortcut` holds a violation valid against
    the partial orientation extended by `assumed_arcs` (the tentative arcs
    whose application exposes the violation).
    """

    edge: tuple[int, int] | None
    kind: str | None = None
    cycle: tuple[int, ...] | None = None
    shortcut: ShortcutWitness | None = None
    assumed_arcs: tuple[tuple[int, int], ...] = ()


@dataclass(frozen=True)
class Propagation:
    status: str  # FORCED, CONFLICT or QUIESCENT
    forced: tuple[tuple[int, int], ...] = ()
    conflict: Conflict | None = None


@dataclass
class SolveStats:
    nodes: int = 0
    propagations: int = 0
    conflicts: int = 0
    elapsed_ms: float = 0.0
    branch_trace: tuple[tuple[int, int], ...] | None = None


@dataclass(frozen=True)
class SolveOutcome:
    status: str  # WITNESS, EXHAUSTED or TIMEOUT
    witness: Orientation | None
    stats: SolveStats


def _arc_would_die(po: PartialOrientation, nonadj: list[int], a: int, b: int) -> bool:
    """Would assigning a->b make the state dead?

    Any new violation runs through the new arc, so it is enough to examine
    base edges from ancestors of a to descendants of b: for such an edge
    (u,v), the vertices on directed u-v paths are B = desc'(u) & anc'(v),
    and a violation exists iff some w in B misses u or v, or some ordered
    reachable pair inside B is a base non-edge.  Closures of the current
    state are composed with the new arc in O(1) words per query.
    """
    desc, anc = po.closures()
    bit_a = 1 << a
    bit_b = 1 << b
    if desc[b] & bit_a:
        return True  # b already reaches a: the arc closes a directed cycle
    d_full = desc[b] | bit_b
    a_full = anc[a] | bit_a
    adj = po.base.adj
    out = po.out
    for u in _bits(a_full):
        du = desc[u] | d_full
        cand = adj[u] & d_full
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            if out[v] >> u & 1:
                continue  # reverse-assigned; only a cycle could use it
            bset = du & (anc[v] | a_full)
            if not bset:
                continue
            if bset & nonadj[u] or bset & nonadj[v]:
                return True
            rem = bset
            while rem:
                xlow = rem & -rem
                rem ^= xlow
                x = xlow.bit_length() - 1
                miss = bset & nonadj[x]
                if miss:
                    dx = desc[x]
                    if x == a or dx & bit_a:
                        dx |= d_full
                    if dx & miss:
                        return True
    return False


def _completed_violation(po: PartialOrientation, nonadj: list[int]) -> bool:
    """True iff the assigned arcs already contain a cycle or a shortcut."""
    closures = po.closures()
    if closures is None:
        return True
    desc, anc = closures
    for u, v in po.arcs():
        bset = desc[u] & anc[v]
        if not bset:
            continue
        if bset & nonadj[u] or bset & nonadj[v]:
            return True
        rem = bset
        while rem:
            xlow = rem & -rem
            rem ^= xlow
            x = xlow.bit_length() - 1
            miss = bset & nonadj[x]
            if miss and desc[x] & miss:
                return True
    return False


def _violation_witness(po: PartialOrientation):
    """(kind, payload) for a completed violation of the current state."""
    _, cycle = is_acyclic(po)
    if cycle is not None:
        return CYCLE, cycle
    witness = find_shortcut(po)
    if witness is not None:
        return SHORTCUT, witness
    return None


def _build_conflict(
    po: PartialOrientation, nonadj: list[int], edge: tuple[int, int]
) -> Conflict:
    """Reconstruct a concrete violation for one failing direction of edge."""
    u, v = edge
    for arc in ((u, v), (v, u)):
        mark = po.mark()
        po.assign(*arc)
        found = _violation_witness(po)
        if found is not None:
            kind, payload = found
            po.undo_to(mark)
            return Conflict(
                edge,
                kind,
                cycle=payload if kind == CYCLE else None,
                shortcut=payload if kind == SHORTCUT else None,
                assumed_arcs=(arc,),
            )
        # Death came from a doomed undirected edge: find it and complete it.
        for x, y in po.base.edges():
            if po.direction(x, y):
                continue
            inner = po.mark()
            po.assign(x, y)
            dead_fwd = _completed_violation(po, nonadj)
            po.undo_to(inner)
            if not dead_fwd:
                continue
            po.assign(y, x)
            dead_bwd = _completed_violation(po, nonadj)
            po.undo_to(inner)
            if not dead_bwd:
                continue
            po.assign(x, y)
            kind, payload = _violation_witness(po)
            po.undo_to(mark)
            return Conflict(
                edge,
                kind,
                cycle=payload if kind == CYCLE else None,
                shortcut=payload if kind == SHORTCUT else None,
                assumed_arcs=(arc, (x, y)),
            )
        po.undo_to(mark)
    return Conflict(edge)


def _propagate(
    po: PartialOrientation,
    nonadj: list[int],
    edges: list[tuple[int, int]],
    want_witness: bool,
) -> Propagation:
    """Force unique directions to fixpoint; assumes a non-dead input state.

    Forced arcs stay applied on the trail (also on conflict); callers roll
    back with mark()/undo_to().
    """
    forced: list[tuple[int, int]] = []
    tested_at = [-1] * len(edges)
    while True:
        changed = False
        for ei, (u, v) in enumerate(edges):
            if po.direction(u, v):
                continue
            now = len(po.trail)
            if tested_at[ei] == now:
                continue  # state unchanged since the last alive/alive result
            die_fwd = _arc_would_die(po, nonadj, u, v)
            die_bwd = _arc_would_die(po, nonadj, v, u)
            if die_fwd and die_bwd:
                conflict = (
                    _build_conflict(po, nonadj, (u, v))
                    if want_witness
                    else Conflict((u, v))
                )
                return Propagation(CONFLICT, tuple(forced), conflict)
            if die_fwd or die_bwd:
                arc = (v, u) if die_fwd else (u, v)
                po.assign(*arc)
                forced.append(arc)
                changed = True
            else:
                tested_at[ei] = now
        if not changed:
            break
    return Propagation(FORCED if forced else QUIESCENT, tuple(forced))


def propagate_forced(po: PartialOrientation, want_witness: bool = True) -> Propagation:
    """Public fixpoint propagation over all undirected edges.

    Also validates the input: a directed cycle or a completed shortcut among
    the already-assigned arcs is reported as an immediate Conflict.
    """
    nonadj = _nonadj_masks(po.base)
    if po.closures() is None:
        _, cycle = is_acyclic(po)
        return Propagation(
            CONFLICT, (), Conflict(None, CYCLE, cycle=cycle)
        )
    witness = find_shortcut(po)
    if witness is not None:
        return Propagation(
            CONFLICT, (), Conflict(None, SHORTCUT, shortcut=witness)
        )
    return _propagate(po, nonadj, po.base.edges(), want_witness)


class _BudgetExceeded(Exception):
    pass


def _pick_branch_edge(
    po: PartialOrientation, edges: list[tuple[int, int]]
) -> tuple[int, int]:
    """Undirected edge with the most already-directed incident edges."""
    out, inn = po.out, po.inn
    n = po.base.vertex_count
    deg = [(out[i] | inn[i]).bit_count() for i in range(n)]
    best = None
    best_score = -1
    for u, v in edges:
        if po.direction(u, v):
            continue
        score = deg[u] + deg[v]
        if score > best_score:
            best, best_score = (u, v), score
    assert best is not None
    return best


def solve(
    g: Graph,
    time_ms: float | None = DEFAULT_TIME_MS,
    max_nodes: int | None = None,
    record_trace: bool = False,
) -> SolveOutcome:
    """Decide semi-transitive orientability of g within the given budget.

    Returns a verified Witness orientation, Exhausted (the whole tree was
    explored under the reversal symmetry), or Timeout when the time or node
    budget runs out.  Deterministic: identical budgets explore identical
    node sequences.
    """
    start = time.monotonic()
    deadline = None if time_ms is None else start + time_ms / 1000.0
    stats = SolveStats(branch_trace=() if record_trace else None)
    trace: list[tuple[int, int]] = []
    n = g.vertex_count
    m = g.edge_count
    if m == 0:
        outcome = SolveOutcome(WITNESS, Orientation(g, (0,) * n), stats)
        stats.elapsed_ms = (time.monotonic() - start) * 1000.0
        return outcome

    po = PartialOrientation(g)
    nonadj = _nonadj_masks(g)
    edges = g.edges()
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * m + 200))

    def search(first: bool) -> bool:
        if deadline is not None and time.monotonic() > deadline:
            raise _BudgetExceeded
        mark = po.mark()
        result = _propagate(po, nonadj, edges, want_witness=False)
        stats.propagations += len(result.forced)
        if result.status == CONFLICT:
            stats.conflicts += 1
            po.undo_to(mark)
            return False
        if po.assigned_count == m:
            return True
        u, v = _pick_branch_edge(po, edges)
        directions = ((u, v),) if first else ((u, v), (v, u))
        for arc in directions:
            stats.nodes += 1
            if max_nodes is not None and stats.nodes > max_nodes:
                raise _BudgetExceeded
            if record_trace:
                trace.append(arc)
            amark = po.mark()
            po.assign(*arc)
            if search(False):
                return True
            po.undo_to(amark)
        po.undo_to(mark)
        return False

    status = EXHAUSTED
    witness = None
    try:
        if search(True):
            status = WITNESS
            witness = orientation_from_arcs(g, po.arcs())
            verdict = verify_semi_transitive(witness)
            if not verdict.ok:
                raise RuntimeError(f"internal error: witness fails verification: {verdict}")
    except _BudgetExceeded:
        status = TIMEOUT
    stats.elapsed_ms = (time.monotonic() - start) * 1000.0
    if record_trace:
        stats.branch_trace = tuple(trace)
    return SolveOutcome(status, witness, stats)


def exhaustive_check(g: Graph) -> Orientation | None:
    """Ground-truth oracle: try all orientations with the first edge fixed.

    Returns a verified semi-transitive orientation, or None if every
    orientation has a cycle or a shortcut.  Limited to 20 edges.
    """
    m = g.edge_count
    if m > 20:
        raise ValueError(f"exhaustive check limited to 20 edges, got {m}")
    n = g.vertex_count
    if m == 0:
        return Orientation(g, (0,) * n)
    edges = g.edges()
    from .orient import _topo_order

    for code in range(1 << (m - 1)):
        out = [0] * n
        u0, v0 = edges[0]
        out[u0] |= 1 << v0
        for i in range(1, m):
            u, v = edges[i]
            if code >> (i - 1) & 1:
                out[v] |= 1 << u
            else:
                out[u] |= 1 << v
        if _topo_order(n, out) is None:
            continue
        candidate = Orientation(g, tuple(out))
        if find_shortcut(candidate) is None:
            verdict = verify_semi_transitive(candidate)
            assert verdict.ok
            return candidate
    return None
