"""Edge orientations, acyclicity and shortcut detection.

An orientation is semi-transitive iff it is acyclic and has no shortcut: a
directed path v0 -> ... -> vk of length >= 3 whose endpoints are joined by
the directed edge v0 -> vk while some pair of path vertices is a non-edge of
the base graph.

Two independent shortcut detectors are provided: a reachability method
(per directed edge u->v, inspect the set of vertices lying on directed u-v
paths) and an exhaustive path enumeration for small neighbourhoods.  They
are cross-checked against each other in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Graph, _bits, _parse_body

SEMI_TRANSITIVE = "semi-transitive"
CYCLE = "cycle"
SHORTCUT = "shortcut"


@dataclass(frozen=True)
class Orientation:
    """A direction for every edge of the base graph.

    out[u] has bit v set iff the edge {u,v} is directed u -> v.
    """

    base: Graph
    out: tuple[int, ...]

    def __post_init__(self):
        n = self.base.vertex_count
        if len(self.out) != n:
            raise ValueError("arc mask length does not match vertex count")
        for u in range(n):
            if self.out[u] & ~self.base.adj[u]:
                raise ValueError(f"arc from {u} along a non-edge")
        for u, v in self.base.edges():
            fwd = self.out[u] >> v & 1
            bwd = self.out[v] >> u & 1
            if fwd == bwd:
                which = "both ways" if fwd else "undirected"
                raise ValueError(f"edge ({u},{v}) is {which}")

    def arcs(self) -> list[tuple[int, int]]:
        """Assigned arcs, ordered by underlying edge (u < v order)."""
        return [
            (u, v) if self.out[u] >> v & 1 else (v, u) for u, v in self.base.edges()
        ]

    def reversed(self) -> "Orientation":
        n = self.base.vertex_count
        inn = [0] * n
        for u in range(n):
            for v in _bits(self.out[u]):
                inn[v] |= 1 << u
        return Orientation(self.base, tuple(inn))


def orientation_from_arcs(base: Graph, arcs: Iterable[tuple[int, int]]) -> Orientation:
    n = base.vertex_count
    out = [0] * n
    seen: set[tuple[int, int]] = set()
    for u, v in arcs:
        if not base.has_edge(u, v):
            raise ValueError(f"arc ({u},{v}) is not a base edge")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"edge {key} directed more than once")
        seen.add(key)
        out[u] |= 1 << v
    if len(seen) != base.edge_count:
        raise ValueError("not every base edge received a direction")
    return Orientation(base, tuple(out))


class PartialOrientation:
    """Mutable direction assignment to a subset of edges, with an undo trail.

    Single-owner: not safe to share across concurrent executors.
    """

    def __init__(self, base: Graph):
        self.base = base
        n = base.vertex_count
        self.out = [0] * n
        self.inn = [0] * n
        self.trail: list[tuple[int, int]] = []
        self._closure: tuple[list[int], list[int]] | None = None
        self._closure_clean = False

    def direction(self, u: int, v: int) -> int:
        """+1 if u->v assigned, -1 if v->u, 0 if undirected."""
        if self.out[u] >> v & 1:
            return 1
        if self.out[v] >> u & 1:
            return -1
        return 0

    def assign(self, u: int, v: int) -> None:
        if not self.base.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not a base edge")
        if self.direction(u, v):
            raise ValueError(f"edge ({u},{v}) already directed")
        self.out[u] |= 1 << v
        self.inn[v] |= 1 << u
        self.trail.append((u, v))
        self._closure_clean = False

    def mark(self) -> int:
        return len(self.trail)

    def undo_to(self, mark: int) -> None:
        while len(self.trail) > mark:
            u, v = self.trail.pop()
            self.out[u] &= ~(1 << v)
            self.inn[v] &= ~(1 << u)
        self._closure_clean = False

    @property
    def assigned_count(self) -> int:
        return len(self.trail)

    def arcs(self) -> list[tuple[int, int]]:
        out = self.out
        result = []
        for u, v in self.base.edges():
            if out[u] >> v & 1:
                result.append((u, v))
            elif out[v] >> u & 1:
                result.append((v, u))
        return result

    def closures(self) -> tuple[list[int], list[int]] | None:
        """(descendants, ancestors) masks per vertex, or None if cyclic.

        Masks exclude the vertex itself.  Cached until the next assignment.
        """
        if self._closure_clean:
            return self._closure
        n = self.base.vertex_count
        order = _topo_order(n, self.out)
        if order is None:
            result = None
        else:
            desc = [0] * n
            for u in reversed(order):
                acc = 0
                for v in _bits(self.out[u]):
                    acc |= (1 << v) | desc[v]
                desc[u] = acc
            anc = [0] * n
            for v in order:
                acc = 0
                for u in _bits(self.inn[v]):
                    acc |= (1 << u) | anc[u]
                anc[v] = acc
            result = (desc, anc)
        self._closure = result
        self._closure_clean = True
        return result


def _in_masks(n: int, out: Sequence[int]) -> list[int]:
    inn = [0] * n
    for u in range(n):
        for v in _bits(out[u]):
            inn[v] |= 1 << u
    return inn


def _topo_order(n: int, out: Sequence[int]) -> list[int] | None:
    """Kahn's algorithm; smallest available vertex first. None if cyclic."""
    indeg = [0] * n
    for u in range(n):
        for v in _bits(out[u]):
            indeg[v] += 1
    ready = 0
    for v in range(n):
        if indeg[v] == 0:
            ready |= 1 << v
    order = []
    while ready:
        low = ready & -ready
        ready ^= low
        u = low.bit_length() - 1
        order.append(u)
        for v in _bits(out[u]):
            indeg[v] -= 1
            if indeg[v] == 0:
                ready |= 1 << v
    return order if len(order) == n else None


def _extract_cycle(n: int, out: Sequence[int]) -> tuple[int, ...]:
    """A directed cycle as a vertex sequence (last -> first arc implied)."""
    color = [0] * n  # 0 unseen, 1 on stack, 2 done
    path: list[int] = []

    def dfs(root: int) -> tuple[int, ...] | None:
        stack = [(root, iter(_bits(out[root])))]
        color[root] = 1
        path.append(root)
        while stack:
            u, it = stack[-1]
            advanced = False
            for v in it:
                if color[v] == 1:
                    return tuple(path[path.index(v):])
                if color[v] == 0:
                    color[v] = 1
                    path.append(v)
                    stack.append((v, iter(_bits(out[v]))))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                path.pop()
                color[u] = 2
        return None

    for root in range(n):
        if color[root] == 0:
            cyc = dfs(root)
            if cyc is not None:
                return cyc
    raise AssertionError("no cycle found in cyclic orientation")


def is_acyclic(o) -> tuple[list[int] | None, tuple[int, ...] | None]:
    """Return (topological_order, None) if acyclic, else (None, cycle).

    Accepts a full Orientation or a PartialOrientation (assigned arcs only).
    """
    n = o.base.vertex_count
    order = _topo_order(n, o.out)
    if order is not None:
        return order, None
    return None, _extract_cycle(n, o.out)


@dataclass(frozen=True)
class ShortcutWitness:
    """A long path, its shortcutting edge and a missing pair.

    path: directed vertex sequence v0..vk, k >= 3, consecutive arcs assigned.
    shortcutting_edge: the arc (v0, vk).
    missing_pair: (vi, vj) with i < j, a non-edge of the base graph.
    """

    path: tuple[int, ...]
    shortcutting_edge: tuple[int, int]
    missing_pair: tuple[int, int]


def validate_shortcut(o, w: ShortcutWitness) -> None:
    """Raise ValueError unless w satisfies its invariants against o."""
    base = o.base
    path = w.path
    if len(path) < 4:
        raise ValueError("long path must have at least 3 edges")
    if len(set(path)) != len(path):
        raise ValueError("path repeats a vertex")
    for a, b in zip(path, path[1:]):
        if not o.out[a] >> b & 1:
            raise ValueError(f"path arc ({a},{b}) not assigned")
    v0, vk = w.shortcutting_edge
    if (v0, vk) != (path[0], path[-1]):
        raise ValueError("shortcutting edge does not join the path endpoints")
    if not o.out[v0] >> vk & 1:
        raise ValueError("shortcutting edge not assigned")
    x, y = w.missing_pair
    if path.index(x) >= path.index(y):
        raise ValueError("missing pair not ordered along the path")
    if base.has_edge(x, y):
        raise ValueError(f"missing pair ({x},{y}) is an edge")


def _lex_shortest_path(out: Sequence[int], dist_to: list[int], s: int, t: int) -> list[int]:
    """Lexicographically least among shortest directed s->t paths."""
    path = [s]
    cur = s
    while cur != t:
        step = None
        for v in _bits(out[cur]):
            if dist_to[v] == dist_to[cur] - 1:
                step = v
                break
        if step is None:
            raise AssertionError("broken shortest-path walk")
        path.append(step)
        cur = step
    return path


def _dists_to(n: int, inn: Sequence[int], t: int) -> list[int]:
    dist = [-1] * n
    dist[t] = 0
    frontier = 1 << t
    d = 0
    seen = frontier
    while frontier:
        d += 1
        nxt = 0
        for v in _bits(frontier):
            nxt |= inn[v]
        nxt &= ~seen
        for v in _bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def _arc_list(o) -> list[tuple[int, int]]:
    """Assigned arcs ordered by underlying edge; works for full and partial."""
    out = o.out
    arcs = []
    for u, v in o.base.edges():
        if out[u] >> v & 1:
            arcs.append((u, v))
        elif out[v] >> u & 1:
            arcs.append((v, u))
    return arcs


def _closure_masks(n: int, out: Sequence[int]) -> tuple[list[int], list[int]]:
    order = _topo_order(n, out)
    assert order is not None
    inn = _in_masks(n, out)
    desc = [0] * n
    for u in reversed(order):
        acc = 0
        for v in _bits(out[u]):
            acc |= (1 << v) | desc[v]
        desc[u] = acc
    anc = [0] * n
    for v in order:
        acc = 0
        for u in _bits(inn[v]):
            acc |= (1 << u) | anc[u]
        anc[v] = acc
    return desc, anc


def _nonadj_masks(base: Graph) -> list[int]:
    n = base.vertex_count
    full = (1 << n) - 1
    return [full & ~base.adj[u] & ~(1 << u) for u in range(n)]


def _witness_through(out, inn, n, u, v, stops: list[int]) -> tuple[int, ...]:
    """Concatenate lex-least shortest segments u -> stops[0] -> ... -> v."""
    points = [u] + stops + [v]
    path = [u]
    for s, t in zip(points, points[1:]):
        dist_to = _dists_to(n, inn, t)
        seg = _lex_shortest_path(out, dist_to, s, t)
        path.extend(seg[1:])
    return tuple(path)


def find_shortcut(o, method: str = "reachability") -> ShortcutWitness | None:
    """Locate a shortcut in an acyclic (partial) orientation, if any.

    reachability: for each arc u->v inspect B = {w : u ~> w ~> v}; a witness
    exists iff some w in B misses u or v, or some ordered pair inside B is a
    non-edge.  exhaustive: enumerate directed u-v paths of length >= 3 and
    test each path's vertex set directly (region limited to 12 vertices).
    Raises ValueError on cyclic input.
    """
    if method not in ("reachability", "exhaustive"):
        raise ValueError(f"unknown method: {method}")
    n = o.base.vertex_count
    order = _topo_order(n, o.out)
    if order is None:
        raise ValueError("orientation contains a directed cycle")
    arcs = _arc_list(o)
    if not arcs:
        return None
    inn = _in_masks(n, o.out)
    nonadj = _nonadj_masks(o.base)
    desc, anc = _closure_masks(n, o.out)
    out = o.out

    if method == "exhaustive":
        return _find_shortcut_exhaustive(o, arcs, desc, anc, nonadj)

    for u, v in arcs:
        b = desc[u] & anc[v]
        if not b:
            continue
        hit = b & nonadj[u]
        if hit:
            w = (hit & -hit).bit_length() - 1
            path = _witness_through(out, inn, n, u, v, [w])
            return ShortcutWitness(path, (u, v), (u, w))
        hit = b & nonadj[v]
        if hit:
            w = (hit & -hit).bit_length() - 1
            path = _witness_through(out, inn, n, u, v, [w])
            return ShortcutWitness(path, (u, v), (w, v))
        for x in _bits(b):
            miss = b & nonadj[x]
            if not miss:
                continue
            reach = desc[x] & miss
            if reach:
                y = (reach & -reach).bit_length() - 1
                path = _witness_through(out, inn, n, u, v, [x, y])
                return ShortcutWitness(path, (u, v), (x, y))
    return None


def _find_shortcut_exhaustive(o, arcs, desc, anc, nonadj) -> ShortcutWitness | None:
    out = o.out
    for u, v in arcs:
        region = desc[u] & anc[v]
        if not region:
            continue
        if region.bit_count() + 2 > 12:
            raise ValueError("exhaustive method limited to 12-vertex regions")
        # DFS over simple directed u-v paths, neighbours in ascending order.
        stack: list[tuple[int, list[int]]] = [(u, [u])]
        while stack:
            cur, path = stack.pop()
            if cur == v:
                if len(path) >= 4:
                    for i in range(len(path)):
                        for j in range(i + 1, len(path)):
                            if nonadj[path[i]] >> path[j] & 1:
                                return ShortcutWitness(
                                    tuple(path), (u, v), (path[i], path[j])
                                )
                continue
            nxt = out[cur] & (region | (1 << v))
            # push in descending order so the lex-least extension pops first
            for w in reversed(list(_bits(nxt))):
                if w not in path:
                    stack.append((w, path + [w]))
    return None


@dataclass(frozen=True)
class Verdict:
    status: str  # SEMI_TRANSITIVE, CYCLE or SHORTCUT
    cycle: tuple[int, ...] | None = None
    shortcut: ShortcutWitness | None = None

    @property
    def ok(self) -> bool:
        return self.status == SEMI_TRANSITIVE


def verify_semi_transitive(o: Orientation) -> Verdict:
    """Full verdict: acyclic and shortcut-free, or a concrete witness."""
    _, cycle = is_acyclic(o)
    if cycle is not None:
        return Verdict(CYCLE, cycle=cycle)
    witness = find_shortcut(o)
    if witness is not None:
        return Verdict(SHORTCUT, shortcut=witness)
    return Verdict(SEMI_TRANSITIVE)


def longest_directed_path(o) -> tuple[int, tuple[int, ...]]:
    """Exact longest directed path (edge count, witness) by DP on a DAG."""
    n = o.base.vertex_count
    order = _topo_order(n, o.out)
    if order is None:
        raise ValueError("orientation contains a directed cycle")
    inn = _in_masks(n, o.out)
    length = [0] * n
    parent = [-1] * n
    for v in order:
        for u in _bits(inn[v]):
            if length[u] + 1 > length[v]:
                length[v] = length[u] + 1
                parent[v] = u
    best = 0
    for v in range(n):
        if length[v] > length[best]:
            best = v
    path = [best]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    path.reverse()
    return length[best], tuple(path)


def orientation_from_coloring(g: Graph, coloring: Sequence[int]) -> Orientation:
    """Direct every edge from the smaller colour to the larger colour.

    With at most 3 colours the result is always semi-transitive: the longest
    directed path has length 2, one short of a shortcut.
    """
    n = g.vertex_count
    if len(coloring) != n:
        raise ValueError("coloring length does not match vertex count")
    out = [0] * n
    for u, v in g.edges():
        if coloring[u] == coloring[v]:
            raise ValueError(
                f"improper coloring: edge ({g.labels[u]}, {g.labels[v]}) "
                f"is monochromatic"
            )
        if coloring[u] < coloring[v]:
            out[u] |= 1 << v
        else:
            out[v] |= 1 << u
    return Orientation(g, tuple(out))


# --- text codec -------------------------------------------------------------
#
# Same header and label lines as the graph format, then one arc line
# `a <tail> <head>` per base edge (1-based).


def encode_orientation(o: Orientation) -> str:
    g = o.base
    lines = [f"p st {g.vertex_count} {g.edge_count}"]
    for i, lab in enumerate(g.labels, start=1):
        if lab != str(i):
            lines.append(f"v {i} {lab}")
    for u, v in o.arcs():
        lines.append(f"a {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def parse_orientation(text: str) -> Orientation:
    from .graphs import build_graph

    names, pairs = _parse_body(text, "a")
    base = build_graph(
        names, [(names[u - 1], names[v - 1]) for u, v in pairs]
    )
    return orientation_from_arcs(base, [(u - 1, v - 1) for u, v in pairs])


def orientation_to_dot(o: Orientation) -> str:
    g = o.base

    def q(label: str) -> str:
        return '"' + label.replace('"', '\\"') + '"'

    lines = ["digraph G {"]
    for lab in g.labels:
        lines.append(f"  {q(lab)};")
    for u, v in o.arcs():
        lines.append(f"  {q(g.labels[u])} -> {q(g.labels[v])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
