"""Immutable undirected simple graphs with bitset adjacency.

Vertices are identified by unique printable label strings; the vertex index
order is the construction order.  Adjacency is stored as one Python int per
vertex (bit ``v`` of ``adj[u]`` set iff ``u`` and ``v`` are adjacent), which
gives constant-time membership tests and word-at-a-time set operations for
the reachability machinery built on top.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class ParseError(ValueError):
    """Malformed graph/orientation text; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; immutable and safe to share.

    labels: one unique string per vertex, index order = construction order.
    adj: per-vertex neighbour bitmasks (symmetric, irreflexive).
    """

    labels: tuple[str, ...]
    adj: tuple[int, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.labels)
        if len(self.adj) != n:
            raise ValueError("adjacency length does not match label count")
        index: dict[str, int] = {}
        for i, lab in enumerate(self.labels):
            if lab in index:
                raise ValueError(f"duplicate label: {lab!r}")
            index[lab] = i
        object.__setattr__(self, "_index", index)
        full = (1 << n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency bit out of range for vertex {u}")
            if row >> u & 1:
                raise ValueError(f"self-loop on vertex {self.labels[u]!r}")
        # Full symmetry check is quadratic; skip for very large generated graphs.
        if n <= 200:
            for u in range(n):
                for v in _bits(self.adj[u]):
                    if not self.adj[v] >> u & 1:
                        raise ValueError(f"asymmetric adjacency at ({u},{v})")

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f"unknown label: {label!r}") from None

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) index pairs with u < v, in lexicographic order."""
        out = []
        for u in range(len(self.labels)):
            row = self.adj[u] >> (u + 1) << (u + 1)
            for v in _bits(row):
                out.append((u, v))
        return out

    def edge_labels(self) -> set[tuple[str, str]]:
        """Edge set as sorted label pairs, for order-independent comparison."""
        return {
            tuple(sorted((self.labels[u], self.labels[v]))) for u, v in self.edges()
        }


def from_adjacency(labels: Sequence[str], adj: Sequence[int]) -> Graph:
    """Wrap prebuilt bitmask rows (used by the generators)."""
    return Graph(tuple(labels), tuple(adj))


def build_graph(
    labels: Sequence[str], edges: Iterable[tuple[str, str]]
) -> Graph:
    """Build a graph from labels and label-pair edges.

    Duplicate edges collapse silently; duplicate labels, unknown endpoints
    and self-loops are construction errors naming the offending item.
    """
    labels = tuple(labels)
    index: dict[str, int] = {}
    for lab in labels:
        if lab in index:
            raise ValueError(f"duplicate label: {lab!r}")
        index[lab] = len(index)
    adj = [0] * len(labels)
    for a, b in edges:
        if a not in index:
            raise ValueError(f"unknown endpoint: {a!r}")
        if b not in index:
            raise ValueError(f"unknown endpoint: {b!r}")
        if a == b:
            raise ValueError(f"self-loop on {a!r}")
        u, v = index[a], index[b]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(labels, tuple(adj))


def complement(g: Graph) -> Graph:
    """Same labels; distinct vertices adjacent iff non-adjacent in g."""
    n = g.vertex_count
    full = (1 << n) - 1
    adj = tuple((full & ~g.adj[u]) & ~(1 << u) for u in range(n))
    return Graph(g.labels, adj)


def induced_subgraph(g: Graph, keep: Iterable[str]) -> Graph:
    """Subgraph induced by the given labels, kept in g's vertex order."""
    keep_set = set(keep)
    for lab in keep_set:
        if lab not in g._index:
            raise ValueError(f"unknown label: {lab!r}")
    old = [u for u, lab in enumerate(g.labels) if lab in keep_set]
    new_of_old = {u: i for i, u in enumerate(old)}
    adj = [0] * len(old)
    for i, u in enumerate(old):
        for v in _bits(g.adj[u]):
            j = new_of_old.get(v)
            if j is not None:
                adj[i] |= 1 << j
    return Graph(tuple(g.labels[u] for u in old), tuple(adj))


def delete_vertex(g: Graph, label: str) -> Graph:
    """Induced subgraph on everything except one vertex."""
    g.index(label)
    return induced_subgraph(g, (lab for lab in g.labels if lab != label))


# --- text codec -------------------------------------------------------------
#
# Line format (ASCII, 1-based indices):
#   p st <n> <m>
#   v <index> <label>     (only for labels that differ from the index)
#   e <u> <v>             (u < v, lexicographic order)


def encode_graph(g: Graph) -> str:
    lines = [f"p st {g.vertex_count} {g.edge_count}"]
    for i, lab in enumerate(g.labels, start=1):
        if lab != str(i):
            lines.append(f"v {i} {lab}")
    for u, v in g.edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def _parse_header(lines: list[tuple[int, str]]):
    if not lines:
        raise ParseError(1, "empty input, expected 'p st <n> <m>' header")
    no, text = lines[0]
    parts = text.split()
    if len(parts) != 4 or parts[0] != "p" or parts[1] != "st":
        raise ParseError(no, f"malformed header: {text!r}")
    try:
        n, m = int(parts[2]), int(parts[3])
    except ValueError:
        raise ParseError(no, f"malformed header counts: {text!r}") from None
    if n < 0 or m < 0:
        raise ParseError(no, "negative counts in header")
    return n, m


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        out.append((no, line))
    return out


def _parse_body(text: str, arc_tag: str):
    """Shared parse for graph ('e') and orientation ('a') files."""
    lines = _content_lines(text)
    n, m = _parse_header(lines)
    labels: dict[int, str] = {}
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for no, line in lines[1:]:
        parts = line.split(maxsplit=2)
        kind = parts[0]
        if kind == "v":
            if len(parts) != 3:
                raise ParseError(no, f"malformed vertex line: {line!r}")
            try:
                i = int(parts[1])
            except ValueError:
                raise ParseError(no, f"bad vertex index: {line!r}") from None
            if not 1 <= i <= n:
                raise ParseError(no, f"index out of range: {i}")
            if i in labels:
                raise ParseError(no, f"duplicate label line for vertex {i}")
            labels[i] = parts[2].strip()
        elif kind == arc_tag:
            fields = line.split()
            if len(fields) != 3:
                raise ParseError(no, f"malformed edge line: {line!r}")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(no, f"bad edge indices: {line!r}") from None
            for x in (u, v):
                if not 1 <= x <= n:
                    raise ParseError(no, f"index out of range: {x}")
            if u == v:
                raise ParseError(no, f"self-loop: {line!r}")
            if arc_tag == "e" and u >= v:
                raise ParseError(no, f"edge endpoints must satisfy u < v: {line!r}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(no, f"duplicate edge: {u} {v}")
            seen.add(key)
            pairs.append((u, v))
        else:
            raise ParseError(no, f"unknown line type: {line!r}")
    if len(pairs) != m:
        raise ParseError(
            lines[0][0], f"header claims {m} edges, found {len(pairs)}"
        )
    names = tuple(labels.get(i, str(i)) for i in range(1, n + 1))
    return names, pairs


def parse_graph(text: str) -> Graph:
    names, pairs = _parse_body(text, "e")
    return build_graph(names, [(names[u - 1], names[v - 1]) for u, v in pairs])


def graph_to_dot(g: Graph) -> str:
    """Undirected DOT document, one node per vertex, one edge per edge."""
    def q(label: str) -> str:
        return '"' + label.replace('"', '\\"') + '"'

    lines = ["graph G {"]
    for lab in g.labels:
        lines.append(f"  {q(lab)};")
    for u, v in g.edges():
        lines.append(f"  {q(g.labels[u])} -- {q(g.labels[v])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
