"""Shared graph corpus for the test suite."""

from __future__ import annotations

import itertools
import random

import pytest

from semitrans import Graph, build_graph, complement, kneser_graph


def index_graph(n: int, edges: list[tuple[int, int]]) -> Graph:
    labels = [str(i + 1) for i in range(n)]
    return build_graph(labels, [(labels[u], labels[v]) for u, v in edges])


def cycle_graph(n: int) -> Graph:
    return index_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return index_graph(n, list(itertools.combinations(range(n), 2)))


def wheel5() -> Graph:
    labels = [f"v{i}" for i in range(1, 7)]
    rim = [(f"v{i}", f"v{i % 5 + 1}") for i in range(1, 6)]
    spokes = [("v6", f"v{i}") for i in range(1, 6)]
    return build_graph(labels, rim + spokes)


def random_graph(rng: random.Random, n: int, m: int) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    return index_graph(n, rng.sample(pairs, m))


def _connected(n: int, edges: list[tuple[int, int]]) -> bool:
    if n <= 1:
        return True
    adj = {i: set() for i in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _canonical(n: int, edges: list[tuple[int, int]]) -> tuple:
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return best


def connected_graphs_upto5() -> list[Graph]:
    """All connected graphs on 2..5 vertices, one per isomorphism class."""
    out = []
    for n in range(2, 6):
        pairs = list(itertools.combinations(range(n), 2))
        seen = set()
        for bits in range(1, 1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
            if not _connected(n, edges):
                continue
            key = _canonical(n, edges)
            if key in seen:
                continue
            seen.add(key)
            out.append(index_graph(n, edges))
    return out


@pytest.fixture(scope="session")
def small_connected_graphs() -> list[Graph]:
    return connected_graphs_upto5()


@pytest.fixture(scope="session")
def petersen() -> Graph:
    return kneser_graph(5, 2)


@pytest.fixture(scope="session")
def octahedron() -> Graph:
    return complement(kneser_graph(4, 2))


def solver_corpus(rng_seed: int = 8532) -> list[Graph]:
    """Graphs with <= 20 edges for solve vs exhaustive-oracle agreement."""
    rng = random.Random(rng_seed)
    corpus = connected_graphs_upto5()
    corpus.append(wheel5())
    corpus.extend(cycle_graph(n) for n in range(4, 9))
    corpus.append(kneser_graph(4, 2))
    corpus.append(complement(kneser_graph(4, 2)))
    for _ in range(8):
        n = rng.randint(6, 8)
        m = rng.randint(n, min(14, n * (n - 1) // 2))
        corpus.append(random_graph(rng, n, m))
    return corpus
