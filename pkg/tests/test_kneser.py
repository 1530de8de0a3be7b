import itertools
from math import comb

import pytest

from semitrans import (
    FIGURE1_TRIPLES,
    KSubset,
    figure1_graph,
    has_clique,
    has_clique_threshold,
    induced_subgraph,
    k_subsets,
    kneser_graph,
    lex_prefix_subgraph,
    pad_embedding,
)


def test_ksubset_labels():
    assert KSubset(10, (2, 9, 10)).label() == "29(10)"
    assert KSubset(8, (1, 4, 6)).label() == "146"
    with pytest.raises(ValueError):
        KSubset(4, (2, 2))
    with pytest.raises(ValueError):
        KSubset(4, (1, 5))


def test_k_subsets_42():
    labels = [s.label() for s in k_subsets(4, 2)]
    assert labels == ["12", "13", "14", "23", "24", "34"]


def test_k_subsets_83_count_and_47th():
    subs = k_subsets(8, 3)
    assert len(subs) == 56
    assert subs[46].label() == "456"


def test_k_subsets_single():
    assert [s.label() for s in k_subsets(3, 3)] == ["123"]


def test_kneser_petersen():
    g = kneser_graph(5, 2)
    assert g.vertex_count == 10
    # each 2-subset of [5] is disjoint from exactly 3 others
    assert all(g.degree(u) == 3 for u in range(10))
    assert g.edge_count == 15


def test_kneser_42():
    g = kneser_graph(4, 2)
    assert g.vertex_count == 6 and g.edge_count == 3
    assert g.edge_labels() == {("12", "34"), ("13", "24"), ("14", "23")}
    gc = kneser_graph(4, 2, complemented=True)
    assert gc.edge_count == 12


def test_kneser_single_vertex():
    for k in (1, 2, 3):
        g = kneser_graph(k, k)
        assert g.vertex_count == 1 and g.edge_count == 0


def test_kneser_edge_count_formula():
    # brute-force disjointness count vs C(n,k)*C(n-k,k)/2
    for n in range(1, 11):
        for k in range(1, n + 1):
            g = kneser_graph(n, k)
            expected = comb(n, k) * comb(n - k, k) // 2 if n >= 2 * k else 0
            assert g.edge_count == expected, (n, k)


def test_kneser_no_edges_below_2k():
    for k in range(1, 5):
        for n in range(k, 2 * k):
            assert kneser_graph(n, k).edge_count == 0


def test_clique_threshold_against_search():
    for n in range(1, 10):
        for k in range(1, min(n, 4) + 1):
            g = kneser_graph(n, k)
            for c in range(1, 5):
                assert has_clique(g, c) == has_clique_threshold(n, k, c), (n, k, c)


def test_lex_prefix_full_is_whole_graph():
    g = lex_prefix_subgraph(8, 3, 56)
    whole = kneser_graph(8, 3)
    assert g.labels == whole.labels
    assert g.edge_labels() == whole.edge_labels()


def test_lex_prefix_46_and_47():
    g46 = lex_prefix_subgraph(8, 3, 46)
    assert g46.vertex_count == 46
    g47 = lex_prefix_subgraph(8, 3, 47)
    assert g47.labels[:46] == g46.labels
    assert g47.labels[46] == "456"


def test_lex_prefix_range_errors():
    with pytest.raises(ValueError):
        lex_prefix_subgraph(8, 3, 0)
    with pytest.raises(ValueError):
        lex_prefix_subgraph(8, 3, 57)


def test_figure1_counts():
    s = figure1_graph()
    assert s.vertex_count == 16
    assert s.edge_count == 36


def test_figure1_edges_match_disjointness():
    # double entry: the transcribed edge list must equal the disjointness
    # relation over all 120 pairs of triples
    s = figure1_graph()
    subsets = [KSubset(8, t) for t in FIGURE1_TRIPLES]
    for i, j in itertools.combinations(range(16), 2):
        assert s.has_edge(i, j) == subsets[i].disjoint(subsets[j]), (i, j)


def test_figure1_triangle_free():
    s = figure1_graph()
    assert not has_clique(s, 3)
    # independent derivation: no common neighbours across any edge
    for u, v in s.edges():
        assert not s.adj[u] & s.adj[v]


def test_figure1_is_induced_in_k83():
    s = figure1_graph()
    host = kneser_graph(8, 3)
    sub = induced_subgraph(host, [KSubset(8, t).label() for t in FIGURE1_TRIPLES])
    assert s.edge_labels() == sub.edge_labels()


def test_pad_embedding_identity_for_k2():
    mapping = pad_embedding(2)
    assert len(mapping) == 15
    for base, image in mapping.items():
        assert image.members == base.members
        assert image.n == 6


def test_pad_embedding_k3_induces_k62():
    mapping = pad_embedding(3)
    images = list(mapping.values())
    assert all(img.n == 21 for img in images)
    host = kneser_graph(21, 3)
    sub = induced_subgraph(host, [img.label() for img in images])
    assert sub.edge_count == 45
    k62 = kneser_graph(6, 2)
    relabel = {mapping[b].label(): b.label() for b in mapping}
    sub_edges = {
        tuple(sorted((relabel[a], relabel[b]))) for a, b in sub.edge_labels()
    }
    assert sub_edges == k62.edge_labels()


def test_pad_embedding_ground_set_size():
    for k in (2, 3, 4, 5):
        mapping = pad_embedding(k)
        assert all(img.n == 15 * k - 24 for img in mapping.values())


def test_pad_embedding_blocks_disjoint():
    for k in (3, 4, 6):
        mapping = pad_embedding(k)
        seen: set[int] = set()
        for base, image in mapping.items():
            block = set(image.members) - set(base.members)
            assert len(block) == k - 2
            assert not block & seen
            assert all(b >= 7 for b in block)
            seen |= block


def test_pad_embedding_rejects_small_k():
    with pytest.raises(ValueError):
        pad_embedding(1)
