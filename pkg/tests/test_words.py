import itertools

import pytest

from semitrans import (
    Word,
    alternate,
    build_graph,
    complement,
    graph_of_word,
    kneser_graph,
    parse_words,
    represents,
    solve,
    word_complement_matching,
)


W = Word.from_text("11245431252", compact=True)


def test_alternation_examples():
    assert alternate(W, "2", "5")
    assert not alternate(W, "2", "4")


def test_alternation_trivial_and_errors():
    assert alternate(Word(("x", "y")), "x", "y")
    assert alternate(Word(("3", "1")), "2", "9")  # both absent: vacuous
    assert alternate(Word(("2", "3")), "2", "9")  # single occurrence: vacuous
    assert not alternate(W, "9", "2")  # restriction "222" repeats
    with pytest.raises(ValueError):
        alternate(W, "2", "2")


def test_alternation_symmetric_and_deletion_invariant():
    letters = sorted(set(W.letters))
    for x, y in itertools.combinations(letters, 2):
        assert alternate(W, x, y) == alternate(W, y, x)
        filtered = Word(tuple(t for t in W.letters if t in (x, y)))
        assert alternate(W, x, y) == alternate(filtered, x, y)


def test_graph_of_word_empty_graph():
    for n in (2, 3, 5):
        tokens = []
        for i in range(1, n + 1):
            tokens += [str(i), str(i)]
        g = graph_of_word(Word(tuple(tokens)))
        assert g.edge_count == 0 and g.vertex_count == n


def test_graph_of_word_permutation_is_complete():
    g = graph_of_word(Word(tuple("35142")))
    assert g.edge_count == 5 * 4 // 2


def test_graph_of_word_single_edge():
    g = graph_of_word(Word(tuple("abab")))
    assert g.vertex_count == 2 and g.edge_count == 1


def test_graph_of_word_reversal_invariant():
    for text in ("11245431252", "abacabad", "31323"):
        w = Word.from_text(text, compact=True)
        r = Word(tuple(reversed(w.letters)))
        assert graph_of_word(w).edge_labels() == graph_of_word(r).edge_labels()


def test_graph_of_word_alphabet_mismatch():
    with pytest.raises(ValueError, match="alphabet"):
        graph_of_word(Word(tuple("aa")), alphabet={"a", "b"})


def test_represents_basics():
    empty3 = build_graph(["1", "2", "3"], [])
    ok, pair = represents(Word.from_text("112233", compact=True), empty3)
    assert ok and pair is None

    k3 = build_graph(["1", "2", "3"], [("1", "2"), ("1", "3"), ("2", "3")])
    ok, _ = represents(Word.from_text("123123", compact=True), k3)
    assert ok

    edge = build_graph(["1", "2"], [("1", "2")])
    ok, pair = represents(Word.from_text("1122", compact=True), edge)
    assert not ok and pair == ("1", "2")

    ok, pair = represents(Word.from_text("1122", compact=True), empty3)
    assert not ok and pair is None  # alphabet differs


def test_word_complement_matching_k1():
    word, graph = word_complement_matching(1)
    assert " ".join(word.letters) == "1 2 2 1"
    assert graph.vertex_count == 2 and graph.edge_count == 0
    assert represents(word, graph)[0]


def test_word_complement_matching_k2_octahedron():
    word, graph = word_complement_matching(2)
    assert graph.vertex_count == 6
    assert graph.edge_count == 12  # K6 minus a perfect matching
    assert " ".join(word.letters) == "1 2 3 4 5 6 2 1 4 3 6 5"
    assert represents(word, graph)[0]
    # non-edges are exactly the pairs (2i-1, 2i)
    for i in range(1, 4):
        assert not graph.has_edge(graph.index(str(2 * i - 1)), graph.index(str(2 * i)))
    # isomorphic to the complement of K(4,2): same degree sequence and size
    octa = complement(kneser_graph(4, 2))
    assert sorted(graph.degree(u) for u in range(6)) == sorted(
        octa.degree(u) for u in range(6)
    )


def test_word_complement_matching_k3():
    word, graph = word_complement_matching(3)
    assert graph.vertex_count == 20
    assert len(word.letters) == 40
    assert represents(word, graph)[0]


def test_word_complement_matching_graphs_solvable():
    # these graphs are semi-transitive, so the solver must find witnesses
    for k in (1, 2, 3):
        _, graph = word_complement_matching(k)
        assert solve(graph, time_ms=60_000).status == "witness"


@pytest.mark.slow
def test_word_complement_matching_k4_solvable():
    # 70 vertices and 2380 edges: the densest instance the suite solves
    _, graph = word_complement_matching(4)
    assert solve(graph, time_ms=300_000).status == "witness"


def test_parse_words():
    ws = parse_words("1 2 2 1\nab cd ab\n\n")
    assert len(ws) == 2
    assert ws[1].letters == ("ab", "cd", "ab")
    ws = parse_words("1221\n", compact=True)
    assert ws[0].letters == ("1", "2", "2", "1")
