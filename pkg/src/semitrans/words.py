"""Word-representability: alternation semantics and explicit constructions.

A word represents a graph when two letters alternate in it exactly for the
adjacent vertex pairs.  Tokens are whole strings (subset labels such as
``29(10)`` make per-character splitting unsafe); a compact mode treats each
character as a token for single-character alphabets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, build_graph
from .kneser import KSubset, k_subsets


@dataclass(frozen=True)
class Word:
    letters: tuple[str, ...]

    def __post_init__(self):
        if not self.letters:
            raise ValueError("word must be nonempty")
        if any(not tok for tok in self.letters):
            raise ValueError("word contains an empty token")

    @classmethod
    def from_text(cls, text: str, compact: bool = False) -> "Word":
        tokens = tuple(text.strip()) if compact else tuple(text.split())
        return cls(tokens)

    def __str__(self) -> str:
        return " ".join(self.letters)


def alternate(w: Word, x: str, y: str) -> bool:
    """Do x and y strictly alternate after deleting all other letters?

    Subsequences of length 0 or 1 alternate vacuously.
    """
    if x == y:
        raise ValueError(f"alternation needs two distinct letters, got {x!r}")
    prev = None
    for tok in w.letters:
        if tok != x and tok != y:
            continue
        if tok == prev:
            return False
        prev = tok
    return True


def graph_of_word(w: Word, alphabet=None) -> Graph:
    """Graph on the distinct tokens (lex order), edges = alternating pairs."""
    tokens = sorted(set(w.letters))
    if alphabet is not None and set(alphabet) != set(tokens):
        missing = sorted(set(alphabet) ^ set(tokens))
        raise ValueError(f"alphabet mismatch on {missing}")
    edges = [(a, b) for a, b in combinations(tokens, 2) if alternate(w, a, b)]
    return build_graph(tokens, edges)


def represents(w: Word, g: Graph) -> tuple[bool, tuple[str, str] | None]:
    """Does w represent g?  On failure, also the first differing pair.

    The pair is the lexicographically first label pair whose alternation in
    w disagrees with adjacency in g; None when the alphabets already differ.
    """
    if set(w.letters) != set(g.labels):
        return False, None
    for a, b in combinations(sorted(g.labels), 2):
        if alternate(w, a, b) != g.has_edge(g.index(a), g.index(b)):
            return False, (a, b)
    return True, None


def word_complement_matching(k: int) -> tuple[Word, Graph]:
    """Word and graph for the complement of K(2k,k), relabelled by pairs.

    In K(2k,k) two subsets are disjoint iff complementary, so the complement
    is a complete graph minus a perfect matching.  Complementary subsets get
    labels 2i-1 and 2i (pairs ordered by the lex rank of the smaller member),
    making the non-edges exactly {2i-1, 2i}.  The word
    1 2 ... x  2 1 4 3 ... x x-1 (x = C(2k,k)) then represents the graph.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    subsets = k_subsets(2 * k, k)
    x = len(subsets)
    by_members = {s.members: s for s in subsets}
    label_of: dict[KSubset, str] = {}
    pair_index = 0
    for s in subsets:
        if s in label_of:
            continue
        comp_members = tuple(
            m + 1 for m in range(2 * k) if not s.mask() >> m & 1
        )
        comp = by_members[comp_members]
        pair_index += 1
        label_of[s] = str(2 * pair_index - 1)
        label_of[comp] = str(2 * pair_index)
    assert 2 * pair_index == x  # every subset pairs with its complement
    labels = [str(i) for i in range(1, x + 1)]
    subset_of = {label_of[s]: s for s in subsets}
    edges = [
        (a, b)
        for a, b in combinations(labels, 2)
        if not subset_of[a].disjoint(subset_of[b])
    ]
    graph = build_graph(labels, edges)
    first = [str(i) for i in range(1, x + 1)]
    second = []
    for i in range(1, x // 2 + 1):
        second.extend([str(2 * i), str(2 * i - 1)])
    return Word(tuple(first + second)), graph


def parse_words(text: str, compact: bool = False) -> list[Word]:
    """One word per line; blank lines ignored."""
    out = []
    for line in text.splitlines():
        if line.strip():
            out.append(Word.from_text(line, compact=compact))
    return out
