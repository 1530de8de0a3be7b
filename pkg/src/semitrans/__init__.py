"""Semi-transitive orientation toolkit for Kneser graphs and their complements."""

from .bounds import (
    Classification,
    binomial,
    classify,
    complement_chromatic,
    ekr_independence,
    exact_chromatic,
    find_coloring,
    has_clique,
    has_clique_threshold,
    kneser_chromatic,
    lemma14_holds,
    max_independent_set,
)
from .graphs import (
    Graph,
    ParseError,
    build_graph,
    complement,
    delete_vertex,
    encode_graph,
    graph_to_dot,
    induced_subgraph,
    parse_graph,
)
from .kneser import (
    FIGURE1_TRIPLES,
    KSubset,
    figure1_graph,
    k_subsets,
    kneser_graph,
    lex_prefix_subgraph,
    pad_embedding,
)
from .orient import (
    Orientation,
    PartialOrientation,
    ShortcutWitness,
    Verdict,
    encode_orientation,
    find_shortcut,
    is_acyclic,
    longest_directed_path,
    orientation_from_arcs,
    orientation_from_coloring,
    orientation_to_dot,
    parse_orientation,
    validate_shortcut,
    verify_semi_transitive,
)
from .solver import (
    Conflict,
    Propagation,
    SolveOutcome,
    SolveStats,
    exhaustive_check,
    propagate_forced,
    solve,
)
from .words import (
    Word,
    alternate,
    graph_of_word,
    parse_words,
    represents,
    word_complement_matching,
)

__version__ = "0.1.0"
