import pytest

from semitrans import (
    PartialOrientation,
    build_graph,
    complement,
    exhaustive_check,
    figure1_graph,
    kneser_graph,
    lex_prefix_subgraph,
    propagate_forced,
    solve,
    validate_shortcut,
    verify_semi_transitive,
)
from semitrans.solver import CONFLICT, EXHAUSTED, FORCED, QUIESCENT, TIMEOUT, WITNESS
from conftest import complete_graph, cycle_graph, solver_corpus, wheel5


def test_propagate_quadruple_forcing():
    # 4-cycle a-b-c-d with a->b, b->c assigned and (a,c),(b,d) non-edges:
    # the only completion-safe orientations are a->d and d->c
    g = build_graph(list("abcd"), [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    po = PartialOrientation(g)
    po.assign(0, 1)
    po.assign(1, 2)
    res = propagate_forced(po)
    assert res.status == FORCED
    assert set(res.forced) == {(0, 3), (3, 2)}  # a->d and d->c
    assert po.direction(0, 3) == 1
    assert po.direction(2, 3) == -1


def test_propagate_k4_exclusion():
    # on the complete quadruple the far edges stay open; only the triangle
    # closure a->c is inevitable (c->a would be a directed 3-cycle)
    g = complete_graph(4)
    po = PartialOrientation(g)
    po.assign(0, 1)
    po.assign(1, 2)
    res = propagate_forced(po)
    assert res.status == FORCED
    assert res.forced == ((0, 2),)
    assert po.direction(2, 3) == 0
    assert po.direction(0, 3) == 0
    assert po.direction(1, 3) == 0


def test_propagate_quiescent_on_empty():
    po = PartialOrientation(cycle_graph(5))
    assert propagate_forced(po).status == QUIESCENT


def test_propagate_endgame_conflict():
    # K(6,2) after the forced chain that pins cd->ae->bc->af: the edge
    # cd-af cannot be oriented either way
    g = kneser_graph(6, 2)
    lab = dict(zip("abcdef", "123456"))

    def v(two):
        return g.index("".join(sorted(lab[c] for c in two)))

    chain = [
        ("ab", "cd"), ("cd", "be"), ("be", "af"),
        ("ab", "df"), ("df", "be"),
        ("ab", "ce"), ("ce", "af"),
        ("ab", "de"), ("de", "af"),
        ("df", "ce"),
        ("df", "bc"), ("bc", "af"),
        ("de", "bc"),
        ("ab", "ef"), ("ef", "bc"),
        ("ef", "bd"), ("bd", "af"),
        ("ce", "bd"),
        ("df", "ae"), ("ae", "bd"),
        ("cd", "ae"),
        ("cf", "ae"),
        ("ae", "bc"),
    ]
    po = PartialOrientation(g)
    for x, y in chain:
        po.assign(v(x), v(y))
    assert po.direction(v("cd"), v("af")) == 0

    from semitrans.orient import _nonadj_masks
    from semitrans.solver import _arc_would_die

    nonadj = _nonadj_masks(g)
    assert _arc_would_die(po, nonadj, v("cd"), v("af"))
    assert _arc_would_die(po, nonadj, v("af"), v("cd"))

    res = propagate_forced(po)
    assert res.status == CONFLICT
    c = res.conflict
    assert c.kind in ("cycle", "shortcut")
    if c.shortcut is not None:
        mark = po.mark()
        for a, b in c.assumed_arcs:
            po.assign(a, b)
        validate_shortcut(po, c.shortcut)
        po.undo_to(mark)


def test_propagate_reports_cycle_on_bad_input():
    g = cycle_graph(3)
    po = PartialOrientation(g)
    po.assign(0, 1)
    po.assign(1, 2)
    po.assign(2, 0)
    res = propagate_forced(po)
    assert res.status == CONFLICT
    assert res.conflict.kind == "cycle"
    assert len(res.conflict.cycle) == 3


def test_solve_k4_witness():
    out = solve(complete_graph(4))
    assert out.status == WITNESS
    assert verify_semi_transitive(out.witness).ok


def test_solve_w5_exhausted_fast():
    out = solve(wheel5(), time_ms=1_000)
    assert out.status == EXHAUSTED
    assert exhaustive_check(wheel5()) is None


def test_solve_figure1_exhausted():
    out = solve(figure1_graph(), time_ms=60_000)
    assert out.status == EXHAUSTED


def test_solve_k62_exhausted():
    out = solve(kneser_graph(6, 2), time_ms=60_000)
    assert out.status == EXHAUSTED


def test_solve_prefix46_witness():
    out = solve(lex_prefix_subgraph(8, 3, 46), time_ms=120_000)
    assert out.status == WITNESS
    assert verify_semi_transitive(out.witness).ok


def test_exhaustive_check_examples():
    assert exhaustive_check(complete_graph(3)) is not None
    assert exhaustive_check(cycle_graph(4)) is not None
    assert exhaustive_check(wheel5()) is None
    with pytest.raises(ValueError, match="20 edges"):
        exhaustive_check(kneser_graph(6, 2))


def test_solve_agrees_with_oracle_on_corpus():
    for g in solver_corpus():
        if g.edge_count > 20:
            continue
        got = solve(g, time_ms=60_000)
        want = exhaustive_check(g)
        if want is None:
            assert got.status == EXHAUSTED, encode_failure(g, got)
        else:
            assert got.status == WITNESS, encode_failure(g, got)
            assert verify_semi_transitive(got.witness).ok


def encode_failure(g, got):
    from semitrans import encode_graph

    return f"status={got.status} on\n{encode_graph(g)}"


def test_solve_deterministic():
    for g in (wheel5(), kneser_graph(5, 2), cycle_graph(6)):
        a = solve(g, time_ms=30_000, record_trace=True)
        b = solve(g, time_ms=30_000, record_trace=True)
        assert a.status == b.status
        assert a.stats.branch_trace == b.stats.branch_trace
        assert a.stats.nodes == b.stats.nodes
        assert a.stats.propagations == b.stats.propagations
        if a.witness is not None:
            assert a.witness.arcs() == b.witness.arcs()


def test_solve_timeout_status():
    out = solve(lex_prefix_subgraph(8, 3, 51), time_ms=300)
    assert out.status == TIMEOUT
    assert out.witness is None


def test_solve_node_budget():
    out = solve(kneser_graph(6, 2), time_ms=None, max_nodes=3)
    assert out.status == TIMEOUT


def test_heredity_supergraphs_of_certificate_never_witness():
    # the certificate graph sits inside every prefix of size >= 51, so no
    # witness may ever be produced for those prefixes
    for m in (51, 53, 56):
        out = solve(lex_prefix_subgraph(8, 3, m), time_ms=3_000)
        assert out.status != WITNESS


def test_solve_empty_and_single_edge():
    g = build_graph(["a", "b", "c"], [])
    out = solve(g)
    assert out.status == WITNESS and out.witness.base.edge_count == 0
    g = build_graph(["a", "b"], [("a", "b")])
    assert solve(g).status == WITNESS


def test_witnesses_verified_for_complement_k42():
    g = complement(kneser_graph(4, 2))
    out = solve(g, time_ms=30_000)
    assert out.status == WITNESS
    assert verify_semi_transitive(out.witness).ok
