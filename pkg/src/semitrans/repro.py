"""One-shot reproduction cases for every headline computational result.

Each case checks one documented fact at desk scale and reports PASS/FAIL;
`run_cases` drives them for the CLI and for the acceptance suite.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterable

from . import bounds, words
from .graphs import delete_vertex, induced_subgraph
from .kneser import FIGURE1_TRIPLES, KSubset, figure1_graph, kneser_graph, lex_prefix_subgraph
from .orient import orientation_from_coloring, verify_semi_transitive
from .solver import EXHAUSTED, WITNESS, exhaustive_check, solve


@dataclass
class CaseResult:
    name: str
    passed: bool
    status: str
    elapsed_ms: float
    detail: str = ""


def _result(name: str, t0: float, passed: bool, status: str, detail: str = "") -> CaseResult:
    return CaseResult(name, passed, status, (time.monotonic() - t0) * 1000.0, detail)


def _wheel5():
    from .graphs import build_graph

    labels = [f"v{i}" for i in range(1, 7)]
    rim = [(f"v{i}", f"v{i % 5 + 1}") for i in range(1, 6)]
    spokes = [("v6", f"v{i}") for i in range(1, 6)]
    return build_graph(labels, rim + spokes)


def case_w5(budget_ms: float) -> CaseResult:
    t0 = time.monotonic()
    g = _wheel5()
    out = solve(g, time_ms=budget_ms)
    oracle = exhaustive_check(g)
    ok = out.status == EXHAUSTED and oracle is None
    return _result(
        "w5", t0, ok, "NotSemiTransitive" if ok else "mismatch",
        f"solve={out.status} nodes={out.stats.nodes} oracle={'none' if oracle is None else 'witness'}",
    )


def case_k62(budget_ms: float) -> CaseResult:
    t0 = time.monotonic()
    out = solve(kneser_graph(6, 2), time_ms=budget_ms)
    ok = out.status == EXHAUSTED
    return _result(
        "k62", t0, ok, "NotSemiTransitive" if ok else out.status,
        f"nodes={out.stats.nodes} propagations={out.stats.propagations}",
    )


def case_k62_vertex_deleted(budget_ms: float) -> CaseResult:
    t0 = time.monotonic()
    g = kneser_graph(6, 2)
    failures = []
    for lab in g.labels:
        out = solve(delete_vertex(g, lab), time_ms=budget_ms)
        if out.status != EXHAUSTED:
            failures.append(f"{lab}:{out.status}")
    ok = not failures
    return _result(
        "k62-vertex-deleted", t0, ok,
        "NotSemiTransitive x15" if ok else "mismatch",
        "all 15 deletions exhausted" if ok else ",".join(failures),
    )


def case_figure1(budget_ms: float) -> CaseResult:
    t0 = time.monotonic()
    out = solve(figure1_graph(), time_ms=budget_ms)
    ok = out.status == EXHAUSTED
    return _result(
        "figure1", t0, ok, "NotSemiTransitive" if ok else out.status,
        f"nodes={out.stats.nodes} propagations={out.stats.propagations}",
    )


def case_figure1_minimality(budget_ms: float) -> CaseResult:
    t0 = time.monotonic()
    g = figure1_graph()
    failures = []
    for lab in g.labels:
        out = solve(delete_vertex(g, lab), time_ms=budget_ms)
        if out.status != WITNESS or not verify_semi_transitive(out.witness).ok:
            failures.append(f"{lab}:{out.status}")
    ok = not failures
    return _result(
        "figure1-minimality", t0, ok,
        "SemiTransitive x16" if ok else "mismatch",
        "all 16 deletions have verified witnesses" if ok else ",".join(failures),
    )


def case_k83_prefix46(budget_ms: float) -> CaseResult:
    t0 = time.monotonic()
    out = solve(lex_prefix_subgraph(8, 3, 46), time_ms=budget_ms)
    ok = out.status == WITNESS and verify_semi_transitive(out.witness).ok
    return _result(
        "k83-prefix46", t0, ok, "SemiTransitive" if ok else out.status,
        f"nodes={out.stats.nodes} propagations={out.stats.propagations}",
    )


def case_k83_certificate(budget_ms: float) -> CaseResult:
    t0 = time.monotonic()
    s = figure1_graph()
    host = kneser_graph(8, 3)
    sub = induced_subgraph(host, [KSubset(8, t).label() for t in FIGURE1_TRIPLES])
    ok = s.edge_labels() == sub.edge_labels() and s.edge_count == 36
    return _result(
        "k83-certificate", t0, ok,
        "NotSemiTransitive (induced certificate + heredity)" if ok else "mismatch",
        "certificate graph is an induced subgraph of K(8,3)" if ok else
        "edge sets differ",
    )


def case_petersen_3col(budget_ms: float) -> CaseResult:
    t0 = time.monotonic()
    details = []
    ok = True
    for name, g in (("K(5,2)", kneser_graph(5, 2)), ("K(7,3)", kneser_graph(7, 3))):
        chi = bounds.exact_chromatic(g, time_ms=budget_ms)
        coloring = bounds.find_coloring(g, 3, time_ms=budget_ms)
        good = chi == 3 and coloring is not None
        if good:
            good = verify_semi_transitive(orientation_from_coloring(g, coloring)).ok
        ok = ok and good
        details.append(f"{name}:chi={chi}")
    return _result(
        "petersen-3col", t0, ok,
        "SemiTransitive via 3-coloring" if ok else "mismatch", " ".join(details),
    )


def case_complement_words(budget_ms: float) -> CaseResult:
    t0 = time.monotonic()
    ok = True
    details = []
    for k in range(1, 5):
        word, graph = words.word_complement_matching(k)
        good, pair = words.represents(word, graph)
        ok = ok and good
        details.append(f"k={k}:{'ok' if good else pair}")
    w = words.Word.from_text("11245431252", compact=True)
    alt_ok = words.alternate(w, "2", "5") and not words.alternate(w, "2", "4")
    ok = ok and alt_ok
    details.append(f"alternation:{'ok' if alt_ok else 'bad'}")
    return _result(
        "complement-words", t0, ok,
        "represents" if ok else "does-not-represent", " ".join(details),
    )


def case_formulas(budget_ms: float) -> CaseResult:
    t0 = time.monotonic()
    checks = []
    checks.append(("chi K(5,2)", bounds.kneser_chromatic(5, 2) == 3
                   == bounds.exact_chromatic(kneser_graph(5, 2), time_ms=budget_ms)))
    checks.append(("chi complement (7,3)", bounds.complement_chromatic(7, 3) == 18))
    checks.append(("alpha (7,3)", bounds.ekr_independence(7, 3) == 15))
    mis_ok = True
    for k in (1, 2, 3):
        for n in range(2 * k, 8):
            mis_ok = mis_ok and (
                bounds.max_independent_set(kneser_graph(n, k))
                == bounds.ekr_independence(n, k)
            )
    checks.append(("alpha vs brute force", mis_ok))
    ok = all(good for _, good in checks)
    detail = " ".join(f"{name}:{'ok' if good else 'BAD'}" for name, good in checks)
    return _result("formulas", t0, ok, "exact" if ok else "mismatch", detail)


def case_lemma14(budget_ms: float) -> CaseResult:
    t0 = time.monotonic()
    ok = not bounds.lemma14_holds(3)[0]
    ok = ok and all(bounds.lemma14_holds(k)[0] for k in range(4, 65))
    return _result(
        "lemma14", t0, ok, "holds for 4..64, fails at 3" if ok else "mismatch",
        f"k=4: {bounds.lemma14_holds(4)[1]} < {bounds.lemma14_holds(4)[2]}",
    )


# name -> (default budget ms, runner); order is the `reproduce all` order
CASES: dict[str, tuple[float, Callable[[float], CaseResult]]] = {
    "w5": (60_000, case_w5),
    "k62": (60_000, case_k62),
    "k62-vertex-deleted": (60_000, case_k62_vertex_deleted),
    "figure1": (60_000, case_figure1),
    "figure1-minimality": (60_000, case_figure1_minimality),
    "k83-prefix46": (120_000, case_k83_prefix46),
    "k83-certificate": (60_000, case_k83_certificate),
    "petersen-3col": (30_000, case_petersen_3col),
    "complement-words": (5_000, case_complement_words),
    "formulas": (30_000, case_formulas),
    "lemma14": (10_000, case_lemma14),
}


def run_cases(
    names: Iterable[str], budget_ms: float | None = None
) -> list[CaseResult]:
    results = []
    for name in names:
        if name not in CASES:
            raise ValueError(f"unknown reproduction case: {name!r}")
        default_budget, runner = CASES[name]
        results.append(runner(budget_ms if budget_ms is not None else default_budget))
    return results
