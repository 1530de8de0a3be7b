"""Command-line front end.

Exit codes: 0 = affirmative (semi-transitive / success), 1 = definite
negative (not semi-transitive / does not represent), 2 = Unknown or Timeout,
64 = usage error (bad arguments or malformed input files).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import bounds, repro, words
from .graphs import ParseError, encode_graph, graph_to_dot, parse_graph
from .kneser import figure1_graph, kneser_graph, lex_prefix_subgraph
from .orient import (
    encode_orientation,
    orientation_to_dot,
    parse_orientation,
    verify_semi_transitive,
)
from .solver import EXHAUSTED, TIMEOUT, WITNESS, exhaustive_check, solve

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _default_budget_ms() -> float:
    raw = os.environ.get("SEMITRANS_BUDGET_MS")
    if raw:
        try:
            return float(raw)
        except ValueError:
            pass
    return 60_000.0


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _labels(g, seq) -> str:
    return " ".join(g.labels[v] for v in seq)


def cmd_gen(args) -> int:
    if args.figure1:
        g = figure1_graph()
    else:
        if args.n is None or args.k is None:
            print("error: gen needs n and k unless --figure1 is given", file=sys.stderr)
            return EXIT_USAGE
        if args.lex_prefix is not None:
            g = lex_prefix_subgraph(args.n, args.k, args.lex_prefix, args.complement)
        else:
            g = kneser_graph(args.n, args.k, args.complement)
    text = graph_to_dot(g) if args.dot else encode_graph(g)
    _emit(text, args.output)
    return EXIT_OK


def cmd_solve(args) -> int:
    g = parse_graph(_read(args.graph))
    budget = args.budget_ms if args.budget_ms is not None else _default_budget_ms()
    if args.oracle:
        witness = exhaustive_check(g)
        if witness is None:
            print("NotSemiTransitive")
            return EXIT_NEGATIVE
        path = args.witness_out or args.graph + ".witness"
        Path(path).write_text(encode_orientation(witness))
        print("SemiTransitive")
        print(f"witness={path}")
        return EXIT_OK
    outcome = solve(g, time_ms=budget, max_nodes=args.max_nodes)
    if args.stats:
        s = outcome.stats
        print(f"status={outcome.status}")
        print(f"nodes={s.nodes}")
        print(f"propagations={s.propagations}")
        print(f"conflicts={s.conflicts}")
        print(f"elapsed_ms={s.elapsed_ms:.1f}")
    if outcome.status == WITNESS:
        path = args.witness_out or args.graph + ".witness"
        Path(path).write_text(encode_orientation(outcome.witness))
        print("SemiTransitive")
        print(f"witness={path}")
        return EXIT_OK
    if outcome.status == EXHAUSTED:
        print("NotSemiTransitive")
        return EXIT_NEGATIVE
    print("Timeout")
    return EXIT_UNKNOWN


def cmd_verify(args) -> int:
    g = parse_graph(_read(args.graph))
    o = parse_orientation(_read(args.orientation))
    if o.base.labels != g.labels or o.base.edge_labels() != g.edge_labels():
        print("error: orientation base does not match the graph", file=sys.stderr)
        return EXIT_USAGE
    verdict = verify_semi_transitive(o)
    if verdict.ok:
        print("SemiTransitive")
        return EXIT_OK
    if verdict.cycle is not None:
        print(f"Cycle: {_labels(g, verdict.cycle)}")
    else:
        w = verdict.shortcut
        print(
            f"Shortcut: path {_labels(g, w.path)}; "
            f"shortcutting edge {_labels(g, w.shortcutting_edge)}; "
            f"missing pair {_labels(g, w.missing_pair)}"
        )
    return EXIT_NEGATIVE


def cmd_word(args) -> int:
    if args.word_cmd == "check":
        word_list = words.parse_words(_read(args.wordfile), compact=args.compact)
        if not word_list:
            print("error: word file is empty", file=sys.stderr)
            return EXIT_USAGE
        g = parse_graph(_read(args.graph))
        ok, pair = words.represents(word_list[0], g)
        if ok:
            print("represents")
            return EXIT_OK
        if pair is None:
            print("does-not-represent: alphabet differs from vertex labels")
        else:
            print(f"does-not-represent: differing pair ({pair[0]}, {pair[1]})")
        return EXIT_NEGATIVE
    # complement2k
    word, graph = words.word_complement_matching(args.k)
    ok, _ = words.represents(word, graph)
    assert ok
    if args.word_out:
        Path(args.word_out).write_text(str(word) + "\n")
    if args.graph_out:
        Path(args.graph_out).write_text(encode_graph(graph))
    print(str(word))
    return EXIT_OK


def cmd_classify(args) -> int:
    c = bounds.classify(args.n, args.k, args.complement)
    print(c.render())
    if c.status == bounds.SEMI_TRANSITIVE:
        return EXIT_OK
    if c.status == bounds.NOT_SEMI_TRANSITIVE:
        return EXIT_NEGATIVE
    return EXIT_UNKNOWN


def cmd_reproduce(args) -> int:
    names = list(repro.CASES) if args.case == "all" else [args.case]
    if args.case != "all" and args.case not in repro.CASES:
        print(f"error: unknown case {args.case!r}; choose from "
              f"{', '.join(repro.CASES)} or 'all'", file=sys.stderr)
        return EXIT_USAGE
    results = repro.run_cases(names, args.budget_ms)
    for r in results:
        flag = "PASS" if r.passed else "FAIL"
        print(f"{flag} {r.name} ({r.elapsed_ms:.0f} ms) {r.status} [{r.detail}]")
    if args.report_dir:
        from .report import write_report

        csv_path, png_path = write_report(results, args.report_dir)
        print(f"report: {csv_path} {png_path}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_NEGATIVE


def build_parser() -> _Parser:
    parser = _Parser(prog="semitrans", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate K(n,k) or related graphs")
    p.add_argument("n", nargs="?", type=int)
    p.add_argument("k", nargs="?", type=int)
    p.add_argument("--complement", action="store_true")
    p.add_argument("--lex-prefix", type=int, metavar="M",
                   help="induced subgraph on the M lex-smallest vertices")
    p.add_argument("--figure1", action="store_true",
                   help="the 16-vertex certificate subgraph of K(8,3)")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of text")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("solve", help="decide semi-transitive orientability")
    p.add_argument("graph")
    p.add_argument("--budget-ms", type=float, default=None)
    p.add_argument("--max-nodes", type=int, default=None)
    p.add_argument("--oracle", action="store_true",
                   help="exhaustive orientation enumeration (<= 20 edges)")
    p.add_argument("--witness-out")
    p.add_argument("--stats", action="store_true")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("verify", help="verify an orientation file")
    p.add_argument("graph")
    p.add_argument("orientation")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("word", help="word-representability checks")
    wsub = p.add_subparsers(dest="word_cmd", required=True)
    pc = wsub.add_parser("check", help="does the word represent the graph?")
    pc.add_argument("wordfile")
    pc.add_argument("graph")
    pc.add_argument("--compact", action="store_true",
                    help="treat each character as a token")
    pw = wsub.add_parser("complement2k",
                         help="word for the complement of K(2k,k)")
    pw.add_argument("k", type=int)
    pw.add_argument("--word-out")
    pw.add_argument("--graph-out")
    p.set_defaults(fn=cmd_word)

    p = sub.add_parser("classify", help="theorem-backed classification")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--complement", action="store_true")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("reproduce", help="run reproduction cases")
    p.add_argument("case", help="case name or 'all'")
    p.add_argument("--budget-ms", type=float, default=None)
    p.add_argument("--report-dir",
                   help="write cases.csv and summary.png here")
    p.set_defaults(fn=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
