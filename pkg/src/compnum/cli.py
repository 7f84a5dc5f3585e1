"""Command-line surface.

Subcommands: bound, exact, competition, survey, gen (plus a hidden verify).
Exit codes are a stable contract: 0 success, 1 parse or I/O error, 2 usage
error, 3 node budget exhausted.  The COMPNUM_BUDGET_NODES environment
variable caps solver nodes when set; --budget overrides it.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import csv
import json
import os
import sys
import time

from .bounds import general_bound, general_bound_term, opsut_edge_bound, opsut_vertex_bound
from .covers import edge_clique_cover_number
from .graphs import (
    GENERATOR_FAMILIES,
    GraphParseError,
    all_labeled_graphs,
    generate,
    parse_arc_list,
    parse_graph6,
    random_graphs,
    write_graph6,
)
from .realizer import BudgetExceededError, competition_number, competition_graph, verify_realization

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

SURVEY_COLUMNS = ("graph6", "n", "edges", "theta_e", "opsut_e", "opsut_v", "general", "k_exact", "millis")


def _env_budget() -> int | None:
    raw = os.environ.get("COMPNUM_BUDGET_NODES")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise GraphParseError(f"COMPNUM_BUDGET_NODES must be an integer, got {raw!r}") from None


def _budget_from(args) -> int | None:
    return args.budget if args.budget is not None else _env_budget()


def _clamped(value: int) -> int:
    return max(0, value)


# -- bound --------------------------------------------------------------------


def cmd_bound(args, parser) -> int:
    if args.m is not None and args.method != "general":
        parser.error("--m is only valid with --method general")
    lines = _graph_inputs(args, parser)
    for text in lines:
        g = parse_graph6(text)
        if args.method == "opsut-e":
            value = opsut_edge_bound(g)
            _emit_single_bound(text, "opsut-e", value, args.json)
        elif args.method == "opsut-v":
            value = opsut_vertex_bound(g)
            _emit_single_bound(text, "opsut-v", value, args.json)
        elif args.m is not None:
            if not 1 <= args.m <= g.n:
                parser.error(f"--m must be in 1..{g.n} for this graph")
            term = general_bound_term(g, args.m)
            _emit_single_bound(text, f"general[m={args.m}]", term.value, args.json)
        else:
            report = general_bound(g)
            if args.json:
                payload = {
                    "graph6": text,
                    "method": "general",
                    "general_raw": report.general,
                    "general": _clamped(report.general),
                    "opsut_e_raw": report.opsut_edge,
                    "opsut_e": _clamped(report.opsut_edge),
                    "opsut_v_raw": report.opsut_vertex,
                    "opsut_v": _clamped(report.opsut_vertex),
                    "terms": [
                        {"m": t.m, "value": t.value, "subset": list(t.subset)}
                        for t in report.terms
                    ],
                    "truncated_ms": sorted(report.truncated_ms),
                }
                print(json.dumps(payload))
            else:
                print(f"general = {report.general}")
                for t in report.terms:
                    subset = ",".join(str(v) for v in t.subset)
                    print(f"  m={t.m}: {t.value}  (U={{{subset}}})")
    return EXIT_OK


def _emit_single_bound(graph6: str, method: str, value: int, as_json: bool) -> None:
    if as_json:
        print(json.dumps({"graph6": graph6, "method": method, "value_raw": value, "value": _clamped(value)}))
    elif value < 0:
        print(f"{value} (clamped 0)")
    else:
        print(value)


def _graph_inputs(args, parser) -> list[str]:
    if args.stdin:
        if args.graph6 is not None:
            parser.error("give a graph6 argument or --stdin, not both")
        return [line.strip() for line in sys.stdin if line.strip()]
    if args.graph6 is None:
        parser.error("missing graph6 argument (or use --stdin)")
    return [args.graph6]


# -- exact --------------------------------------------------------------------


def cmd_exact(args, parser) -> int:
    g = parse_graph6(args.graph6)
    try:
        k, witness = competition_number(g, start_k=args.start_k, budget=_budget_from(args))
    except BudgetExceededError as err:
        print(f"k >= {err.lower_bound}; upper bound unknown (node budget exhausted)")
        return EXIT_BUDGET
    if args.witness:
        text = witness.to_dot() if args.witness.endswith(".dot") else witness.to_arc_list()
        with open(args.witness, "w") as fh:
            fh.write(text)
    if args.json:
        payload = {"graph6": args.graph6, "k": k}
        if args.witness:
            payload["witness"] = args.witness
        print(json.dumps(payload))
    else:
        print(f"k = {k}")
    return EXIT_OK


# -- competition --------------------------------------------------------------


def cmd_competition(args, parser) -> int:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file) as fh:
            text = fh.read()
    d = parse_arc_list(text)
    print(write_graph6(competition_graph(d)))
    return EXIT_OK


# -- survey -------------------------------------------------------------------


def _survey_row(task: tuple[str, bool, int | None]) -> dict:
    text, with_exact, budget = task
    started = time.perf_counter()
    try:
        g = parse_graph6(text)
    except GraphParseError as err:
        return {"graph6": text, "error": str(err)}
    theta_e = edge_clique_cover_number(g)
    report = general_bound(g, prune=True) if g.n else None
    k_exact: str | int = ""
    if with_exact and g.n:
        try:
            k_exact, _ = competition_number(g, budget=budget)
        except BudgetExceededError:
            k_exact = "?"
    millis = int((time.perf_counter() - started) * 1000)
    return {
        "graph6": text,
        "n": g.n,
        "edges": g.edge_count,
        "theta_e": theta_e,
        "opsut_e": "" if report is None else _clamped(report.opsut_edge),
        "opsut_v": "" if report is None else _clamped(report.opsut_vertex),
        "general": "" if report is None else _clamped(report.general),
        "k_exact": k_exact,
        "millis": millis,
    }


def cmd_survey(args, parser) -> int:
    if args.all_labeled is not None:
        if not 0 <= args.all_labeled <= 6:
            parser.error("--all-labeled supports 0..6 vertices")
        lines = [write_graph6(g) for g in all_labeled_graphs(args.all_labeled)]
    else:
        with open(args.input) as fh:
            lines = [line.strip() for line in fh if line.strip()]
    tasks = [(text, args.with_exact, _env_budget()) for text in lines]
    if args.jobs > 1 and len(tasks) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_survey_row, tasks, chunksize=16))
    else:
        rows = [_survey_row(t) for t in tasks]

    errors = sum(1 for r in rows if "error" in r)
    as_jsonl = args.output is not None and args.output.endswith(".jsonl")
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        if as_jsonl:
            for row in rows:
                out.write(json.dumps(row) + "\n")
        else:
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(SURVEY_COLUMNS)
            for row in rows:
                if "error" in row:
                    writer.writerow([row["graph6"]] + [""] * (len(SURVEY_COLUMNS) - 1))
                else:
                    writer.writerow([row[c] for c in SURVEY_COLUMNS])
    finally:
        if args.output:
            out.close()
    for row in rows:
        if "error" in row:
            print(f"survey: skipped {row['graph6']!r}: {row['error']}", file=sys.stderr)
    if errors:
        print(f"survey: {errors} malformed input line(s)", file=sys.stderr)
    return EXIT_OK


# -- gen ----------------------------------------------------------------------


def cmd_gen(args, parser) -> int:
    try:
        params = [float(p) if "." in p else int(p) for p in args.params.split(",") if p]
    except ValueError:
        parser.error(f"cannot parse --params {args.params!r}")
    if args.family == "random":
        if args.seed is None:
            parser.error("--family random requires --seed")
        if len(params) != 2:
            parser.error("random family takes --params n,p")
        for g in random_graphs(int(params[0]), float(params[1]), args.seed, args.count):
            print(write_graph6(g))
    else:
        try:
            g = generate(args.family, params, seed=args.seed)
        except ValueError as err:
            parser.error(str(err))
        for _ in range(args.count):
            print(write_graph6(g))
    return EXIT_OK


# -- verify (hidden) ----------------------------------------------------------


def cmd_verify(args, parser) -> int:
    g = parse_graph6(args.graph)
    with open(args.witness) as fh:
        d = parse_arc_list(fh.read())
    result = verify_realization(g, args.k, d)
    if result.ok:
        print("OK")
        return EXIT_OK
    print(f"FAIL: {result.reason}")
    return EXIT_PARSE


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="compnum",
        description="Exact competition-graph toolkit: bounds, covers, and competition numbers.",
    )
    sub = parser.add_subparsers(dest="command", metavar="{bound,exact,competition,survey,gen}")

    p = sub.add_parser("bound", help="lower bounds for the competition number")
    p.add_argument("--method", required=True, choices=["opsut-e", "opsut-v", "general"])
    p.add_argument("--m", type=int, default=None, help="single term of the general bound")
    p.add_argument("--json", action="store_true")
    p.add_argument("--stdin", action="store_true", help="read graph6 lines from stdin")
    p.add_argument("graph6", nargs="?", default=None)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("exact", help="exact competition number with witness")
    p.add_argument("--witness", metavar="PATH", help="write the witness digraph (.dot for DOT, else arc list)")
    p.add_argument("--start-k", type=int, default=None, dest="start_k")
    p.add_argument("--budget", type=int, default=None, help="search node cap")
    p.add_argument("--json", action="store_true")
    p.add_argument("graph6")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("competition", help="competition graph of an arc-list digraph")
    p.add_argument("file", help="arc-list file, or - for stdin")
    p.set_defaults(func=cmd_competition)

    p = sub.add_parser("survey", help="per-graph invariant table over a corpus")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="FILE", help="file of graph6 lines")
    src.add_argument("--all-labeled", type=int, metavar="N", help="all labeled graphs on N vertices")
    p.add_argument("--output", "-o", metavar="PATH", help="csv (default) or .jsonl by extension; stdout if omitted")
    p.add_argument("--with-exact", action="store_true", help="also solve each graph exactly")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("gen", help="generate family graphs as graph6 lines")
    p.add_argument("--family", required=True, choices=list(GENERATOR_FAMILIES))
    p.add_argument("--params", required=True, help="comma-separated family parameters")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify")  # hidden from the top-level metavar
    p.add_argument("--graph", required=True, help="graph6 of the original graph")
    p.add_argument("--k", required=True, type=int)
    p.add_argument("witness", help="arc-list witness file")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "func", None):
        parser.print_help()
        return EXIT_USAGE
    try:
        return args.func(args, parser)
    except (ValueError, OSError) as err:
        # covers format errors (GraphParseError) and domain errors such as
        # asking for a bound of the 0-vertex graph
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
