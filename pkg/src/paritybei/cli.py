"""Command line interface.

Exit codes: 0 success, 1 usage or parse error, 2 size cap exceeded,
3 internal invariant violation (classifier/oracle disagreement or a failed
run verification).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import spectrum
from .algebra import emit_m2_script
from .chordal import (
    DisconnectedError,
    NotChordalError,
    clique_sum_order,
    is_chordal,
)
from .classify import classify
from .crosscheck import cross_check
from .dot import emit_dot
from .families import FAMILIES, build_family
from .graphio import (
    FORMAT_EDGE_LIST,
    FORMAT_JSON,
    GraphDocument,
    emit_graph,
    parse_graph,
    sniff_format,
)
from .graphs import Graph, GraphInputError, is_connected
from .treealgo import IllegalChoiceError, RunPolicy, run_algorithm

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAP = 2
EXIT_INVARIANT = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: D102 - argparse hook
        raise _UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="paritybei", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def add_input(sp):
        sp.add_argument("input", help="graph file, or '-' for standard input")
        sp.add_argument(
            "--format",
            choices=[FORMAT_EDGE_LIST, FORMAT_JSON],
            default=None,
            help="input format (default: sniffed)",
        )

    def add_json(sp):
        sp.add_argument("--json", action="store_true", help="emit a JSON document")

    def add_max_n(sp):
        sp.add_argument(
            "--max-n",
            type=int,
            default=spectrum.DEFAULT_MAX_N,
            help="vertex cap for exhaustive scans",
        )

    sp = sub.add_parser("classify", help="theorem-backed classification")
    add_input(sp)
    add_json(sp)
    add_max_n(sp)

    sp = sub.add_parser("oracle", help="exhaustive unmixedness oracle")
    add_input(sp)
    add_json(sp)
    add_max_n(sp)

    sp = sub.add_parser("spectrum", help="sign-split disconnector spectrum")
    add_input(sp)
    add_json(sp)
    add_max_n(sp)

    sp = sub.add_parser("algorithm", help="staged tree construction trace")
    add_input(sp)
    add_json(sp)
    sp.add_argument(
        "--policy",
        default="lex",
        help="'lex' or 'script=<file>' with explicit choices",
    )
    sp.add_argument(
        "--order",
        default=None,
        help="file with one clique per line (original labels) fixing the clique order",
    )

    sp = sub.add_parser("generate", help="emit a named family member")
    sp.add_argument("family", help=", ".join(sorted(FAMILIES)))
    sp.add_argument("params", nargs="*", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument(
        "--format",
        choices=[FORMAT_EDGE_LIST, FORMAT_JSON],
        default=FORMAT_EDGE_LIST,
    )

    sp = sub.add_parser("check", help="cross-check classifier against the oracle")
    sp.add_argument("input", nargs="?", help="graph file, or '-' for standard input")
    sp.add_argument("--dir", default=None, help="check every file in a directory")
    sp.add_argument(
        "--format",
        choices=[FORMAT_EDGE_LIST, FORMAT_JSON],
        default=None,
    )
    add_json(sp)
    add_max_n(sp)
    sp.add_argument("--limit", type=int, default=64, help="run-enumeration limit")

    sp = sub.add_parser("emit-m2", help="emit a computer-algebra script")
    add_input(sp)

    sp = sub.add_parser("dot", help="emit Graphviz DOT")
    add_input(sp)
    add_max_n(sp)
    sp.add_argument(
        "--annotate",
        choices=["none", "classify", "algorithm"],
        default="classify",
    )

    sp = sub.add_parser(
        "report", help="write a delimited report and figures for one or more graphs"
    )
    sp.add_argument("inputs", nargs="+", help="graph files")
    sp.add_argument("--out", required=True, help="output directory")
    sp.add_argument(
        "--format",
        choices=[FORMAT_EDGE_LIST, FORMAT_JSON],
        default=None,
    )
    add_max_n(sp)
    return p


def _read_graph(path: str, fmt: str | None) -> GraphDocument:
    if path == "-":
        text = sys.stdin.read()
    else:
        p = Path(path)
        if not p.exists():
            raise GraphInputError(f"no such file: {path}")
        text = p.read_text()
    return parse_graph(text, fmt or sniff_format(text))


def _dump(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _flag(value: bool | None) -> str:
    if value is None:
        return "undetermined"
    return "yes" if value else "no"


def _cmd_classify(args) -> int:
    doc = _read_graph(args.input, args.format)
    outcome = classify(doc.graph, max_n=args.max_n)
    if args.json:
        sys.stdout.write(_dump(outcome.to_doc()))
        return EXIT_OK
    c = outcome.combined
    pattern = f", pattern {c.pattern.pattern}" if c.pattern else ""
    print(
        f"unmixed: {_flag(c.unmixed)}, Cohen-Macaulay: {_flag(c.cohen_macaulay)}, "
        f"Gorenstein: {_flag(c.gorenstein)}, complete intersection: "
        f"{_flag(c.complete_intersection)} ({c.basis}{pattern})"
    )
    if c.witness:
        print(f"violating disconnector: {sorted(c.witness)}")
    return EXIT_OK


def _cmd_oracle(args) -> int:
    doc = _read_graph(args.input, args.format)
    verdict = spectrum.unmixedness_oracle(doc.graph, max_n=args.max_n)
    witness = (
        sorted(doc.graph.labels_of(verdict.witness))
        if verdict.witness is not None
        else None
    )
    if args.json:
        sys.stdout.write(_dump({"unmixed": verdict.unmixed, "witness": witness}))
        return EXIT_OK
    if verdict.unmixed:
        print("unmixed: yes")
    else:
        print(f"unmixed: no; witness S={witness}")
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    doc = _read_graph(args.input, args.format)
    g = doc.graph
    report = spectrum.spectrum_report(g, max_n=args.max_n)
    if args.json:
        records = [
            {
                "s": sorted(g.labels_of(r.s)),
                "height": r.height,
                "components": [sorted(g.labels_of(c)) for c in r.profile.components],
                "bipartite": list(r.profile.bipartite),
                "signs": {str(i): sign.value for i, sign in r.witness},
            }
            for r in report.records
        ]
        sys.stdout.write(
            _dump(
                {
                    "records": records,
                    "heights": list(report.heights),
                    "krull_dimension": report.krull_dimension,
                    "unmixed": report.unmixed,
                    "witness": (
                        sorted(g.labels_of(report.witness))
                        if report.witness is not None
                        else None
                    ),
                }
            )
        )
        return EXIT_OK
    print(f"sign-split disconnectors: {len(report.records)}")
    print(f"heights: {list(report.heights)}")
    print(f"krull dimension: {report.krull_dimension}")
    if report.unmixed:
        print("unmixed: yes")
    else:
        assert report.witness is not None
        print(f"unmixed: no; witness S={sorted(g.labels_of(report.witness))}")
    return EXIT_OK


def _parse_policy(spec: str, g: Graph) -> RunPolicy:
    if spec == "lex":
        return RunPolicy.lexicographic()
    if spec.startswith("script="):
        path = Path(spec.split("=", 1)[1])
        if not path.exists():
            raise GraphInputError(f"no such policy script: {path}")
        data = json.loads(path.read_text())
        entries = []
        for item in data.get("choices", []):
            entries.append((item.get("cliques"), item.get("vertex")))
        return RunPolicy.from_script(entries)
    raise GraphInputError(f"unknown policy '{spec}' (use 'lex' or 'script=<file>')")


def _read_order(path: str, g: Graph) -> list[frozenset[int]]:
    cliques = []
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        cliques.append(frozenset(g.index_of(int(tok)) for tok in line.split()))
    return cliques


def _cmd_algorithm(args) -> int:
    doc = _read_graph(args.input, args.format)
    g = doc.graph
    order = _read_order(args.order, g) if args.order else None
    decomp = clique_sum_order(g, order=order)
    policy = _parse_policy(args.policy, g)
    result = run_algorithm(g, decomp, policy)
    if args.json:
        sys.stdout.write(_dump(result.to_doc()))
        return EXIT_OK
    trace = result.to_doc()
    print(f"cliques: {trace['cliques']}")
    for step in trace["steps"]:
        print(
            f"step {step['p']}: d={step['d']} a2={step['a2']} a1={step['a1']} "
            f"a0={step['a0']} tree={step['tree']}"
        )
    print(f"tree: {trace['tree']}")
    print(f"S: {trace['s']}  S2: {trace['s2']}  S0: {trace['s0']}")
    return EXIT_OK


def _cmd_generate(args) -> int:
    g = build_family(args.family, args.params, seed=args.seed)
    doc = GraphDocument(args.format, g.labels, g)
    sys.stdout.write(emit_graph(doc, args.format))
    return EXIT_OK


def _check_one(doc: GraphDocument, args) -> tuple[dict, bool, str]:
    report = cross_check(doc.graph, max_n=args.max_n, run_limit=args.limit)
    unmixed = report.classification.combined.unmixed
    if report.agree is False:
        line = "DISAGREE: classifier and oracle differ"
    elif report.violations:
        line = f"VIOLATIONS: {len(report.violations)} invariant failure(s)"
    else:
        verdict = _flag(unmixed)
        extra = ""
        if unmixed is False and report.oracle_witness:
            extra = f"; witness S={sorted(report.oracle_witness)}"
        line = f"agree: unmixed={verdict}{extra} (runs checked: {report.runs_checked})"
    return report.to_doc(), report.ok, line


def _cmd_check(args) -> int:
    if (args.input is None) == (args.dir is None):
        raise _UsageError("check needs exactly one of INPUT or --dir")
    jobs: list[tuple[str, GraphDocument]] = []
    if args.dir is not None:
        base = Path(args.dir)
        if not base.is_dir():
            raise GraphInputError(f"not a directory: {base}")
        for path in sorted(base.iterdir()):
            if path.is_file():
                text = path.read_text()
                jobs.append(
                    (path.name, parse_graph(text, args.format or sniff_format(text)))
                )
    else:
        jobs.append((args.input, _read_graph(args.input, args.format)))
    all_ok = True
    docs = []
    for name, doc in jobs:
        payload, ok, line = _check_one(doc, args)
        payload["input"] = name
        docs.append(payload)
        all_ok = all_ok and ok
        if not args.json:
            print(f"{name}: {line}")
    if args.json:
        sys.stdout.write(_dump(docs if len(docs) > 1 else docs[0]))
    return EXIT_OK if all_ok else EXIT_INVARIANT


def _cmd_emit_m2(args) -> int:
    doc = _read_graph(args.input, args.format)
    sys.stdout.write(emit_m2_script(doc.graph))
    return EXIT_OK


def _cmd_dot(args) -> int:
    doc = _read_graph(args.input, args.format)
    g = doc.graph
    classification = None
    result = None
    if args.annotate == "classify":
        classification = classify(g, max_n=args.max_n).combined
    elif args.annotate == "algorithm":
        if is_chordal(g).chordal and is_connected(g):
            result = run_algorithm(g, clique_sum_order(g))
        else:
            raise GraphInputError(
                "algorithm annotation needs a connected chordal graph"
            )
    sys.stdout.write(emit_dot(g, classification=classification, result=result))
    return EXIT_OK


def _cmd_report(args) -> int:
    from .figures import render_figure  # deferred: pulls in matplotlib

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rows = []
    for raw in args.inputs:
        doc = _read_graph(raw, args.format)
        g = doc.graph
        name = Path(raw).stem if raw != "-" else "stdin"
        outcome = classify(g, max_n=args.max_n)
        c = outcome.combined
        result = None
        if g.n > 0 and is_connected(g) and is_chordal(g).chordal:
            result = run_algorithm(g, clique_sum_order(g))
        fig_path = out / f"{name}.png"
        render_figure(
            g,
            fig_path,
            classification=c,
            result=result,
            title=f"{name}: unmixed={_flag(c.unmixed)} CM={_flag(c.cohen_macaulay)}",
        )
        rows.append(
            {
                "name": name,
                "vertices": g.n,
                "edges": g.edge_count,
                "chordal": is_chordal(g).chordal,
                "unmixed": _flag(c.unmixed),
                "cohen_macaulay": _flag(c.cohen_macaulay),
                "gorenstein": _flag(c.gorenstein),
                "complete_intersection": _flag(c.complete_intersection),
                "basis": c.basis,
                "pattern": c.pattern.pattern if c.pattern else "",
                "witness": " ".join(map(str, c.witness)) if c.witness else "",
                "figure": fig_path.name,
            }
        )
    report_path = out / "report.csv"
    with report_path.open("w", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)
    print(f"wrote {report_path} and {len(rows)} figure(s) to {out}")
    return EXIT_OK


_COMMANDS = {
    "classify": _cmd_classify,
    "oracle": _cmd_oracle,
    "spectrum": _cmd_spectrum,
    "algorithm": _cmd_algorithm,
    "generate": _cmd_generate,
    "check": _cmd_check,
    "emit-m2": _cmd_emit_m2,
    "dot": _cmd_dot,
    "report": _cmd_report,
}


def cli_main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except spectrum.SizeCapError as exc:
        print(f"size cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GraphInputError, NotChordalError, DisconnectedError, IllegalChoiceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    raise SystemExit(cli_main())


if __name__ == "__main__":
    main()
