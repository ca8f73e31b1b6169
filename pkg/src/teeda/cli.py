"""Headless batch interface: serve the registry or run any analysis on a
corpus file. Exit codes: 0 ok, 1 usage error, 2 validation/parse/IO error."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analytics import (
    analytics_document,
    compare_breakdowns,
    corpus_stats,
    render_comparison_text,
    render_stats_summary,
    render_stats_text,
)
from .model import Corpus, DataKind, DataRequest, TeedaError
from .network import build_network, network_document, rank_candidates
from .persistence import (
    export_csv,
    export_network,
    import_csv,
    load_corpus,
    save_corpus,
)
from .scenario import render_report_text, scenario_report

USAGE_ERROR = 1
DATA_ERROR = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="teeda", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_serve = sub.add_parser("serve", help="run the registry server on a corpus file")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--data", required=True, help="corpus file (created if absent)")
    p_serve.add_argument("--ui", default=None, help="directory with the built web client")

    p_import = sub.add_parser("import", help="bulk-add items from a csv or records file")
    p_import.add_argument("file")
    p_import.add_argument("--kind", choices=["request", "providable"], required=True)
    p_import.add_argument("--format", choices=["csv", "records"], default="csv")
    p_import.add_argument("--into", required=True, help="corpus file to append into")

    p_export = sub.add_parser("export", help="write a corpus out as csv or records")
    p_export.add_argument("corpus")
    p_export.add_argument("--format", choices=["csv", "records"], default="records")
    p_export.add_argument("--kind", choices=["request", "providable"], default=None,
                          help="required for csv (column sets differ per kind)")
    p_export.add_argument("--out", required=True)

    p_stats = sub.add_parser("stats", help="print corpus statistics")
    p_stats.add_argument("corpus")
    p_stats.add_argument("--json", action="store_true", dest="as_json")

    p_network = sub.add_parser("network", help="export the shared-variable network")
    p_network.add_argument("corpus")
    p_network.add_argument("--out", default=None, help="output file (stdout if omitted)")

    p_match = sub.add_parser("match", help="rank providable data for one request")
    p_match.add_argument("corpus")
    p_match.add_argument("--request", required=True, dest="request_id")
    p_match.add_argument("--top", type=int, default=None)
    p_match.add_argument("--json", action="store_true", dest="as_json")

    p_report = sub.add_parser("report", help="print the per-category scenario report")
    p_report.add_argument("corpus")
    p_report.add_argument("--json", action="store_true", dest="as_json")

    p_compare = sub.add_parser("compare", help="compare jacket metadata of two corpora")
    p_compare.add_argument("corpus_a")
    p_compare.add_argument("corpus_b")
    p_compare.add_argument("--dimension", choices=["sharing", "types", "formats"],
                           required=True)
    p_compare.add_argument("--json", action="store_true", dest="as_json")

    return parser


def _print_json(doc) -> None:
    print(json.dumps(doc, ensure_ascii=False, indent=2))


def _cmd_serve(args) -> int:
    import uvicorn

    from .registry import Registry
    from .server import create_app

    registry = Registry(data_path=args.data)
    app = create_app(registry, ui_dir=args.ui)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def _cmd_import(args) -> int:
    into = Path(args.into)
    corpus = load_corpus(into) if into.exists() else Corpus()
    kind = DataKind.parse(args.kind)
    failures = 0
    if args.format == "csv":
        result = import_csv(args.file, kind)
        for error in result.errors:
            failures += 1
            reasons = "; ".join(f"{e.field}: {e.reason}" for e in error.errors)
            print(f"row {error.row}: {reasons}", file=sys.stderr)
        new_items = list(result.items)
    else:
        loaded = load_corpus(args.file)
        new_items = []
        for item in loaded:
            if item.kind != kind:
                failures += 1
                print(f"item {item.id}: kind {item.kind.value} != {kind.value}",
                      file=sys.stderr)
                continue
            new_items.append(item)
    added = 0
    for item in new_items:
        if item.id in corpus:
            failures += 1
            print(f"item {item.id}: DuplicateId", file=sys.stderr)
            continue
        corpus.add(item)
        added += 1
    save_corpus(corpus, into)
    print(f"imported {added} items into {into} ({failures} rejected)")
    return DATA_ERROR if failures else 0


def _cmd_export(args) -> int:
    corpus = load_corpus(args.corpus)
    if args.format == "csv":
        if args.kind is None:
            print("error: --kind is required for csv export", file=sys.stderr)
            return USAGE_ERROR
        export_csv(corpus, args.out, DataKind.parse(args.kind))
    else:
        save_corpus(corpus, args.out)
    return 0


def _cmd_stats(args) -> int:
    corpus = load_corpus(args.corpus)
    if args.as_json:
        _print_json(analytics_document(corpus))
        return 0
    stats = corpus_stats(corpus)
    print(render_stats_summary(stats))
    print()
    print(render_stats_text(stats))
    return 0


def _cmd_network(args) -> int:
    corpus = load_corpus(args.corpus)
    network = build_network(corpus)
    if args.out:
        export_network(network, args.out)
    else:
        _print_json(network_document(network))
    return 0


def _cmd_match(args) -> int:
    corpus = load_corpus(args.corpus)
    request = corpus.get(args.request_id)
    if not isinstance(request, DataRequest):
        print(f"error: UnknownRequest: {args.request_id!r}", file=sys.stderr)
        return DATA_ERROR
    reports = rank_candidates(request, corpus, args.top)
    if args.as_json:
        _print_json([r.to_document() for r in reports])
        return 0
    if not reports:
        print(f"request {request.id} is unmet: no providable data shares any variable")
        return 0
    for report in reports:
        status = "satisfied" if report.satisfied else "partial"
        line = (
            f"{report.jacket_id}  coverage {float(report.coverage):.2f}  {status}  "
            f"covered {len(report.covered)}/{len(request.variables)}"
        )
        if report.missing:
            line += f"  missing: {', '.join(sorted(report.missing))}"
        print(line)
    return 0


def _cmd_report(args) -> int:
    corpus = load_corpus(args.corpus)
    report = scenario_report(corpus)
    if args.as_json:
        _print_json(report.to_document())
    else:
        print(render_report_text(report))
    return 0


def _cmd_compare(args) -> int:
    corpus_a = load_corpus(args.corpus_a)
    corpus_b = load_corpus(args.corpus_b)
    comparison = compare_breakdowns(corpus_a, corpus_b, args.dimension)
    if args.as_json:
        _print_json(comparison.to_document())
    else:
        print(render_comparison_text(comparison))
    return 0


_COMMANDS = {
    "serve": _cmd_serve,
    "import": _cmd_import,
    "export": _cmd_export,
    "stats": _cmd_stats,
    "network": _cmd_network,
    "match": _cmd_match,
    "report": _cmd_report,
    "compare": _cmd_compare,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return _COMMANDS[args.command](args)
    except (TeedaError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
