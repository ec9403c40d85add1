"""Command-line interface.

    pennant index <corpus> -o <indexfile>      build a PNNT1 index file
    pennant rank <indexfile> --seed S          co-count listing as TSV
    pennant pennant <indexfile> --seed S       diagram as json/tsv/svg
    pennant report <indexfile> --seed S -d DIR json+tsv+svg+png to a directory
    pennant serve <indexfile>                  read-only HTTP service

Exit codes: 0 success, 1 usage error, 2 data error (unknown seed,
unreadable corpus or index). PENNANT_LISTEN and PENNANT_INDEX override
the listen address and index path for `serve`.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from .corpus import NormalizationPolicy, read_corpus
from .diagram import DEFAULT_MIN_CO, SectorParams, compute_pennant
from .errors import PennantError
from .index import build_index, load_index, save_index
from .render import RenderStyle, to_json, to_svg, to_table
from .service import DEFAULT_HOST, DEFAULT_PORT, ServiceConfig, serve
from .weighting import DEFAULT_BASE, WeightParams


class _Parser(argparse.ArgumentParser):
    # usage problems are exit code 1; argparse's default of 2 is reserved
    # for data errors here
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _add_diagram_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", required=True, help="seed term at the pennant tip")
    p.add_argument("--min-co", type=int, default=DEFAULT_MIN_CO,
                   help="admit terms co-occurring at least this often (default %(default)s)")
    p.add_argument("--top", type=int, default=None, metavar="K",
                   help="keep only the K highest co-counts")
    p.add_argument("--base", type=float, default=DEFAULT_BASE,
                   help="log base for both axes (default %(default)s)")
    p.add_argument("--alpha", type=float, default=0.5,
                   help="sector A bound on df_term/df_seed (default %(default)s)")
    p.add_argument("--gamma", type=float, default=5.0,
                   help="sector C bound on df_term/df_seed (default %(default)s)")
    p.add_argument("--tau", type=float, default=0.5,
                   help="dominance threshold on co/df_seed (default %(default)s)")


def build_parser() -> _Parser:
    parser = _Parser(prog="pennant", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_index = sub.add_parser("index", help="build an index from a corpus file")
    p_index.add_argument("corpus", help="corpus file (tsv or jsonl; '-' for stdin)")
    p_index.add_argument("-o", "--output", required=True, help="index file to write")
    p_index.add_argument("--fold-case", action="store_true",
                         help="case-fold terms (off by default: descriptor case is significant)")
    p_index.add_argument("--no-trim", action="store_true",
                         help="keep surrounding whitespace on terms")

    p_rank = sub.add_parser("rank", help="list terms co-occurring with a seed")
    p_rank.add_argument("indexfile")
    p_rank.add_argument("--seed", required=True)
    p_rank.add_argument("--min-co", type=int, default=1)
    p_rank.add_argument("--top", type=int, default=None, metavar="K")

    p_pennant = sub.add_parser("pennant", help="compute and render a diagram")
    p_pennant.add_argument("indexfile")
    _add_diagram_args(p_pennant)
    p_pennant.add_argument("--format", choices=("json", "tsv", "svg"), default="json")
    p_pennant.add_argument("-o", "--output", default=None,
                           help="write to a file instead of stdout")

    p_report = sub.add_parser("report", help="write json, tsv, svg and a png figure")
    p_report.add_argument("indexfile")
    _add_diagram_args(p_report)
    p_report.add_argument("-d", "--out-dir", default=".",
                          help="directory for the report files (default current)")

    p_serve = sub.add_parser("serve", help="run the read-only HTTP service")
    p_serve.add_argument("indexfile", nargs="?", default=None,
                         help="index file (or set PENNANT_INDEX)")
    p_serve.add_argument("--listen", default=None, metavar="ADDR:PORT",
                         help=f"bind address (default {DEFAULT_HOST}:{DEFAULT_PORT})")
    p_serve.add_argument("--min-co", type=int, default=DEFAULT_MIN_CO)
    p_serve.add_argument("--base", type=float, default=DEFAULT_BASE)
    p_serve.add_argument("--cors", action="store_true",
                         help="send Access-Control-Allow-Origin: * (for the browser UI)")

    return parser


def _split_listen(value: str, parser: _Parser) -> tuple[str, int]:
    host, sep, port = value.rpartition(":")
    if not sep or not host:
        parser.error(f"--listen expects ADDR:PORT, got {value!r}")
    try:
        return host, int(port)
    except ValueError:
        parser.error(f"--listen expects a numeric port, got {port!r}")
    raise AssertionError("unreachable")


def _diagram_from_args(args):
    index = load_index(args.indexfile)
    return compute_pennant(
        index,
        seed=args.seed,
        min_co=args.min_co,
        top_k=args.top,
        weights=WeightParams(log_base=args.base),
        sectors=SectorParams(alpha=args.alpha, gamma=args.gamma, tau=args.tau),
    )


def _write_text(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        Path(output).write_text(text, encoding="utf-8")


def _cmd_index(args) -> int:
    norm = NormalizationPolicy(trim=not args.no_trim, fold_case=args.fold_case)
    if args.corpus == "-":
        from .corpus import ingest_corpus, iter_corpus_records

        corpus = ingest_corpus(iter_corpus_records(sys.stdin), norm=norm)
    else:
        corpus = read_corpus(args.corpus, norm=norm)
    index = build_index(corpus)
    save_index(index, args.output)
    print(f"indexed {index.n_docs} documents, {len(index)} terms -> {args.output}")
    return 0


def _cmd_rank(args) -> int:
    index = load_index(args.indexfile)
    entries = index.rank_cooccurring(args.seed, min_co=args.min_co, top_k=args.top)
    sys.stdout.write("term\tco\n")
    for e in entries:
        sys.stdout.write(f"{e.term}\t{e.co_count}\n")
    return 0


def _cmd_pennant(args) -> int:
    diagram = _diagram_from_args(args)
    if args.format == "json":
        _write_text(to_json(diagram), args.output)
    elif args.format == "tsv":
        _write_text(to_table(diagram), args.output)
    else:
        _write_text(to_svg(diagram, RenderStyle()), args.output)
    return 0


def _cmd_report(args) -> int:
    from .figures import save_figure

    diagram = _diagram_from_args(args)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = "pennant_" + "".join(c if c.isalnum() else "_" for c in args.seed)
    written = []
    for suffix, text in (
        (".json", to_json(diagram) + "\n"),
        (".tsv", to_table(diagram)),
        (".svg", to_svg(diagram, RenderStyle())),
    ):
        path = out_dir / (stem + suffix)
        path.write_text(text, encoding="utf-8")
        written.append(path)
    png = out_dir / (stem + ".png")
    save_figure(diagram, png)
    written.append(png)
    for path in written:
        print(path)
    return 0


def _cmd_serve(args, parser: _Parser) -> int:
    listen = os.environ.get("PENNANT_LISTEN") or args.listen
    index_path = os.environ.get("PENNANT_INDEX") or args.indexfile
    if index_path is None:
        parser.error("serve needs an index file argument or PENNANT_INDEX")
    host, port = (DEFAULT_HOST, DEFAULT_PORT) if listen is None else _split_listen(listen, parser)
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(name)s %(message)s")
    config = ServiceConfig(
        index_path=index_path,
        host=host,
        port=port,
        min_co=args.min_co,
        log_base=args.base,
        cors=args.cors,
    )
    return serve(config)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "index":
            return _cmd_index(args)
        if args.command == "rank":
            return _cmd_rank(args)
        if args.command == "pennant":
            return _cmd_pennant(args)
        if args.command == "report":
            return _cmd_report(args)
        if args.command == "serve":
            return _cmd_serve(args, parser)
        parser.error(f"unknown command {args.command!r}")
    except PennantError as exc:
        print(f"pennant: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"pennant: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
