"""Terminal front door: summarize files or stdin, serve the API, browse the store.

Exit codes: 0 success, 1 usage error, 2 engine error, 3 I/O error.
Documents summarized from a file or stdin get a content-addressed id
(sha-256 of the normalized text, truncated to 32 hex chars), so identical
inputs produce byte-identical JSON across runs and across the service.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
from dataclasses import replace
from datetime import datetime, timezone
from pathlib import Path

from .config import ServiceConfig, load_service_config
from .documents import RawDocument, Source
from .embeddings import load_embedding_file
from .errors import SummaryLensError
from .segmenter import normalize_text
from .store import DocumentStore
from .summarizer import (
    Method,
    SummaryConfig,
    highlighted_to_json,
    highlights,
    summarize,
    summary_to_json,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ENGINE = 2
EXIT_IO = 3

FORMATS = ("json", "text", "highlight")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on its own; route through UsageError instead
    # so usage problems map to exit code 1.
    def error(self, message):
        raise UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="summarylens", description="Extractive summarization engine")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sum = sub.add_parser("summarize", help="summarize a text file or stdin")
    p_sum.add_argument("file", nargs="?", help="UTF-8 text file; stdin when omitted")
    p_sum.add_argument("--k", type=int, default=None, help="number of sentences (default 5)")
    p_sum.add_argument("--method", choices=[m.value for m in Method], default=None)
    p_sum.add_argument("--format", choices=FORMATS, default="text", dest="output_format")
    p_sum.add_argument("--embeddings", type=Path, default=None, help="GloVe-format table path")
    p_sum.add_argument("--config", type=Path, default=None, help="key = value config file")
    p_sum.add_argument("--data-dir", type=Path, default=None)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--config", type=Path, default=None)
    p_serve.add_argument("--embeddings", type=Path, default=None)
    p_serve.add_argument("--data-dir", type=Path, default=None)

    p_docs = sub.add_parser("docs", help="browse stored documents")
    docs_sub = p_docs.add_subparsers(dest="docs_command", required=True)
    p_list = docs_sub.add_parser("list", help="list stored documents, newest first")
    p_list.add_argument("--config", type=Path, default=None)
    p_list.add_argument("--data-dir", type=Path, default=None)
    p_show = docs_sub.add_parser("show", help="print one stored document as JSON")
    p_show.add_argument("id")
    p_show.add_argument("--config", type=Path, default=None)
    p_show.add_argument("--data-dir", type=Path, default=None)

    return parser


def _read_input(path_arg: str | None) -> str:
    if path_arg is None or path_arg == "-":
        return sys.stdin.read()
    return Path(path_arg).read_text(encoding="utf-8")


def document_for_text(text: str, source: Source = Source.TEXT) -> RawDocument:
    """Content-addressed document for one-shot summarization."""
    normalized = normalize_text(text)
    digest = hashlib.sha256(normalized.encode("utf-8")).hexdigest()[:32]
    return RawDocument(
        id=digest, source=source, text=normalized, created_at=datetime.now(timezone.utc)
    )


def _base_config(args) -> ServiceConfig:
    config = load_service_config(args.config)
    if getattr(args, "data_dir", None) is not None:
        config = replace(config, data_dir=args.data_dir)
    if getattr(args, "embeddings", None) is not None:
        config = replace(config, embeddings_path=args.embeddings)
    return config


def _render_highlight(document: RawDocument, summary, open_marker: str, close_marker: str) -> str:
    marked = highlights(document, summary)
    parts: list[str] = []
    cursor = 0
    for start, end in marked.highlight_spans:
        parts.append(marked.text[cursor:start])
        parts.append(f"{open_marker}{marked.text[start:end]}{close_marker}")
        cursor = end
    parts.append(marked.text[cursor:])
    return "".join(parts)


def _cmd_summarize(args, out) -> int:
    config = _base_config(args)
    method = Method(args.method) if args.method else config.summary.method
    k = args.k if args.k is not None else config.summary.k
    if k < 1:
        raise UsageError(f"--k must be >= 1, got {k}")
    summary_config = SummaryConfig(method=method, k=k, rank=config.summary.rank)

    text = _read_input(args.file)
    document = document_for_text(text)

    table = None
    if method is Method.TEXTRANK:
        if config.embeddings_path is None:
            raise SummaryLensError("the textrank method requires --embeddings (or a config entry)")
        table = load_embedding_file(config.embeddings_path, max_tokens=config.embeddings_max_tokens)

    summary = summarize(document, summary_config, table)

    if args.output_format == "json":
        out.write(summary_to_json(summary) + "\n")
    elif args.output_format == "text":
        for sentence in summary.sentences:
            out.write(sentence + "\n")
    else:
        out.write(_render_highlight(document, summary, config.highlight_open, config.highlight_close) + "\n")
    return EXIT_OK


def _cmd_serve(args) -> int:
    from .service import run_service

    run_service(_base_config(args))
    return EXIT_OK


def _cmd_docs(args, out) -> int:
    config = _base_config(args)
    store = DocumentStore(config.data_dir)
    if args.docs_command == "list":
        for info in store.list_documents():
            out.write(f"{info.id}\t{info.created_at.isoformat()}\t{info.preview}\n")
        return EXIT_OK
    from .documents import document_to_json

    out.write(document_to_json(store.get_document(args.id)) + "\n")
    return EXIT_OK


def run(argv: list[str], out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE

    try:
        if args.command == "summarize":
            return _cmd_summarize(args, out)
        if args.command == "serve":
            return _cmd_serve(args)
        return _cmd_docs(args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except SummaryLensError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_ENGINE
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_ENGINE
    except OSError as exc:
        err.write(f"i/o error: {exc}\n")
        return EXIT_IO


def main() -> None:
    sys.exit(run(sys.argv[1:]))
