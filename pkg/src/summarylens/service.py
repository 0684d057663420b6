"""HTTP service exposing scan, paste, listing, summary and highlight routes.

Routes (JSON over HTTP/1.1):

    POST /api/v1/scan                          image bytes -> {document_id, text}
    POST /api/v1/documents                     {"text": ...} -> {document_id, text}
    GET  /api/v1/documents                     newest-first listing
    GET  /api/v1/documents/{id}                stored document
    GET  /api/v1/documents/{id}/summary        ?k=&method=
    GET  /api/v1/documents/{id}/highlights     ?k=&method=

Summaries are cached in the store per (document, method, k); identical
requests return byte-identical bodies. A UI bundle directory, when
configured, is served at /.
"""

from __future__ import annotations

from dataclasses import replace

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .config import ServiceConfig
from .documents import Source
from .embeddings import EmbeddingTable, load_embedding_file
from .errors import (
    EmptyAfterNormalization,
    EmptyDocument,
    MissingFixtureText,
    NotFound,
    ProviderBadResponse,
    ProviderTimeout,
    ProviderUnreachable,
    StorageFailure,
    SummaryLensError,
    UnsupportedMethod,
)
from .ingest import OcrKind, ingest_text, ocr_extract
from .store import DocumentStore
from .summarizer import (
    Method,
    Summary,
    SummaryConfig,
    highlighted_to_json,
    highlights,
    summarize,
    summary_to_json,
)

_STATUS_BY_ERROR = [
    ((EmptyDocument, EmptyAfterNormalization, UnsupportedMethod), 400),
    ((NotFound,), 404),
    ((ProviderUnreachable, ProviderTimeout, ProviderBadResponse), 502),
    ((StorageFailure, MissingFixtureText), 500),
]


class BadRequest(SummaryLensError):
    """Invalid client-supplied parameter or body."""


def _status_for(exc: SummaryLensError) -> int:
    for classes, status in _STATUS_BY_ERROR:
        if isinstance(exc, classes):
            return status
    return 500


def _json_bytes(serialized: str) -> Response:
    return Response(content=serialized.encode("utf-8"), media_type="application/json")


def create_app(config: ServiceConfig, table: EmbeddingTable | None = None) -> FastAPI:
    """Build the application around a validated config.

    ``table`` may be passed preloaded (tests, shared processes); otherwise it
    is read from the configured embeddings path.
    """
    config = config.validated()
    if table is None and config.embeddings_path is not None:
        table = load_embedding_file(config.embeddings_path, max_tokens=config.embeddings_max_tokens)
    store = DocumentStore(config.data_dir)

    app = FastAPI(title="summarylens", docs_url=None, redoc_url=None)

    @app.exception_handler(SummaryLensError)
    def engine_error(_request: Request, exc: SummaryLensError) -> JSONResponse:
        if isinstance(exc, BadRequest):
            return JSONResponse(status_code=400, content={"error": str(exc)})
        return JSONResponse(status_code=_status_for(exc), content={"error": str(exc)})

    def parse_summary_params(k: str | None, method: str | None) -> SummaryConfig:
        try:
            k_value = config.summary.k if k is None else int(k)
        except ValueError:
            raise BadRequest(f"k must be an integer, got {k!r}") from None
        if k_value < 1:
            raise BadRequest(f"k must be >= 1, got {k_value}")
        try:
            method_value = config.summary.method if method is None else Method(method)
        except ValueError:
            raise BadRequest(f"unknown method {method!r}") from None
        return replace(config.summary, k=k_value, method=method_value)

    def summary_for(document_id: str, summary_config: SummaryConfig) -> Summary:
        document = store.get_document(document_id)
        cached = store.get_summary(document_id, summary_config.method, summary_config.k)
        if cached is not None:
            return cached
        try:
            summary = summarize(document, summary_config, table)
        except ValueError as exc:
            raise BadRequest(str(exc)) from None
        store.save_summary(summary)
        return summary

    @app.post("/api/v1/scan")
    async def scan(request: Request) -> Response:
        image = await request.body()
        if not image:
            raise BadRequest("scan needs a non-empty image body")
        text = ocr_extract(config.ocr, image)
        source = Source.FIXTURE if config.ocr.kind is OcrKind.FIXTURE else Source.OCR
        document = ingest_text(text, source)
        store.save_document(document)
        return JSONResponse({"document_id": document.id, "text": document.text})

    @app.post("/api/v1/documents")
    async def paste(request: Request) -> Response:
        try:
            payload = await request.json()
        except Exception:
            raise BadRequest("body must be JSON") from None
        text = payload.get("text") if isinstance(payload, dict) else None
        if not isinstance(text, str):
            raise BadRequest('body must be {"text": "..."}')
        document = ingest_text(text, Source.TEXT)
        store.save_document(document)
        return JSONResponse({"document_id": document.id, "text": document.text})

    @app.get("/api/v1/documents")
    def list_documents() -> Response:
        entries = [
            {"id": info.id, "created_at": info.created_at.isoformat(), "preview": info.preview}
            for info in store.list_documents()
        ]
        return JSONResponse(entries)

    @app.get("/api/v1/documents/{document_id}")
    def get_document(document_id: str) -> Response:
        document = store.get_document(document_id)
        return JSONResponse(
            {
                "id": document.id,
                "source": document.source.value,
                "text": document.text,
                "created_at": document.created_at.isoformat(),
            }
        )

    @app.get("/api/v1/documents/{document_id}/summary")
    def get_summary(document_id: str, k: str | None = None, method: str | None = None) -> Response:
        summary_config = parse_summary_params(k, method)
        summary = summary_for(document_id, summary_config)
        return _json_bytes(summary_to_json(summary))

    @app.get("/api/v1/documents/{document_id}/highlights")
    def get_highlights(document_id: str, k: str | None = None, method: str | None = None) -> Response:
        summary_config = parse_summary_params(k, method)
        summary = summary_for(document_id, summary_config)
        document = store.get_document(document_id)
        return _json_bytes(highlighted_to_json(highlights(document, summary)))

    if config.static_dir is not None:
        app.mount("/", StaticFiles(directory=config.static_dir, html=True), name="ui")
    else:

        @app.get("/")
        def root() -> Response:
            return JSONResponse({"service": "summarylens", "api": "/api/v1"})

    return app


def run_service(config: ServiceConfig) -> None:
    import uvicorn

    uvicorn.run(create_app(config), host=config.host, port=config.port, log_level="info")
