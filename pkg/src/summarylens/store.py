"""File-backed persistence for documents and their summaries.

Layout under the data directory:

    documents/<id>.json
    summaries/<document_id>.<method>.<k>.json
    index.json            (listing cache, rebuilt on startup by scan)

One JSON file per object, canonical field names, UTF-8. Writes are
serialized by an internal lock; a store handle may be shared across threads.
"""

from __future__ import annotations

import json
import secrets
import threading
from dataclasses import dataclass
from datetime import datetime
from pathlib import Path

from .documents import RawDocument, document_from_json, document_to_json
from .errors import DuplicateId, NotFound, StorageFailure
from .summarizer import Method, Summary, summary_from_json, summary_to_json

PREVIEW_CHARS = 80


def new_document_id() -> str:
    """128-bit random hex: collision-free without coordination."""
    return secrets.token_hex(16)


@dataclass(frozen=True)
class DocumentInfo:
    id: str
    created_at: datetime
    preview: str


class DocumentStore:
    def __init__(self, data_dir: str | Path):
        self.data_dir = Path(data_dir)
        self._documents_dir = self.data_dir / "documents"
        self._summaries_dir = self.data_dir / "summaries"
        self._index_path = self.data_dir / "index.json"
        self._lock = threading.Lock()
        try:
            self._documents_dir.mkdir(parents=True, exist_ok=True)
            self._summaries_dir.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise StorageFailure(f"cannot create data directory: {exc}") from exc
        self._index = self._rebuild_index()

    # -- documents ---------------------------------------------------------

    def save_document(self, doc: RawDocument) -> str:
        path = self._documents_dir / f"{doc.id}.json"
        with self._lock:
            if path.exists():
                raise DuplicateId(f"document {doc.id} already exists")
            self._write(path, document_to_json(doc))
            self._index[doc.id] = _info_for(doc)
            self._write_index()
        return doc.id

    def get_document(self, doc_id: str) -> RawDocument:
        path = self._documents_dir / f"{doc_id}.json"
        if not path.exists():
            raise NotFound(f"no document with id {doc_id}")
        return document_from_json(self._read(path))

    def list_documents(self) -> list[DocumentInfo]:
        """Newest first; ties broken by id, lexicographically."""
        return sorted(self._index.values(), key=lambda info: (_reverse_ts(info), info.id))

    # -- summaries ---------------------------------------------------------

    def save_summary(self, summary: Summary) -> None:
        path = self._summary_path(summary.document_id, summary.config.method, summary.config.k)
        with self._lock:
            self._write(path, summary_to_json(summary))

    def get_summary(self, document_id: str, method: Method, k: int) -> Summary | None:
        path = self._summary_path(document_id, method, k)
        if not path.exists():
            return None
        return summary_from_json(self._read(path))

    # -- internals ---------------------------------------------------------

    def _summary_path(self, document_id: str, method: Method, k: int) -> Path:
        return self._summaries_dir / f"{document_id}.{method.value}.{k}.json"

    def _rebuild_index(self) -> dict[str, DocumentInfo]:
        index: dict[str, DocumentInfo] = {}
        for path in self._documents_dir.glob("*.json"):
            doc = document_from_json(self._read(path))
            index[doc.id] = _info_for(doc)
        with self._lock:
            self._index = index
            self._write_index()
        return index

    def _write_index(self) -> None:
        entries = [
            {"id": info.id, "created_at": info.created_at.isoformat(), "preview": info.preview}
            for info in self._index.values()
        ]
        self._write(self._index_path, json.dumps(entries, ensure_ascii=False, separators=(",", ":")))

    def _write(self, path: Path, content: str) -> None:
        try:
            path.write_text(content, encoding="utf-8")
        except OSError as exc:
            raise StorageFailure(f"cannot write {path.name}: {exc}") from exc

    def _read(self, path: Path) -> str:
        try:
            return path.read_text(encoding="utf-8")
        except OSError as exc:
            raise StorageFailure(f"cannot read {path.name}: {exc}") from exc


def _info_for(doc: RawDocument) -> DocumentInfo:
    return DocumentInfo(id=doc.id, created_at=doc.created_at, preview=doc.text[:PREVIEW_CHARS])


def _reverse_ts(info: DocumentInfo):
    # Sort key helper: newest first without relying on datetime negation.
    return -info.created_at.timestamp()
