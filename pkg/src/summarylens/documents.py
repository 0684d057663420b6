"""The ingested document type and its canonical JSON form."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from datetime import datetime


class Source(str, enum.Enum):
    OCR = "ocr"
    TEXT = "text"
    FIXTURE = "fixture"


@dataclass(frozen=True)
class RawDocument:
    """A stored document: normalized text plus provenance and identity."""

    id: str
    source: Source
    text: str
    created_at: datetime


def document_to_json(doc: RawDocument) -> str:
    payload = {
        "id": doc.id,
        "source": doc.source.value,
        "text": doc.text,
        "created_at": doc.created_at.isoformat(),
    }
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":"))


def document_from_json(text: str) -> RawDocument:
    data = json.loads(text)
    return RawDocument(
        id=data["id"],
        source=Source(data["source"]),
        text=data["text"],
        created_at=datetime.fromisoformat(data["created_at"]),
    )
