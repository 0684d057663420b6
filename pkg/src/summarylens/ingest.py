"""Turning captures and pasted text into stored documents.

The OCR provider is pluggable: the fixture provider echoes pre-stored text
regardless of the image (deterministic, used for tests and demos), while the
external provider posts raw image bytes to any HTTP OCR service speaking the
minimal contract below.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from datetime import datetime, timezone

import requests

from .documents import RawDocument, Source
from .errors import (
    EmptyAfterNormalization,
    MissingFixtureText,
    ProviderBadResponse,
    ProviderTimeout,
    ProviderUnreachable,
)
from .segmenter import normalize_text
from .store import new_document_id

DEFAULT_TIMEOUT_SECONDS = 15.0


class OcrKind(str, enum.Enum):
    FIXTURE = "fixture"
    EXTERNAL = "external"


@dataclass(frozen=True)
class OcrProviderConfig:
    kind: OcrKind
    fixture_text: str | None = None
    endpoint_url: str | None = None
    timeout: float = DEFAULT_TIMEOUT_SECONDS


def ocr_extract(provider: OcrProviderConfig, image: bytes) -> str:
    """Extract text from image bytes via the configured provider.

    Wire contract for external providers: POST the raw bytes with
    Content-Type application/octet-stream; expect 200 with ``{"text": ...}``.
    """
    if provider.kind is OcrKind.FIXTURE:
        if provider.fixture_text is None:
            raise MissingFixtureText("fixture provider configured without fixture_text")
        return provider.fixture_text

    if not provider.endpoint_url:
        raise ValueError("external provider requires endpoint_url")
    if not image:
        raise ValueError("external OCR needs a non-empty image")
    try:
        response = requests.post(
            provider.endpoint_url,
            data=image,
            headers={"Content-Type": "application/octet-stream"},
            timeout=provider.timeout,
        )
    except requests.Timeout as exc:
        raise ProviderTimeout(f"OCR endpoint timed out after {provider.timeout}s") from exc
    except requests.ConnectionError as exc:
        raise ProviderUnreachable(f"cannot reach OCR endpoint: {exc}") from exc
    if response.status_code != 200:
        raise ProviderBadResponse(response.status_code)
    try:
        text = response.json()["text"]
    except (ValueError, KeyError) as exc:
        raise ProviderBadResponse(response.status_code, "body is not {\"text\": ...}") from exc
    if not isinstance(text, str):
        raise ProviderBadResponse(response.status_code, "text field is not a string")
    return text


def ingest_text(text: str, source: Source) -> RawDocument:
    """Normalize and wrap raw text as a fresh document."""
    normalized = normalize_text(text)
    if not normalized:
        raise EmptyAfterNormalization("document is empty after normalization")
    return RawDocument(
        id=new_document_id(),
        source=source,
        text=normalized,
        created_at=datetime.now(timezone.utc),
    )
