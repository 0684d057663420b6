"""Shared fixtures: bundled data paths, the mini embedding table, and a
deterministic random-document generator for property suites."""

from __future__ import annotations

import random
from datetime import datetime, timezone
from pathlib import Path

import pytest

from summarylens.documents import RawDocument, Source
from summarylens.embeddings import load_embedding_file
from summarylens.segmenter import normalize_text

DATA_DIR = Path(__file__).resolve().parents[1] / "src" / "summarylens" / "data"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"

_WORDS = [
    "bees", "bee", "honey", "hive", "beekeepers", "forage", "meadows", "flower",
    "nectar", "harvest", "dance", "scout", "distance", "direction", "colony",
    "workers", "swarm", "swarms", "quorum", "nest", "site", "sites", "winter",
    "behavior", "research", "the", "a", "of", "and", "very", "quiet", "garden",
    "stone", "river", "light", "signal", "path", "record", "window", "method",
]

_ABBREVS = ["Dr.", "Mr.", "Prof.", "Fig.", "e.g."]


@pytest.fixture(scope="session")
def mini_table_path() -> Path:
    return DATA_DIR / "mini_glove.txt"


@pytest.fixture(scope="session")
def mini_table(mini_table_path):
    return load_embedding_file(mini_table_path)


@pytest.fixture(scope="session")
def fixture_document_path() -> Path:
    return DATA_DIR / "fixture_document.txt"


@pytest.fixture(scope="session")
def fixture_text(fixture_document_path) -> str:
    return normalize_text(fixture_document_path.read_text(encoding="utf-8"))


def make_random_text(rng: random.Random) -> str:
    """A plausible multi-sentence document, sometimes with OCR-ish artifacts."""
    sentences = []
    for _ in range(rng.randint(3, 15)):
        length = rng.randint(3, 12)
        words = [rng.choice(_WORDS) for _ in range(length)]
        if rng.random() < 0.2:
            words.insert(rng.randrange(len(words)), rng.choice(_ABBREVS))
        if rng.random() < 0.15:
            words.insert(rng.randrange(len(words)), str(rng.randint(0, 9999)))
        sentence = " ".join(words)
        sentence = sentence[0].upper() + sentence[1:]
        sentences.append(sentence + rng.choice("..!?"))
    text = " ".join(sentences)
    if rng.random() < 0.3:
        # raw capture artifact: hard line breaks instead of spaces
        text = text.replace(" ", "\n", rng.randint(1, 3))
    return text


def make_document(text: str, doc_id: str = "doc-under-test") -> RawDocument:
    return RawDocument(
        id=doc_id,
        source=Source.TEXT,
        text=normalize_text(text),
        created_at=datetime(2026, 1, 1, tzinfo=timezone.utc),
    )


@pytest.fixture()
def random_documents():
    """The 50-document deterministic property suite."""
    rng = random.Random(50_50)
    return [make_document(make_random_text(rng), doc_id=f"doc-{i:03d}") for i in range(50)]
