"""Text normalization, sentence splitting and tokenization.

Everything here is rule-based and deterministic: OCR line-break repair,
whitespace collapsing, terminator-driven sentence boundaries guarded by a
bundled abbreviation list, and lowercase alphanumeric tokenization with
stopword removal. All offsets are counted in Unicode scalar values of the
normalized text, so a span survives the trip to any client.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import groupby
from pathlib import Path

_DATA_DIR = Path(__file__).resolve().parent / "data"

_TERMINATORS = frozenset(".!?")

# Hyphen glued to a line break: drop both and join the word halves,
# swallowing any indentation on the continuation line.
_BROKEN_WORD = re.compile(r"-(?:\r\n|\r|\n)[ \t]*")
_WHITESPACE_RUN = re.compile(r"\s+")

@dataclass(frozen=True)
class Sentence:
    """One sentence with its half-open character span in the normalized text."""

    index: int
    text: str
    span: tuple[int, int]


def _load_word_list(filename: str) -> frozenset[str]:
    path = _DATA_DIR / filename
    entries = []
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            entries.append(line)
    return frozenset(entries)


@lru_cache(maxsize=None)
def abbreviations() -> frozenset[str]:
    """Tokens (without the final period) that never end a sentence."""
    return _load_word_list("abbreviations.txt")


@lru_cache(maxsize=None)
def stopwords() -> frozenset[str]:
    """The bundled English stopword list."""
    return _load_word_list("stopwords.txt")


def normalize_text(raw: str) -> str:
    """Repair OCR line breaks and collapse whitespace.

    A hyphen immediately before a line break is removed and the word halves
    joined; every remaining whitespace run becomes a single space; the result
    is trimmed. Idempotent.
    """
    joined = _BROKEN_WORD.sub("", raw)
    return _WHITESPACE_RUN.sub(" ", joined).strip()


def _preceding_token(text: str, dot_index: int) -> str:
    """The word immediately before ``text[dot_index]``, dots allowed inside ("e.g")."""
    start = dot_index
    while start > 0 and (text[start - 1].isalnum() or text[start - 1] == "."):
        start -= 1
    return text[start:dot_index].lstrip(".")


def _is_boundary(text: str, i: int, abbrevs: frozenset[str]) -> bool:
    """True if the terminator at ``i`` ends a sentence.

    A terminator ends a sentence when followed by end-of-text, or by
    whitespace and then an uppercase letter or digit. A '.' whose preceding
    token is a known abbreviation never ends a sentence.
    """
    if text[i] == "." and _preceding_token(text, i) in abbrevs:
        return False
    j = i + 1
    if j == len(text):
        return True
    if not text[j].isspace():
        return False
    while j < len(text) and text[j].isspace():
        j += 1
    if j == len(text):
        return True
    return text[j].isupper() or text[j].isdigit()


def split_sentences(text: str) -> list[Sentence]:
    """Split normalized text into sentences with exact character spans.

    A trailing fragment with no terminator becomes a final sentence. Spans
    are non-overlapping, strictly increasing and never cover a sentence that
    is empty after trimming.
    """
    abbrevs = abbreviations()
    sentences: list[Sentence] = []
    n = len(text)

    def emit(start: int, end: int) -> None:
        while start < end and text[start].isspace():
            start += 1
        while end > start and text[end - 1].isspace():
            end -= 1
        if end > start:
            sentences.append(Sentence(index=len(sentences), text=text[start:end], span=(start, end)))

    start = 0
    for i, ch in enumerate(text):
        if ch in _TERMINATORS and _is_boundary(text, i, abbrevs):
            emit(start, i + 1)
            start = i + 1
    if start < n:
        emit(start, n)
    return sentences


def tokenize(sentence_text: str) -> list[str]:
    """Lowercase and split on every maximal run of non-alphanumeric characters."""
    return ["".join(run) for alnum, run in groupby(sentence_text.lower(), key=str.isalnum) if alnum]


def remove_stopwords(tokens: list[str]) -> list[str]:
    """Drop bundled stopwords, preserving the order of the survivors."""
    stop = stopwords()
    return [t for t in tokens if t not in stop]
