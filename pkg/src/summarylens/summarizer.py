"""Pipeline orchestration: segment, embed, rank, select, and highlight.

The summary is strictly extractive: selected sentences are verbatim slices
of the normalized document text, returned in order of appearance. Scores for
every sentence (not only the selected ones) travel with the summary so a
client can show why sentences were chosen.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

from .documents import RawDocument
from .embeddings import EmbeddingTable, sentence_vector
from .errors import DocumentMismatch, EmptyDocument, UnsupportedMethod
from .ranker import RankConfig, build_similarity_graph, frequency_scores, select_top_k, textrank
from .segmenter import normalize_text, remove_stopwords, split_sentences, tokenize


class Method(str, enum.Enum):
    TEXTRANK = "textrank"
    FREQUENCY = "frequency"
    # Reserved slot for a model-backed rewriting method; not shipped.
    ABSTRACTIVE = "abstractive"


@dataclass(frozen=True)
class SummaryConfig:
    method: Method = Method.TEXTRANK
    k: int = 5
    rank: RankConfig = field(default_factory=RankConfig)

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k}")


@dataclass(frozen=True)
class Summary:
    document_id: str
    config: SummaryConfig
    selected: tuple[int, ...]
    sentences: tuple[str, ...]
    scores: tuple[float, ...]
    converged: bool


@dataclass(frozen=True)
class HighlightedDocument:
    text: str
    highlight_spans: tuple[tuple[int, int], ...]


def summarize(
    document: RawDocument,
    config: SummaryConfig = SummaryConfig(),
    table: EmbeddingTable | None = None,
) -> Summary:
    """Run the full pipeline on one document.

    ``table`` is required for the textrank method and ignored for frequency.
    Raises EmptyDocument when segmentation yields no sentences and
    UnsupportedMethod for the reserved abstractive slot.
    """
    text = normalize_text(document.text)
    sentences = split_sentences(text)
    if not sentences:
        raise EmptyDocument(f"empty document: {document.id} has no sentences")
    token_lists = [remove_stopwords(tokenize(s.text)) for s in sentences]

    if config.method is Method.TEXTRANK:
        if table is None:
            raise ValueError("the textrank method requires an embedding table")
        vectors = [sentence_vector(table, tokens) for tokens in token_lists]
        graph = build_similarity_graph(vectors)
        result = textrank(graph, config.rank)
        scores, converged = result.scores, result.converged
    elif config.method is Method.FREQUENCY:
        scores = frequency_scores(token_lists)
        converged = True
    else:
        raise UnsupportedMethod(f"method {config.method.value!r} is not available in this build")

    selected = select_top_k(scores, config.k)
    return Summary(
        document_id=document.id,
        config=config,
        selected=tuple(selected),
        sentences=tuple(sentences[i].text for i in selected),
        scores=tuple(float(s) for s in scores),
        converged=converged,
    )


def highlights(document: RawDocument, summary: Summary) -> HighlightedDocument:
    """Character spans of the selected sentences inside the normalized text."""
    if summary.document_id != document.id:
        raise DocumentMismatch(
            f"summary belongs to {summary.document_id}, not {document.id}"
        )
    text = normalize_text(document.text)
    sentences = split_sentences(text)
    spans = tuple(sentences[i].span for i in summary.selected)
    return HighlightedDocument(text=text, highlight_spans=spans)


def summary_to_json(summary: Summary) -> str:
    """Canonical serialization; identical inputs give byte-identical output."""
    payload = {
        "document_id": summary.document_id,
        "method": summary.config.method.value,
        "k": summary.config.k,
        "selected": list(summary.selected),
        "sentences": list(summary.sentences),
        "scores": list(summary.scores),
        "converged": summary.converged,
    }
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":"))


def summary_from_json(text: str) -> Summary:
    """Inverse of summary_to_json; rank hyperparameters are not part of the
    canonical form, so the parsed config carries the defaults."""
    data = json.loads(text)
    return Summary(
        document_id=data["document_id"],
        config=SummaryConfig(method=Method(data["method"]), k=data["k"]),
        selected=tuple(data["selected"]),
        sentences=tuple(data["sentences"]),
        scores=tuple(float(s) for s in data["scores"]),
        converged=data["converged"],
    )


def highlighted_to_json(doc: HighlightedDocument) -> str:
    payload = {
        "text": doc.text,
        "highlight_spans": [list(span) for span in doc.highlight_spans],
    }
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":"))


def highlighted_from_json(text: str) -> HighlightedDocument:
    data = json.loads(text)
    return HighlightedDocument(
        text=data["text"],
        highlight_spans=tuple((span[0], span[1]) for span in data["highlight_spans"]),
    )
