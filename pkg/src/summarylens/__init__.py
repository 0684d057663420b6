"""summarylens: extractive summarization engine, service and CLI."""

from .documents import RawDocument, Source
from .embeddings import EmbeddingTable, cosine_similarity, load_embedding_file, load_embedding_table, sentence_vector
from .ranker import RankConfig, TextRankResult, build_similarity_graph, frequency_scores, select_top_k, textrank
from .segmenter import Sentence, normalize_text, remove_stopwords, split_sentences, tokenize
from .store import DocumentStore, DocumentInfo
from .summarizer import (
    HighlightedDocument,
    Method,
    Summary,
    SummaryConfig,
    highlighted_to_json,
    highlights,
    summarize,
    summary_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "DocumentInfo",
    "DocumentStore",
    "EmbeddingTable",
    "HighlightedDocument",
    "Method",
    "RankConfig",
    "RawDocument",
    "Sentence",
    "Source",
    "Summary",
    "SummaryConfig",
    "TextRankResult",
    "build_similarity_graph",
    "cosine_similarity",
    "frequency_scores",
    "highlighted_to_json",
    "highlights",
    "load_embedding_file",
    "load_embedding_table",
    "normalize_text",
    "remove_stopwords",
    "select_top_k",
    "sentence_vector",
    "split_sentences",
    "summarize",
    "summary_to_json",
    "textrank",
    "tokenize",
]
