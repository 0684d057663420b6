"""Word-embedding table in GloVe text format and sentence vectors.

A table maps tokens to dense vectors of one shared dimensionality. Sentences
are represented by the unweighted mean of their in-vocabulary token vectors;
a sentence with no known token gets the zero vector and simply stays
unconnected in the similarity graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np

from .errors import DimensionMismatch, EmptySource, MalformedLine


@dataclass(frozen=True)
class EmbeddingTable:
    dim: int
    vectors: dict[str, np.ndarray]

    def __contains__(self, token: str) -> bool:
        return token in self.vectors

    def __len__(self) -> int:
        return len(self.vectors)


def load_embedding_table(source: Iterable[str], max_tokens: int | None = None) -> EmbeddingTable:
    """Parse GloVe text lines: ``<token> <f1> ... <fD>``, dim fixed by the first line.

    Duplicate tokens keep their first occurrence. ``max_tokens`` caps the
    vocabulary; remaining lines are ignored unread.
    """
    vectors: dict[str, np.ndarray] = {}
    dim = 0
    for line_no, line in enumerate(source, start=1):
        if max_tokens is not None and len(vectors) >= max_tokens:
            break
        parts = line.split()
        if len(parts) < 2:
            raise MalformedLine(line_no, "expected a token followed by float components")
        token = parts[0]
        try:
            values = [float(p) for p in parts[1:]]
        except ValueError:
            raise MalformedLine(line_no, "component is not a decimal float") from None
        if not all(math.isfinite(v) for v in values):
            raise MalformedLine(line_no, "component is not finite")
        if dim == 0:
            dim = len(values)
        elif len(values) != dim:
            raise MalformedLine(line_no, f"expected {dim} components, found {len(values)}")
        if token not in vectors:
            vectors[token] = np.array(values, dtype=np.float64)
    if dim == 0:
        raise EmptySource("embedding source yielded no lines")
    return EmbeddingTable(dim=dim, vectors=vectors)


def load_embedding_file(path: str | Path, max_tokens: int | None = None) -> EmbeddingTable:
    with open(path, "r", encoding="utf-8") as handle:
        return load_embedding_table(handle, max_tokens=max_tokens)


def sentence_vector(table: EmbeddingTable, tokens: list[str]) -> np.ndarray:
    """Mean of the vectors of the tokens found in the table; zeros if none are."""
    found = [table.vectors[t] for t in tokens if t in table.vectors]
    if not found:
        return np.zeros(table.dim, dtype=np.float64)
    return np.mean(found, axis=0)


def cosine_similarity(a: np.ndarray, b: np.ndarray) -> float:
    """dot(a,b) / (|a||b|), defined as 0.0 when either vector is zero."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise DimensionMismatch(f"vector lengths differ: {a.shape} vs {b.shape}")
    norm_a = float(np.linalg.norm(a))
    norm_b = float(np.linalg.norm(b))
    if norm_a == 0.0 or norm_b == 0.0:
        return 0.0
    return float(np.dot(a, b) / (norm_a * norm_b))
