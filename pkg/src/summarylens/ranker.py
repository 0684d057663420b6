"""Sentence relevance scoring: similarity graph, TextRank, frequency scorer.

TextRank is weighted PageRank on the sentence-similarity graph: the damped
random walk s' = (1-d)/n + d * P^T s is iterated from the uniform vector
until the L1 change drops below the tolerance. Rows with zero total weight
(dangling sentences) walk uniformly so every sentence keeps its index.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import EmptyGraph, EmptySentenceList


@dataclass(frozen=True)
class RankConfig:
    damping: float = 0.85
    tolerance: float = 1e-6
    max_iterations: int = 100

    def __post_init__(self):
        if not 0.0 < self.damping < 1.0:
            raise ValueError(f"damping must be strictly inside (0, 1), got {self.damping}")
        if self.tolerance <= 0.0:
            raise ValueError("tolerance must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be a positive integer")


@dataclass(frozen=True)
class TextRankResult:
    """Scores plus the convergence signal; scores are returned even when
    the iteration stopped at max_iterations with residual >= tolerance."""

    scores: np.ndarray
    iterations: int
    residual: float
    converged: bool


def build_similarity_graph(vectors: list[np.ndarray]) -> np.ndarray:
    """Symmetric n x n matrix of max(0, cosine) weights with a zero diagonal."""
    n = len(vectors)
    if n == 0:
        return np.zeros((0, 0), dtype=np.float64)
    stacked = np.asarray(vectors, dtype=np.float64)
    norms = np.linalg.norm(stacked, axis=1)
    safe = np.where(norms > 0.0, norms, 1.0)
    unit = stacked / safe[:, np.newaxis]
    weights = np.clip(unit @ unit.T, 0.0, None)
    # Mirror the upper triangle so symmetry is exact, not just up to rounding.
    upper = np.triu(weights, k=1)
    return upper + upper.T


def textrank(graph: np.ndarray, config: RankConfig = RankConfig()) -> TextRankResult:
    """Power iteration for the damped walk on a nonnegative symmetric graph.

    Raises EmptyGraph for n == 0. The result is renormalized to sum exactly
    to 1; ``converged`` is False when max_iterations ran out first.
    """
    graph = np.asarray(graph, dtype=np.float64)
    n = graph.shape[0]
    if n == 0:
        raise EmptyGraph("cannot rank an empty graph")

    row_sums = graph.sum(axis=1)
    transition = np.empty_like(graph)
    dangling = row_sums == 0.0
    transition[dangling] = 1.0 / n
    if (~dangling).any():
        transition[~dangling] = graph[~dangling] / row_sums[~dangling, np.newaxis]

    d = config.damping
    teleport = (1.0 - d) / n
    scores = np.full(n, 1.0 / n, dtype=np.float64)
    residual = np.inf
    iterations = 0
    converged = False
    for iterations in range(1, config.max_iterations + 1):
        updated = teleport + d * (transition.T @ scores)
        residual = float(np.abs(updated - scores).sum())
        scores = updated
        if residual < config.tolerance:
            converged = True
            break

    scores = scores / scores.sum()
    return TextRankResult(scores=scores, iterations=iterations, residual=residual, converged=converged)


def frequency_scores(sentence_tokens: list[list[str]]) -> np.ndarray:
    """Length-normalized relative term frequency per sentence, summing to 1.

    Token counts are taken over the sentences as given (stopwords are removed
    upstream). When every sentence is empty the scores are uniform.
    """
    if not sentence_tokens:
        raise EmptySentenceList("frequency scoring needs at least one sentence")
    n = len(sentence_tokens)
    counts = Counter(token for tokens in sentence_tokens for token in tokens)
    if not counts:
        return np.full(n, 1.0 / n, dtype=np.float64)
    max_count = max(counts.values())
    raw = np.array(
        [
            sum(counts[token] / max_count for token in tokens) / max(1, len(tokens))
            for tokens in sentence_tokens
        ],
        dtype=np.float64,
    )
    total = raw.sum()
    if total == 0.0:
        return np.full(n, 1.0 / n, dtype=np.float64)
    return raw / total


def select_top_k(scores: np.ndarray, k: int) -> list[int]:
    """Indices of the min(k, n) highest scores, ties to the lower index,
    returned ascending (appearance order)."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    order = sorted(range(len(scores)), key=lambda i: (-scores[i], i))
    return sorted(order[: min(k, len(scores))])
