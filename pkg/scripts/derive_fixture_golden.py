#!/usr/bin/env python3
"""Derive and freeze the golden summary for the bundled fixture document.

The expected selection is computed twice:

  1. independently: sentence vectors and cosine weights assembled here with
     direct formulas, then PageRank scores from a linear-system solve
     (the test-suite oracle, reused so both derivations agree), and
  2. by the real pipeline with default settings.

The script asserts both derivations select the same sentences, that the
ranking margin around the cut is comfortable, and that power-iteration
scores sit close to the solved fixed point. Only then does it write the
pipeline's canonical JSON to tests/golden/fixture_summary.json.

Run from the repository root:

    python3 scripts/derive_fixture_golden.py
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

REPO = Path(__file__).resolve().parents[1]
# Reuse the test-suite oracle so the frozen file and the property suite
# share one derivation of "correct".
sys.path.insert(0, str(REPO / "tests"))

from oracle import pagerank_by_linear_solve  # noqa: E402

from summarylens.cli import document_for_text  # noqa: E402
from summarylens.embeddings import load_embedding_file  # noqa: E402
from summarylens.segmenter import remove_stopwords, split_sentences, tokenize  # noqa: E402
from summarylens.summarizer import SummaryConfig, summarize, summary_to_json  # noqa: E402

DATA = REPO / "src" / "summarylens" / "data"
GOLDEN = REPO / "tests" / "golden" / "fixture_summary.json"
K = 5
MIN_MARGIN = 1e-4


def independent_scores(sentences, table) -> np.ndarray:
    vectors = []
    for sentence in sentences:
        tokens = remove_stopwords(tokenize(sentence.text))
        found = [table.vectors[t] for t in tokens if t in table.vectors]
        vectors.append(np.mean(found, axis=0) if found else np.zeros(table.dim))
    n = len(vectors)
    weights = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            a, b = vectors[i], vectors[j]
            na, nb = np.linalg.norm(a), np.linalg.norm(b)
            if na > 0 and nb > 0:
                weights[i, j] = weights[j, i] = max(0.0, float(a @ b) / (na * nb))
    return pagerank_by_linear_solve(weights)


def main() -> int:
    text = (DATA / "fixture_document.txt").read_text(encoding="utf-8")
    table = load_embedding_file(DATA / "mini_glove.txt")

    document = document_for_text(text)
    sentences = split_sentences(document.text)
    print(f"fixture document: {len(sentences)} sentences, id {document.id}")

    solved = independent_scores(sentences, table)
    ranked = sorted(range(len(solved)), key=lambda i: (-solved[i], i))
    oracle_selection = sorted(ranked[:K])
    margin = solved[ranked[K - 1]] - solved[ranked[K]]
    print(f"oracle ranking (linear solve): {ranked}")
    print(f"oracle selection (top {K}, ascending): {oracle_selection}")
    print(f"score margin across the cut: {margin:.3e}")
    assert margin > MIN_MARGIN, f"cut margin {margin:.3e} too thin to freeze"

    summary = summarize(document, SummaryConfig(), table)
    assert list(summary.selected) == oracle_selection, (
        f"pipeline selected {list(summary.selected)}, oracle selected {oracle_selection}"
    )
    drift = float(np.max(np.abs(np.asarray(summary.scores) - solved)))
    print(f"power iteration vs linear solve, max |diff|: {drift:.3e}")
    assert drift < 1e-5, f"power iteration drifted {drift:.3e} from the solved fixed point"
    assert summary.converged

    serialized = summary_to_json(summary)
    GOLDEN.parent.mkdir(parents=True, exist_ok=True)
    GOLDEN.write_text(serialized + "\n", encoding="utf-8")
    print(f"wrote {GOLDEN.relative_to(REPO)} ({len(serialized)} bytes)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
