#!/usr/bin/env python3
"""Walk the full pipeline on the bundled fixture document and print each stage.

Useful as a smoke test and as a readable tour of the engine:
segmentation, token filtering, the similarity graph, ranking, selection,
and the final highlight rendering.

    python3 scripts/demo_pipeline.py
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

REPO = Path(__file__).resolve().parents[1]
DATA = REPO / "src" / "summarylens" / "data"

from summarylens.cli import document_for_text  # noqa: E402
from summarylens.embeddings import load_embedding_file, sentence_vector  # noqa: E402
from summarylens.ranker import build_similarity_graph, textrank  # noqa: E402
from summarylens.segmenter import remove_stopwords, split_sentences, tokenize  # noqa: E402
from summarylens.summarizer import SummaryConfig, highlights, summarize  # noqa: E402


def main() -> int:
    text = (DATA / "fixture_document.txt").read_text(encoding="utf-8")
    table = load_embedding_file(DATA / "mini_glove.txt")
    document = document_for_text(text)

    sentences = split_sentences(document.text)
    print(f"== segmentation: {len(sentences)} sentences ==")
    for sentence in sentences:
        tokens = remove_stopwords(tokenize(sentence.text))
        in_vocab = sum(1 for t in tokens if t in table)
        print(f"  [{sentence.index}] {sentence.text}")
        print(f"      content tokens: {tokens} ({in_vocab} in vocabulary)")

    vectors = [
        sentence_vector(table, remove_stopwords(tokenize(s.text))) for s in sentences
    ]
    graph = build_similarity_graph(vectors)
    print("\n== similarity graph (cosine weights) ==")
    with np.printoptions(precision=3, suppress=True):
        print(graph)

    result = textrank(graph)
    print(f"\n== textrank: converged={result.converged} "
          f"after {result.iterations} iterations, residual {result.residual:.2e} ==")
    for index in sorted(range(len(result.scores)), key=lambda i: -result.scores[i]):
        print(f"  score {result.scores[index]:.6f}  sentence {index}")

    summary = summarize(document, SummaryConfig(), table)
    print(f"\n== summary (k={summary.config.k}, {summary.config.method.value}) ==")
    for index, sentence in zip(summary.selected, summary.sentences):
        print(f"  [{index}] {sentence}")

    marked = highlights(document, summary)
    print("\n== highlighted document ==")
    rendered = []
    cursor = 0
    for start, end in marked.highlight_spans:
        rendered.append(marked.text[cursor:start])
        rendered.append(f">>{marked.text[start:end]}<<")
        cursor = end
    rendered.append(marked.text[cursor:])
    print("".join(rendered))
    return 0


if __name__ == "__main__":
    sys.exit(main())
