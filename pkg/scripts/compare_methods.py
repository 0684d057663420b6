#!/usr/bin/env python3
"""Compare textrank and frequency selections over random documents.

Reports, per k, how often the two methods agree and the mean Jaccard
overlap of their selected sentence sets. Both methods are deterministic,
so the only randomness is the generated corpus (seeded, reproducible).

    python3 scripts/compare_methods.py [--docs N] [--seed S]
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(REPO / "tests"))

from conftest import make_document, make_random_text  # noqa: E402

from summarylens.embeddings import load_embedding_file  # noqa: E402
from summarylens.summarizer import Method, SummaryConfig, summarize  # noqa: E402

DATA = REPO / "src" / "summarylens" / "data"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--docs", type=int, default=100)
    parser.add_argument("--seed", type=int, default=2026)
    args = parser.parse_args()

    table = load_embedding_file(DATA / "mini_glove.txt")
    rng = random.Random(args.seed)
    documents = [make_document(make_random_text(rng), doc_id=f"doc-{i:04d}")
                 for i in range(args.docs)]

    print(f"{args.docs} random documents, seed {args.seed}")
    print(f"{'k':>3} {'identical':>10} {'mean jaccard':>13}")
    for k in (1, 3, 5):
        identical = 0
        jaccard_total = 0.0
        for document in documents:
            by_rank = set(summarize(document, SummaryConfig(k=k), table).selected)
            by_freq = set(
                summarize(document, SummaryConfig(method=Method.FREQUENCY, k=k)).selected
            )
            identical += by_rank == by_freq
            jaccard_total += len(by_rank & by_freq) / len(by_rank | by_freq)
        print(f"{k:>3} {identical / args.docs:>9.0%} {jaccard_total / args.docs:>13.3f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
