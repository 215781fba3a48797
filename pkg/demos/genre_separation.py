"""Genre separation: style vectors keep enough signal to tell text types apart.

Builds two synthetic English corpora with deliberately different
grammatical profiles — passive-heavy reportage vs informal dialogue —
then shows that a bare nearest-centroid rule separates them, and which
metrics carry the separation.

Run:  python3 demos/genre_separation.py
"""

import random

import numpy as np

from stylovec import evaluate_all, registry_for
from stylovec.analysis import nearest_centroid_loo, to_matrix
from stylovec.synth import genre_corpus


def main() -> None:
    rng = random.Random(42)
    formal = genre_corpus(rng, "formal", 50)
    chat = genre_corpus(rng, "chat", 50)
    print(f"generated {len(formal)} formal + {len(chat)} chat documents")

    registry = registry_for("en")
    vectors = [evaluate_all(registry, doc) for doc in formal + chat]
    matrix = to_matrix(vectors)
    labels = ["formal"] * len(formal) + ["chat"] * len(chat)
    print(f"vector matrix: {matrix.shape[0]} documents x {matrix.shape[1]} metrics")

    accuracy = nearest_centroid_loo(matrix, labels)
    print(f"nearest-centroid leave-one-out accuracy: {accuracy:.2%}\n")

    # The interesting part: which interpretable metrics drive the split.
    formal_mean = matrix[: len(formal)].mean(axis=0)
    chat_mean = matrix[len(formal):].mean(axis=0)
    gaps = formal_mean - chat_mean
    order = np.argsort(-np.abs(gaps))
    ids = vectors[0].metric_ids
    print(f"{'metric':<22} {'formal':>8} {'chat':>8}   leans")
    for idx in order[:10]:
        leaning = "formal" if gaps[idx] > 0 else "chat"
        print(f"{ids[idx]:<22} {formal_mean[idx]:>8.3f} {chat_mean[idx]:>8.3f}   {leaning}")


if __name__ == "__main__":
    main()
