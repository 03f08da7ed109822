"""Latent Dirichlet Allocation via collapsed Gibbs sampling."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class LdaModel:
    n_topics: int
    alpha: float
    beta: float
    vocabulary: dict[str, int]
    topic_word: np.ndarray  # (K, V) counts
    doc_topic: np.ndarray  # (D, K) counts
    topic_totals: np.ndarray  # (K,) tokens assigned per topic
    doc_lengths: np.ndarray  # (D,)
    iterations: int
    seed: int


def _check_counts(doc_topic: np.ndarray, topic_word: np.ndarray,
                  topic_totals: np.ndarray, doc_lengths: np.ndarray) -> None:
    assert np.array_equal(doc_topic.sum(axis=1), doc_lengths), "doc counts drifted"
    assert np.array_equal(topic_word.sum(axis=1), topic_totals), "topic counts drifted"


def lda_fit(
    docs: list[list[str]],
    n_topics: int,
    alpha: float | None = None,
    beta: float = 0.01,
    iterations: int = 500,
    seed: int = 0,
) -> LdaModel:
    """Collapsed Gibbs sampling, one full sweep per iteration in fixed order.

    ``alpha`` defaults to 50/K.  Count-table consistency is asserted after
    every sweep.
    """
    if not docs:
        raise ValueError("empty corpus")
    if n_topics < 1:
        raise ValueError("n_topics must be >= 1")
    if alpha is None:
        alpha = 50.0 / n_topics

    vocabulary: dict[str, int] = {}
    for doc in docs:
        for token in doc:
            if token not in vocabulary:
                vocabulary[token] = len(vocabulary)
    if not vocabulary:
        raise ValueError("empty vocabulary")
    V = len(vocabulary)
    K = n_topics

    doc_words = [np.array([vocabulary[t] for t in doc], dtype=np.int64) for doc in docs]
    rng = np.random.default_rng(seed)

    topic_word = np.zeros((K, V), dtype=np.int64)
    doc_topic = np.zeros((len(docs), K), dtype=np.int64)
    topic_totals = np.zeros(K, dtype=np.int64)
    doc_lengths = np.array([len(w) for w in doc_words], dtype=np.int64)

    assignments = [rng.integers(K, size=len(words)) for words in doc_words]
    for d, (words, z) in enumerate(zip(doc_words, assignments)):
        for w, topic in zip(words, z):
            topic_word[topic, w] += 1
            doc_topic[d, topic] += 1
            topic_totals[topic] += 1

    v_beta = V * beta
    for _ in range(iterations):
        for d, words in enumerate(doc_words):
            z = assignments[d]
            for i, w in enumerate(words):
                old = z[i]
                topic_word[old, w] -= 1
                doc_topic[d, old] -= 1
                topic_totals[old] -= 1

                weights = (doc_topic[d] + alpha) * (topic_word[:, w] + beta) / (topic_totals + v_beta)
                cumulative = np.cumsum(weights)
                new = int(np.searchsorted(cumulative, rng.random() * cumulative[-1]))

                z[i] = new
                topic_word[new, w] += 1
                doc_topic[d, new] += 1
                topic_totals[new] += 1
        _check_counts(doc_topic, topic_word, topic_totals, doc_lengths)

    return LdaModel(
        n_topics=K,
        alpha=alpha,
        beta=beta,
        vocabulary=vocabulary,
        topic_word=topic_word,
        doc_topic=doc_topic,
        topic_totals=topic_totals,
        doc_lengths=doc_lengths,
        iterations=iterations,
        seed=seed,
    )


def lda_doc_topics(model: LdaModel, doc_index: int) -> np.ndarray:
    """Smoothed topic distribution of a training document; sums to 1.

    An empty document comes out uniform.
    """
    counts = model.doc_topic[doc_index]
    n_d = model.doc_lengths[doc_index]
    return (counts + model.alpha) / (n_d + model.n_topics * model.alpha)
