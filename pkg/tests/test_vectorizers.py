from collections import Counter

import numpy as np
import pytest

from tweetcraft.corpus import WordVectorTable
from tweetcraft.textproc import tokenize
from tweetcraft.vectorizers import (
    SparseVector,
    featurize_embedding,
    featurize_ngrams,
    fit_ngram_vocab,
    ngram_matrix,
)


def test_vocab_keeps_repeated_ngrams():
    corpus = [tokenize("a b"), tokenize("a b")]
    vocab = fit_ngram_vocab(corpus)
    assert set(vocab.index) == {"a", "b", "a_b"}


def test_vocab_drops_singletons():
    vocab = fit_ngram_vocab([tokenize("a b"), tokenize("c d")])
    assert len(vocab) == 0


def test_featurize_binary_presence():
    vocab = fit_ngram_vocab([tokenize("a b"), tokenize("a b")])
    vec = featurize_ngrams(vocab, tokenize("a b"))
    assert vec.indices == (0, 1, 2)
    assert vec.values == (1.0, 1.0, 1.0)
    vec.validate()


def test_out_of_vocabulary_ignored():
    vocab = fit_ngram_vocab([tokenize("a b"), tokenize("a b")])
    vec = featurize_ngrams(vocab, tokenize("a z q"))
    assert vec.indices == (vocab.index["a"],)


def test_fit_then_featurize_matches_brute_force_counts():
    # Brute-force oracle: count every n-gram by hand and check the vocabulary
    # and the presence matrix against it.
    rng = np.random.default_rng(3)
    words = ["win", "deal", "sale", "now", "big"]
    corpus = [
        tokenize(" ".join(words[rng.integers(len(words))] for _ in range(rng.integers(1, 9))))
        for _ in range(40)
    ]
    counts = Counter()
    for tweet in corpus:
        texts = [t.text.lower() for t in tweet.tokens]
        for n in range(1, 6):
            for i in range(len(texts) - n + 1):
                counts["_".join(texts[i : i + n])] += 1

    vocab = fit_ngram_vocab(corpus)
    assert set(vocab.index) == {g for g, c in counts.items() if c >= 2}
    for tweet in corpus:
        vec = featurize_ngrams(vocab, tweet)
        vec.validate()
        assert all(i < len(vocab) for i in vec.indices)
    matrix = ngram_matrix(vocab, corpus)
    assert matrix.shape == (len(corpus), len(vocab))
    # every kept n-gram is present in at least two corpus rows
    assert (np.asarray(matrix.sum(axis=0)).ravel() >= 2).all()


def test_sparse_vector_validation():
    with pytest.raises(ValueError):
        SparseVector((2, 1), (1.0, 1.0), 5).validate()
    with pytest.raises(ValueError):
        SparseVector((0,), (0.0,), 5).validate()
    with pytest.raises(ValueError):
        SparseVector((7,), (1.0,), 5).validate()


def table():
    return WordVectorTable(2, {"a": np.array([1.0, 0.0]), "b": np.array([0.0, 1.0])})


def test_embedding_mean():
    vec = featurize_embedding(table(), tokenize("a b"))
    assert vec == pytest.approx([0.5, 0.5])


def test_embedding_no_hits_zero_vector():
    vec = featurize_embedding(table(), tokenize("x y"))
    assert (vec == 0).all()


def test_embedding_repeated_token_idempotent():
    vec = featurize_embedding(table(), tokenize("a a"))
    assert vec == pytest.approx([1.0, 0.0])


def test_embedding_skips_non_word_tokens():
    vec = featurize_embedding(table(), tokenize("a #b @a"))
    assert vec == pytest.approx([1.0, 0.0])
