"""Content-based comparison representations: n-gram and embedding vectors."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from .corpus import WordVectorTable
from .textproc.tokenizer import TokenizedTweet, TokenKind

MAX_NGRAM = 5


@dataclass(frozen=True)
class SparseVector:
    """Strictly-increasing (index, value) pairs under a fixed dimension."""

    indices: tuple[int, ...]
    values: tuple[float, ...]
    dimension: int

    def validate(self) -> None:
        if len(self.indices) != len(self.values):
            raise ValueError("indices and values differ in length")
        prev = -1
        for idx, val in zip(self.indices, self.values):
            if idx <= prev:
                raise ValueError("indices must be strictly increasing")
            if not 0 <= idx < self.dimension:
                raise ValueError(f"index {idx} outside dimension {self.dimension}")
            if val == 0.0:
                raise ValueError("stored values must be non-zero")
            prev = idx


def _tweet_ngrams(tweet: TokenizedTweet, max_n: int = MAX_NGRAM) -> list[str]:
    texts = [t.text.lower() for t in tweet.tokens]
    grams = []
    for n in range(1, max_n + 1):
        for i in range(len(texts) - n + 1):
            grams.append("_".join(texts[i : i + n]))
    return grams


@dataclass(frozen=True)
class NGramVocabulary:
    """N-grams (n=1..5) that occurred more than once in the fitting corpus."""

    index: dict[str, int]
    min_count: int

    def __len__(self) -> int:
        return len(self.index)


def fit_ngram_vocab(corpus: list[TokenizedTweet], min_count: int = 2) -> NGramVocabulary:
    """Count n-grams over the corpus and keep those seen at least min_count times."""
    counts: Counter[str] = Counter()
    for tweet in corpus:
        counts.update(_tweet_ngrams(tweet))
    kept = sorted(g for g, c in counts.items() if c >= min_count)
    return NGramVocabulary(index={g: i for i, g in enumerate(kept)}, min_count=min_count)


def featurize_ngrams(vocab: NGramVocabulary, tweet: TokenizedTweet) -> SparseVector:
    """Binary presence vector; n-grams outside the vocabulary are ignored."""
    hit = {vocab.index[g] for g in _tweet_ngrams(tweet) if g in vocab.index}
    indices = tuple(sorted(hit))
    return SparseVector(indices, (1.0,) * len(indices), len(vocab.index))


def ngram_matrix(vocab: NGramVocabulary, tweets: list[TokenizedTweet]) -> sparse.csr_matrix:
    """Stack featurized tweets into a CSR matrix (rows in corpus order)."""
    indptr = [0]
    indices: list[int] = []
    for tweet in tweets:
        vec = featurize_ngrams(vocab, tweet)
        indices.extend(vec.indices)
        indptr.append(len(indices))
    data = np.ones(len(indices), dtype=np.float64)
    return sparse.csr_matrix(
        (data, np.array(indices, dtype=np.int64), np.array(indptr, dtype=np.int64)),
        shape=(len(tweets), max(1, len(vocab.index))),
    )


def featurize_embedding(table: WordVectorTable, tweet: TokenizedTweet) -> np.ndarray:
    """Mean pretrained vector over in-vocabulary word tokens; zeros if none."""
    vectors = [
        table.get(t.text)
        for t in tweet.tokens
        if t.kind is TokenKind.WORD and t.text.lower() in table
    ]
    if not vectors:
        return np.zeros(table.dimension, dtype=np.float64)
    return np.mean(np.stack(vectors), axis=0)
