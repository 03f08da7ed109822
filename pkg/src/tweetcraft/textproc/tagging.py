"""Trainable coarse POS tagger and keyword extraction.

The tagger is an averaged perceptron decoded greedily left to right.  Tokens
whose kind already determines the tag (hashtags, mentions, URLs, punctuation)
are forced to that tag and never learned.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .perceptron import AveragedPerceptron, predict_with
from .tokenizer import Token, TokenizedTweet, TokenKind


class PosTag(str, Enum):
    COMMON_NOUN = "common_noun"
    PROPER_NOUN = "proper_noun"
    VERB = "verb"
    ADJECTIVE = "adjective"
    ADVERB = "adverb"
    HASHTAG = "hashtag"
    MENTION = "mention"
    URL = "url"
    PUNCT = "punct"
    OTHER = "other"


# Tags the perceptron actually chooses between; the rest are forced by kind.
LEARNED_TAGS = [
    PosTag.COMMON_NOUN.value,
    PosTag.PROPER_NOUN.value,
    PosTag.VERB.value,
    PosTag.ADJECTIVE.value,
    PosTag.ADVERB.value,
    PosTag.OTHER.value,
]

KEYWORD_TAGS = frozenset(
    {PosTag.COMMON_NOUN, PosTag.PROPER_NOUN, PosTag.VERB, PosTag.ADJECTIVE, PosTag.ADVERB}
)

_FORCED = {
    TokenKind.HASHTAG: PosTag.HASHTAG,
    TokenKind.MENTION: PosTag.MENTION,
    TokenKind.URL: PosTag.URL,
    TokenKind.PUNCTUATION: PosTag.PUNCT,
}


@dataclass(frozen=True)
class TagSequence:
    tags: tuple[PosTag, ...]

    def __len__(self) -> int:
        return len(self.tags)

    def validate(self, tweet: TokenizedTweet) -> None:
        if len(self.tags) != len(tweet.tokens):
            raise ValueError("tag count does not match token count")


@dataclass(frozen=True)
class TaggerModel:
    weights: dict[str, dict[str, float]]
    averaged: bool
    epochs: int
    seed: int


def forced_tag(token: Token) -> PosTag | None:
    return _FORCED.get(token.kind)


def _token_features(tokens: tuple[Token, ...], i: int, prev_tag: str) -> list[str]:
    tok = tokens[i]
    word = tok.text.lower()
    feats = [
        f"w={word}",
        f"kind={tok.kind.value}",
        f"prevtag={prev_tag}",
    ]
    for n in (1, 2, 3):
        feats.append(f"pre{n}={word[:n]}")
        feats.append(f"suf{n}={word[-n:]}")
    if any(ch.isdigit() for ch in tok.text):
        feats.append("hasdigit")
    if "-" in tok.text:
        feats.append("hashyphen")
    feats.append(f"prevw={tokens[i - 1].text.lower() if i > 0 else '-START-'}")
    feats.append(f"nextw={tokens[i + 1].text.lower() if i + 1 < len(tokens) else '-END-'}")
    return feats


def train_tagger(
    corpus: list[tuple[TokenizedTweet, TagSequence]], epochs: int = 5, seed: int = 0
) -> TaggerModel:
    """Train an averaged-perceptron tagger; deterministic for a fixed seed."""
    if not corpus:
        raise ValueError("empty training corpus")
    if epochs < 1:
        raise ValueError("epochs must be >= 1")
    for tweet, tags in corpus:
        tags.validate(tweet)

    model = AveragedPerceptron()
    rng = random.Random(seed)
    order = list(range(len(corpus)))
    for _ in range(epochs):
        rng.shuffle(order)
        for idx in order:
            tweet, gold = corpus[idx]
            prev_tag = "-START-"
            for i, token in enumerate(tweet.tokens):
                forced = forced_tag(token)
                if forced is not None:
                    prev_tag = forced.value
                    continue
                feats = _token_features(tweet.tokens, i, prev_tag)
                model.observe(feats, gold.tags[i].value, LEARNED_TAGS)
                # Greedy training conditions on the gold history.
                prev_tag = gold.tags[i].value
    return TaggerModel(weights=model.averaged_weights(), averaged=True, epochs=epochs, seed=seed)


def tag(model: TaggerModel, tweet: TokenizedTweet) -> TagSequence:
    """Greedy left-to-right decoding; deterministic given the model."""
    tags: list[PosTag] = []
    prev_tag = "-START-"
    for i, token in enumerate(tweet.tokens):
        forced = forced_tag(token)
        if forced is not None:
            tags.append(forced)
            prev_tag = forced.value
            continue
        feats = _token_features(tweet.tokens, i, prev_tag)
        best = predict_with(model.weights, feats, LEARNED_TAGS)
        tags.append(PosTag(best))
        prev_tag = best
    return TagSequence(tuple(tags))


def keyword_extract(tweet: TokenizedTweet, tags: TagSequence) -> set[str]:
    """Lowercased word tokens tagged noun/proper-noun/verb/adjective/adverb.

    Hashtags, mentions, URLs and other non-word tokens never contribute, so
    the result carries only the plain-text meaning of the post.
    """
    tags.validate(tweet)
    return {
        token.text.lower()
        for token, tok_tag in zip(tweet.tokens, tags.tags)
        if token.kind is TokenKind.WORD and tok_tag in KEYWORD_TAGS
    }
