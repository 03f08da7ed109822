"""Decoration feature vector: structure, style and metadata of a post.

The 30-dimensional vector deliberately carries no inherent meaning of the
post (no token identities); it captures how the post is built.  Dimension
order is fixed by :data:`DECORATION_SCHEMA` and versioned.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .corpus import Diagnostic, SentimentLexicon, TweetRecord
from .textproc.parsing import DependencyTree, head_count, tree_depth
from .textproc.tagging import PosTag, TagSequence
from .textproc.tokenizer import TokenizedTweet, TokenKind

FAMILIES = (
    "complexity",
    "elements",
    "author_meta",
    "post_meta",
    "mentions",
    "punctuation",
    "digits",
    "pos_dist",
    "sentiment",
)

_DAYS = ("mon", "tue", "wed", "thu", "fri", "sat", "sun")
_PERIODS = ("00_06", "06_12", "12_18", "18_24")


@dataclass(frozen=True)
class FeatureSchema:
    """Ordered (name, family) pairs defining the decoration vector layout."""

    entries: tuple[tuple[str, str], ...]
    version: str

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.entries)

    @property
    def families(self) -> tuple[str, ...]:
        return FAMILIES

    def family_mask(self, family: str) -> np.ndarray:
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}")
        return np.array([fam == family for _, fam in self.entries], dtype=bool)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def continuous_mask(self) -> np.ndarray:
        """True for dimensions the standardizer should rescale."""
        return np.array([name in _CONTINUOUS for name, _ in self.entries], dtype=bool)


_ENTRIES = (
    [("length", "complexity"), ("readability", "complexity"),
     ("depth", "complexity"), ("head_count", "complexity")]
    + [("has_mention", "elements"), ("has_url", "elements"), ("has_hashtag", "elements")]
    + [("posts_per_day", "author_meta"), ("favorites_per_post", "author_meta"),
       ("listed_per_follower", "author_meta")]
    + [(f"day_{d}", "post_meta") for d in _DAYS]
    + [(f"period_{p}", "post_meta") for p in _PERIODS]
    + [("any_mention_verified", "mentions"), ("mean_mention_followers", "mentions")]
    + [("has_question", "punctuation"), ("has_exclamation", "punctuation")]
    + [("has_digit", "digits")]
    + [("pos_noun", "pos_dist"), ("pos_descriptor", "pos_dist"), ("pos_verb", "pos_dist")]
    + [("sentiment", "sentiment")]
)

_CONTINUOUS = frozenset(
    {"length", "readability", "depth", "head_count", "posts_per_day",
     "favorites_per_post", "listed_per_follower", "mean_mention_followers",
     "pos_noun", "pos_descriptor", "pos_verb", "sentiment"}
)

DECORATION_SCHEMA = FeatureSchema(tuple(_ENTRIES), version="decoration-v1")

_SENTENCE_RUN = re.compile(r"[.!?]+")


def coleman_liau(tweet: TokenizedTweet) -> float:
    """Readability as 0.0588*L - 0.296*S - 15.8 over letters/sentences per 100 words.

    Words are word and hashtag tokens (the '#' itself never counts as a
    letter); sentence boundaries are runs of '.', '!' or '?' in the source,
    at least one whenever there is a word.  Zero words scores 0.
    """
    words = [t for t in tweet.tokens if t.kind in (TokenKind.WORD, TokenKind.HASHTAG)]
    if not words:
        return 0.0
    letters = sum(1 for t in words for ch in t.text if ch.isalpha())
    sentences = max(1, len(_SENTENCE_RUN.findall(tweet.source)))
    per_100 = 100.0 / len(words)
    return 0.0588 * (letters * per_100) - 0.296 * (sentences * per_100) - 15.8


def sentiment_score(tweet: TokenizedTweet, lexicon: SentimentLexicon) -> float:
    """Sum of lexicon scores over word tokens, normalized by total token count."""
    if not tweet.tokens:
        return 0.0
    total = sum(
        lexicon.score(t.text) for t in tweet.tokens if t.kind is TokenKind.WORD
    )
    return total / len(tweet.tokens)


def pos_distribution(tags: TagSequence) -> tuple[float, float, float]:
    """(noun, descriptor, verb) proportions among the three POS categories."""
    noun = sum(1 for t in tags.tags if t in (PosTag.COMMON_NOUN, PosTag.PROPER_NOUN))
    descriptor = sum(1 for t in tags.tags if t in (PosTag.ADJECTIVE, PosTag.ADVERB))
    verb = sum(1 for t in tags.tags if t is PosTag.VERB)
    total = noun + descriptor + verb
    if total == 0:
        return (0.0, 0.0, 0.0)
    return (noun / total, descriptor / total, verb / total)


def extract_decoration(
    record: TweetRecord,
    tweet: TokenizedTweet,
    tags: TagSequence,
    tree: DependencyTree,
    lexicon: SentimentLexicon,
    diagnostics: list[Diagnostic] | None = None,
) -> np.ndarray:
    """Compute the 30-dim decoration vector for one annotated record.

    Pure function of its inputs.  Mention tokens missing from the record's
    mentions_meta count as unverified with 0 followers; a diagnostic is
    appended when a ``diagnostics`` list is supplied.
    """
    tags.validate(tweet)
    if len(tree.heads) != len(tweet.tokens):
        raise ValueError("tree size does not match token count")

    vec = np.zeros(len(DECORATION_SCHEMA), dtype=np.float64)
    s = DECORATION_SCHEMA

    kinds = {t.kind for t in tweet.tokens}
    vec[s.index("length")] = float(len(tweet.tokens))
    vec[s.index("readability")] = coleman_liau(tweet)
    vec[s.index("depth")] = tree_depth(tree)
    vec[s.index("head_count")] = head_count(tree)
    vec[s.index("has_mention")] = float(TokenKind.MENTION in kinds)
    vec[s.index("has_url")] = float(TokenKind.URL in kinds)
    vec[s.index("has_hashtag")] = float(TokenKind.HASHTAG in kinds)

    account = record.account
    days_active = max(1, (record.posted_at - account.registered_at).days)
    vec[s.index("posts_per_day")] = account.post_count / days_active
    vec[s.index("favorites_per_post")] = account.favorite_count / max(1, account.post_count)
    vec[s.index("listed_per_follower")] = account.listed_count / max(1, account.follower_count)

    local = record.local_posted_at
    vec[s.index(f"day_{_DAYS[local.weekday()]}")] = 1.0
    vec[s.index(f"period_{_PERIODS[local.hour // 6]}")] = 1.0

    meta_by_name = {m.username.lower(): m for m in record.mentions_meta}
    usernames: list[str] = []
    for token in tweet.tokens:
        if token.kind is TokenKind.MENTION:
            name = token.text[1:].lower()
            if name not in usernames:
                usernames.append(name)
    verified = False
    followers: list[int] = []
    for name in usernames:
        meta = meta_by_name.get(name)
        if meta is None:
            if diagnostics is not None:
                diagnostics.append(
                    Diagnostic(0, f"tweet {record.id}: no mentions_meta for @{name}")
                )
            followers.append(0)
        else:
            verified = verified or meta.verified
            followers.append(meta.follower_count)
    vec[s.index("any_mention_verified")] = float(verified)
    mean_followers = (sum(followers) / len(followers)) if followers else 0.0
    vec[s.index("mean_mention_followers")] = math.log10(1.0 + mean_followers)

    vec[s.index("has_question")] = float("?" in record.text)
    vec[s.index("has_exclamation")] = float("!" in record.text)
    vec[s.index("has_digit")] = float(
        any(
            ch.isdigit()
            for t in tweet.tokens
            if t.kind in (TokenKind.WORD, TokenKind.NUMBER)
            for ch in t.text
        )
    )

    noun, descriptor, verb = pos_distribution(tags)
    vec[s.index("pos_noun")] = noun
    vec[s.index("pos_descriptor")] = descriptor
    vec[s.index("pos_verb")] = verb
    vec[s.index("sentiment")] = sentiment_score(tweet, lexicon)
    return vec


def breakdown(vector: np.ndarray) -> dict[str, float]:
    """Schema-ordered name -> value mapping for one decoration vector."""
    if vector.shape != (len(DECORATION_SCHEMA),):
        raise ValueError("vector does not match schema length")
    return {name: float(v) for name, v in zip(DECORATION_SCHEMA.names, vector)}


def decoration_csv(matrix: np.ndarray) -> str:
    """Feature matrix as CSV with the schema names as the header row."""
    matrix = np.atleast_2d(matrix)
    if matrix.shape[1] != len(DECORATION_SCHEMA):
        raise ValueError("matrix width does not match schema length")
    lines = [",".join(DECORATION_SCHEMA.names)]
    for row in matrix:
        lines.append(",".join(repr(float(v)) for v in row))
    return "\n".join(lines) + "\n"
