"""Synthetic commercial-post corpora with signal planted in known families.

The generator fixes each tweet's intended label first (exactly half positive
per topic), then draws one boolean marker per planted family such that the
majority of markers matches the label.  Markers materialize as:

* punctuation --  the post ends with "!" instead of "."
* mentions    --  the mentioned account has a large follower count and is
                  verified (usernames themselves come from a shared pool)
* complexity  --  the post is drawn noticeably longer in tokens

Reaction counts are then set so the influence score falls in a high or low
band according to the intended label; with probability ``noise_rate`` a tweet
gets the opposite band, which is the only way labels and markers disagree.
Token text is sampled identically for both classes, so the signal is
structural rather than lexical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from datetime import datetime, timedelta, timezone

import numpy as np

from .corpus import AccountSnapshot, MentionInfo, TweetRecord
from .influence import NEGATIVE, POSITIVE

SUPPORTED_FAMILIES = ("punctuation", "mentions", "complexity")

# Disjoint per-topic vocabularies; grouping should rediscover these topics.
TOPIC_WORDS = {
    0: {
        "noun": ("coffee", "drink", "recipe", "flavor", "menu", "brunch",
                 "snack", "treat", "kitchen", "chef"),
        "verb": ("bake", "cook", "serve", "sip", "taste"),
        "adj": ("delicious", "fresh", "sweet", "spicy", "roasted"),
    },
    1: {
        "noun": ("phone", "laptop", "device", "screen", "battery", "app",
                 "update", "camera", "tablet", "gadget"),
        "verb": ("install", "charge", "stream", "unlock", "upgrade"),
        "adj": ("smart", "fast", "sleek", "powerful", "wireless"),
    },
    2: {
        "noun": ("trip", "flight", "beach", "hotel", "island", "adventure",
                 "journey", "tour", "vacation", "resort"),
        "verb": ("explore", "travel", "relax", "discover", "escape"),
        "adj": ("sunny", "scenic", "remote", "tropical", "coastal"),
    },
}

SHARED_NOUNS = ("deal", "sale", "offer", "weekend", "event", "store", "gift",
                "prize", "chance", "day", "time", "controller", "console")
SHARED_VERBS = ("win", "save", "shop", "order", "enjoy", "check", "join",
                "visit", "get", "buy", "love", "try", "see", "find", "start", "share")
SHARED_ADJS = ("new", "great", "big", "best", "free", "limited", "exclusive", "custom")
SHARED_ADVS = ("today", "now", "soon", "here", "online", "really")
STOPWORDS = ("the", "a", "your", "our", "this", "you", "we", "it", "to",
             "for", "with", "and", "of", "in", "on", "at", "every")

USERNAMES = ("brandup", "dealspot", "shopmate", "trendbox", "buzzhive", "promopal")
HASHTAG_WORDS = ("weekend", "sale", "event", "deal", "gift")
NUMBER_TOKENS = ("50%", "2", "15", "24/7", "$5")

_HIGH_BAND = (0.10, 0.13)
_LOW_BAND = (0.02, 0.05)
_FOLLOWERS = 10_000
_LENGTH_SHIFT = 5.0  # token-count offset applied per complexity marker side


@dataclass(frozen=True)
class SyntheticSpec:
    n: int
    signal_families: tuple[str, ...] = ("punctuation", "mentions", "complexity")
    noise_rate: float = 0.1
    mean_tokens: float = 15.2
    sd_tokens: float = 5.1
    n_topics: int = 3

    def validate(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 0.0 <= self.noise_rate < 0.5:
            raise ValueError("noise_rate must be in [0, 0.5)")
        if not self.signal_families:
            raise ValueError("at least one signal family required")
        unknown = set(self.signal_families) - set(SUPPORTED_FAMILIES)
        if unknown:
            raise ValueError(f"unsupported signal families: {sorted(unknown)}")
        if not 1 <= self.n_topics <= len(TOPIC_WORDS):
            raise ValueError(f"n_topics must be in 1..{len(TOPIC_WORDS)}")


@dataclass(frozen=True)
class GoldExample:
    tweet_id: str
    topic: int
    label: str
    markers: dict[str, bool] = field(default_factory=dict)
    score_flipped: bool = False


def majority_threshold(n_families: int) -> int:
    return n_families // 2 + 1


def rule_label(markers: dict[str, bool]) -> str:
    """The depth-1 rule: positive iff a majority of planted markers is on."""
    return POSITIVE if sum(markers.values()) >= majority_threshold(len(markers)) else NEGATIVE


def _marker_patterns(n_families: int) -> tuple[list[tuple[bool, ...]], list[tuple[bool, ...]]]:
    threshold = majority_threshold(n_families)
    positive, negative = [], []
    for code in range(2**n_families):
        bits = tuple(bool((code >> i) & 1) for i in range(n_families))
        (positive if sum(bits) >= threshold else negative).append(bits)
    return positive, negative


def _draw_length(spec: SyntheticSpec, complexity_on: bool | None, rng) -> int:
    if complexity_on is None:
        raw = rng.normal(spec.mean_tokens, spec.sd_tokens)
    else:
        # Split the requested variance between the marker shift and the
        # residual so the corpus-wide distribution keeps the target moments.
        residual_sd = math.sqrt(max(spec.sd_tokens**2 - _LENGTH_SHIFT**2, 0.25))
        center = spec.mean_tokens + (_LENGTH_SHIFT if complexity_on else -_LENGTH_SHIFT)
        raw = rng.normal(center, residual_sd)
    return max(5, int(round(raw)))


def _body_word(topic: int, rng) -> str:
    roll = rng.random()
    if roll < 0.30:
        pool = TOPIC_WORDS[topic]["noun"]
    elif roll < 0.45:
        pool = TOPIC_WORDS[topic]["verb"]
    elif roll < 0.60:
        pool = TOPIC_WORDS[topic]["adj"]
    elif roll < 0.70:
        pool = SHARED_NOUNS
    elif roll < 0.76:
        pool = SHARED_VERBS
    elif roll < 0.80:
        pool = SHARED_ADJS + SHARED_ADVS
    else:
        pool = STOPWORDS
    return pool[rng.integers(len(pool))]


def generate_synthetic(
    spec: SyntheticSpec, seed: int = 0
) -> tuple[list[TweetRecord], list[GoldExample]]:
    """Deterministic corpus whose post-pipeline labels follow the planted rule."""
    spec.validate()
    rng = np.random.default_rng(seed)
    positive_patterns, negative_patterns = _marker_patterns(len(spec.signal_families))

    base = datetime(2024, 3, 4, tzinfo=timezone.utc)
    records: list[TweetRecord] = []
    gold: list[GoldExample] = []

    for i in range(spec.n):
        topic = i % spec.n_topics
        label = POSITIVE if (i // spec.n_topics) % 2 == 0 else NEGATIVE
        patterns = positive_patterns if label == POSITIVE else negative_patterns
        bits = patterns[rng.integers(len(patterns))]
        markers = dict(zip(spec.signal_families, bits))

        complexity_on = markers.get("complexity") if "complexity" in markers else None
        length = _draw_length(spec, complexity_on, rng)

        username = USERNAMES[rng.integers(len(USERNAMES))]
        use_url = rng.random() < 0.5
        use_hashtag = rng.random() < 0.5
        use_number = rng.random() < 0.2
        n_fixed = 2 + use_url + use_hashtag + use_number  # mention + terminator
        n_body = max(2, length - n_fixed)

        tokens = [_body_word(topic, rng) for _ in range(n_body)]
        if use_number:
            tokens.insert(int(rng.integers(len(tokens) + 1)),
                          NUMBER_TOKENS[rng.integers(len(NUMBER_TOKENS))])
        if use_hashtag:
            tokens.append("#" + HASHTAG_WORDS[rng.integers(len(HASHTAG_WORDS))])
        if use_url:
            suffix = "".join(chr(ord("a") + rng.integers(26)) for _ in range(8))
            tokens.append(f"http://t.co/{suffix}")
        tokens.append("@" + username)
        terminator = "!" if markers.get("punctuation") else "."
        text = " ".join(tokens) + terminator

        if markers.get("mentions"):
            mention_meta = MentionInfo(username, True, int(rng.integers(200_000, 800_000)))
        else:
            mention_meta = MentionInfo(username, False, int(rng.integers(10, 200)))

        flipped = bool(rng.random() < spec.noise_rate)
        effective_positive = (label == POSITIVE) != flipped
        low, high = (_HIGH_BAND if effective_positive else _LOW_BAND)
        score = low + (high - low) * rng.random()
        retweets = int(round(score * _FOLLOWERS / 4.0))
        favorites = int(round(score * _FOLLOWERS / 2.0))

        posted_at = base + timedelta(
            days=int(rng.integers(28)),
            hours=int(rng.integers(24)),
            minutes=int(rng.integers(60)),
        )
        account = AccountSnapshot(
            follower_count=_FOLLOWERS,
            post_count=int(rng.integers(500, 2000)),
            favorite_count=int(rng.integers(100, 1000)),
            listed_count=int(rng.integers(10, 200)),
            registered_at=posted_at - timedelta(days=int(rng.integers(400, 900))),
            snapshot_at=posted_at,
        )
        record = TweetRecord(
            id=f"synth-{i:05d}",
            text=text,
            posted_at=posted_at,
            utc_offset_minutes=0,
            collected_at=posted_at + timedelta(days=22),
            retweet_count=retweets,
            favorite_count=favorites,
            account=account,
            mentions_meta=(mention_meta,),
        )
        record.validate()
        records.append(record)
        gold.append(GoldExample(record.id, topic, label, markers, flipped))

    return records, gold


def gold_csv(gold: list[GoldExample], families: tuple[str, ...]) -> str:
    header = ["id", "topic", "label", "score_flipped"] + [f"marker_{f}" for f in families]
    lines = [",".join(header)]
    for g in gold:
        row = [g.tweet_id, str(g.topic), g.label, str(g.score_flipped).lower()]
        row += [str(g.markers.get(f, "")).lower() for f in families]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"
