import math

import numpy as np
import pytest

from tweetcraft.corpus import SentimentLexicon
from tweetcraft.features import (
    DECORATION_SCHEMA,
    FAMILIES,
    breakdown,
    coleman_liau,
    extract_decoration,
    pos_distribution,
    sentiment_score,
)
from tweetcraft.textproc import DependencyTree, PosTag, TagSequence, tokenize

from .conftest import make_record, utc

N = PosTag.COMMON_NOUN
V = PosTag.VERB
A = PosTag.ADJECTIVE


def flat_tree(n):
    return DependencyTree(tuple(0 for _ in range(n)))


def annotate_flat(text, tags=None):
    tweet = tokenize(text)
    if tags is None:
        tags = [PosTag.OTHER] * len(tweet.tokens)
    return tweet, TagSequence(tuple(tags)), flat_tree(len(tweet.tokens))


def test_coleman_liau_five_words():
    # 5 words x 3 letters, one sentence terminator.
    tweet = tokenize("abc abc abc abc abc.")
    assert coleman_liau(tweet) == pytest.approx(-4.08, abs=1e-9)


def test_coleman_liau_single_word():
    tweet = tokenize("Hello.")
    assert coleman_liau(tweet) == pytest.approx(-16.0, abs=1e-9)


def test_coleman_liau_empty():
    assert coleman_liau(tokenize("")) == 0.0


def test_coleman_liau_counts_hashtag_bodies():
    with_tag = coleman_liau(tokenize("word #word."))
    plain = coleman_liau(tokenize("word word."))
    assert with_tag == pytest.approx(plain)


def test_sentiment_normalized_by_all_tokens():
    lexicon = SentimentLexicon({"good": 3.0})
    tweet = tokenize("good good day")
    assert sentiment_score(tweet, lexicon) == pytest.approx(2.0, abs=1e-9)


def test_sentiment_no_hits():
    assert sentiment_score(tokenize("nothing here"), SentimentLexicon({})) == 0.0


def test_sentiment_symmetry():
    lexicon = SentimentLexicon({"great": 3.0, "awful": -3.0})
    assert sentiment_score(tokenize("great awful"), lexicon) == pytest.approx(0.0, abs=1e-9)


def test_pos_distribution_mixed():
    tags = TagSequence((N, V, A, N))
    assert pos_distribution(tags) == pytest.approx((0.5, 0.25, 0.25))


def test_pos_distribution_empty():
    assert pos_distribution(TagSequence((PosTag.PUNCT, PosTag.URL))) == (0.0, 0.0, 0.0)


def test_pos_distribution_ignores_non_categories():
    tags = TagSequence((N, N, PosTag.PUNCT, PosTag.URL))
    assert pos_distribution(tags) == pytest.approx((1.0, 0.0, 0.0))


def lexicon():
    return SentimentLexicon({"great": 3.0})


def test_schema_is_30_dims_9_families():
    assert len(DECORATION_SCHEMA) == 30
    assert len(FAMILIES) == 9
    total = np.zeros(30, dtype=int)
    for family in FAMILIES:
        total += DECORATION_SCHEMA.family_mask(family).astype(int)
    assert (total == 1).all()  # families partition the dimensions


def test_extract_decoration_day_and_period():
    # 2024-03-05 is a Tuesday; 14:30 falls in the [12, 18) period.
    record = make_record(posted_at=utc(2024, 3, 5, 14, 30))
    tweet, tags, tree = annotate_flat(record.text)
    vec = extract_decoration(record, tweet, tags, tree, lexicon())
    assert vec[DECORATION_SCHEMA.index("day_tue")] == 1.0
    assert vec[DECORATION_SCHEMA.index("period_12_18")] == 1.0
    day = vec[DECORATION_SCHEMA.index("day_mon"):DECORATION_SCHEMA.index("day_sun") + 1]
    assert day.sum() == 1.0


def test_extract_decoration_local_offset_changes_day():
    # 01:00 UTC Tuesday with -120 offset is still Monday 23:00 locally.
    record = make_record(posted_at=utc(2024, 3, 5, 1, 0), utc_offset_minutes=-120)
    tweet, tags, tree = annotate_flat(record.text)
    vec = extract_decoration(record, tweet, tags, tree, lexicon())
    assert vec[DECORATION_SCHEMA.index("day_mon")] == 1.0
    assert vec[DECORATION_SCHEMA.index("period_18_24")] == 1.0


def test_extract_decoration_author_meta():
    record = make_record()  # 1000 posts over 500 days, 300 favs, 50 listed, 10k followers
    tweet, tags, tree = annotate_flat(record.text)
    vec = extract_decoration(record, tweet, tags, tree, lexicon())
    assert vec[DECORATION_SCHEMA.index("posts_per_day")] == pytest.approx(2.0, abs=1e-9)
    assert vec[DECORATION_SCHEMA.index("favorites_per_post")] == pytest.approx(0.3, abs=1e-9)
    assert vec[DECORATION_SCHEMA.index("listed_per_follower")] == pytest.approx(0.005, abs=1e-9)


def test_extract_decoration_mention_followers_log_scaled():
    record = make_record(
        text="hello @a @b",
        mentions_meta=[("a", False, 100), ("b", False, 300)],
    )
    tweet, tags, tree = annotate_flat(record.text)
    vec = extract_decoration(record, tweet, tags, tree, lexicon())
    assert vec[DECORATION_SCHEMA.index("mean_mention_followers")] == pytest.approx(
        math.log10(201), abs=1e-9
    )
    assert vec[DECORATION_SCHEMA.index("any_mention_verified")] == 0.0


def test_extract_decoration_missing_mention_meta():
    record = make_record(text="hey @ghost", mentions_meta=[])
    tweet, tags, tree = annotate_flat(record.text)
    diagnostics = []
    vec = extract_decoration(record, tweet, tags, tree, lexicon(), diagnostics)
    assert len(diagnostics) == 1
    assert vec[DECORATION_SCHEMA.index("mean_mention_followers")] == 0.0


def test_extract_decoration_flags_from_raw_text():
    record = make_record(text="really?! wow")
    tweet, tags, tree = annotate_flat(record.text)
    vec = extract_decoration(record, tweet, tags, tree, lexicon())
    assert vec[DECORATION_SCHEMA.index("has_question")] == 1.0
    assert vec[DECORATION_SCHEMA.index("has_exclamation")] == 1.0


def test_extract_decoration_digits_from_tokens():
    record = make_record(text="save 50% now")
    tweet, tags, tree = annotate_flat(record.text)
    vec = extract_decoration(record, tweet, tags, tree, lexicon())
    assert vec[DECORATION_SCHEMA.index("has_digit")] == 1.0


def test_extract_decoration_pure_function():
    record = make_record(text="great deal @brandup #sale http://t.co/x !")
    tweet, tags, tree = annotate_flat(record.text)
    a = extract_decoration(record, tweet, tags, tree, lexicon())
    b = extract_decoration(record, tweet, tags, tree, lexicon())
    assert (a == b).all()


def test_one_hot_invariants_on_fuzzed_records():
    rng = np.random.default_rng(5)
    day_mask = np.array([name.startswith("day_") for name, _ in DECORATION_SCHEMA.entries])
    period_mask = np.array(
        [name.startswith("period_") for name, _ in DECORATION_SCHEMA.entries]
    )
    pos_mask = DECORATION_SCHEMA.family_mask("pos_dist")
    binary_names = {"has_mention", "has_url", "has_hashtag", "any_mention_verified",
                    "has_question", "has_exclamation", "has_digit"}
    binary_mask = np.array([n in binary_names for n, _ in DECORATION_SCHEMA.entries])
    tag_pool = [N, V, A, PosTag.OTHER, PosTag.ADVERB]
    words = ["win", "deal", "now", "50%", "@a", "#b", "?!"]
    for _ in range(200):
        text = " ".join(words[rng.integers(len(words))] for _ in range(rng.integers(1, 12)))
        record = make_record(
            text=text,
            posted_at=utc(2024, 3, int(rng.integers(1, 28)), int(rng.integers(24))),
            utc_offset_minutes=int(rng.integers(-720, 840)),
        )
        tweet = tokenize(record.text)
        tags = TagSequence(tuple(tag_pool[rng.integers(len(tag_pool))] for _ in tweet.tokens))
        vec = extract_decoration(record, tweet, tags, flat_tree(len(tweet.tokens)), lexicon())
        assert vec[day_mask].sum() == 1.0
        assert vec[period_mask].sum() == 1.0
        pos = vec[pos_mask]
        assert pos.sum() == pytest.approx(1.0) or (pos == 0).all()
        assert set(np.unique(vec[binary_mask])) <= {0.0, 1.0}
        assert vec[DECORATION_SCHEMA.index("length")] >= 0


def test_breakdown_matches_schema():
    record = make_record()
    tweet, tags, tree = annotate_flat(record.text)
    vec = extract_decoration(record, tweet, tags, tree, lexicon())
    named = breakdown(vec)
    assert list(named) == list(DECORATION_SCHEMA.names)
    assert named["length"] == float(len(tweet.tokens))
