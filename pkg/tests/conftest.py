"""Shared fixtures: record factory, bundled NLP models, planted-signal run.

The expensive pieces (tagger/parser training, the n=2000 planted-signal
experiment) are session-scoped so the acceptance tests and the unit tests
share one computation.
"""

from __future__ import annotations

from datetime import datetime, timedelta, timezone

import pytest

from tweetcraft.corpus import AccountSnapshot, MentionInfo, TweetRecord


def utc(year=2024, month=3, day=5, hour=12, minute=0, second=0):
    return datetime(year, month, day, hour, minute, second, tzinfo=timezone.utc)


def make_account(
    follower_count=10_000,
    post_count=1_000,
    favorite_count=300,
    listed_count=50,
    registered_at=None,
    snapshot_at=None,
    posted_at=None,
):
    posted_at = posted_at or utc()
    return AccountSnapshot(
        follower_count=follower_count,
        post_count=post_count,
        favorite_count=favorite_count,
        listed_count=listed_count,
        registered_at=registered_at or (posted_at - timedelta(days=500)),
        snapshot_at=snapshot_at or posted_at,
    )


def make_record(
    id="t1",
    text="Check out our new deal today!",
    posted_at=None,
    utc_offset_minutes=0,
    age_days=22,
    retweet_count=10,
    favorite_count=30,
    account=None,
    mentions_meta=(),
    **account_kwargs,
):
    posted_at = posted_at or utc()
    account = account or make_account(posted_at=posted_at, **account_kwargs)
    return TweetRecord(
        id=id,
        text=text,
        posted_at=posted_at,
        utc_offset_minutes=utc_offset_minutes,
        collected_at=posted_at + timedelta(days=age_days),
        retweet_count=retweet_count,
        favorite_count=favorite_count,
        account=account,
        mentions_meta=tuple(
            MentionInfo(*m) if isinstance(m, tuple) else m for m in mentions_meta
        ),
    )


@pytest.fixture(scope="session")
def nlp_models():
    """Tagger and parser trained on the bundled annotated sample."""
    from tweetcraft.pipeline import train_nlp_models

    return train_nlp_models(epochs=5, seed=13)


@pytest.fixture(scope="session")
def planted_run():
    """Full planted-signal experiment shared by e2e/ablation/parity tests."""
    from tweetcraft.evaluation import run_planted_experiment

    return run_planted_experiment(n=2000, noise=0.1, seed=7)


@pytest.fixture(scope="session")
def trained_pipeline(planted_run):
    """Serving pipeline trained on the planted corpus labels."""
    from tweetcraft.pipeline import load_default_lexicon, train_pipeline

    return train_pipeline(
        planted_run.records,
        planted_run.labels,
        planted_run.nlp,
        load_default_lexicon(),
        classifier_kind="svm-rbf",
        seed=7,
    )
