"""Influence scoring, meaning/decoration separation and binary labeling.

The labeling pipeline has a fixed order -- score, group, outlier pass, label
-- and each step asserts that it sees the stage the previous step produced.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .corpus import Diagnostic, TweetRecord, WordVectorTable
from .ml.kmeans import kmeans_fit
from .ml.lda import lda_doc_topics, lda_fit

GROUP_METHODS = ("sim_binary", "sim_emb", "topic")
DEFAULT_METHOD = "sim_emb"
DEFAULT_GROUPS = 5

STAGE_SCORED = "scored"
STAGE_GROUPED = "grouped"
STAGE_FILTERED = "filtered"
STAGE_LABELED = "labeled"

POSITIVE = "positive"
NEGATIVE = "negative"


class PipelineOrderError(RuntimeError):
    """A labeling step ran out of order."""


def influence_score(record: TweetRecord) -> float:
    """(2 * retweets + favorites) / followers for a finalized record.

    Retweets weigh double so the two reaction kinds have comparable impact;
    follower normalization removes the account-popularity effect.
    """
    if not record.is_final:
        raise ValueError(
            f"tweet {record.id} is provisional (collected less than 21 days after posting)"
        )
    if record.account.follower_count < 1:
        raise ValueError(f"tweet {record.id} has no followers; score undefined")
    return (2.0 * record.retweet_count + record.favorite_count) / record.account.follower_count


@dataclass(frozen=True)
class LabeledExample:
    tweet_id: str
    score: float
    group: int | None = None
    retained: bool = True
    label: str | None = None


@dataclass(frozen=True)
class ExampleSet:
    examples: tuple[LabeledExample, ...]
    stage: str

    def require(self, stage: str) -> None:
        if self.stage != stage:
            raise PipelineOrderError(
                f"expected stage {stage!r}, got {self.stage!r}; "
                "pipeline order is score -> group -> outlier-remove -> label"
            )


@dataclass(frozen=True)
class GroupAssignment:
    assignments: dict[str, int]
    method: str
    k: int

    def group_of(self, tweet_id: str) -> int:
        return self.assignments[tweet_id]


def score_corpus(records: list[TweetRecord]) -> ExampleSet:
    examples = tuple(
        LabeledExample(tweet_id=r.id, score=influence_score(r)) for r in records
    )
    return ExampleSet(examples, STAGE_SCORED)


def _binary_keyword_matrix(keyword_sets: list[set[str]]) -> np.ndarray:
    counts: dict[str, int] = {}
    for keywords in keyword_sets:
        for kw in keywords:
            counts[kw] = counts.get(kw, 0) + 1
    vocab = sorted(kw for kw, c in counts.items() if c >= 2)
    index = {kw: i for i, kw in enumerate(vocab)}
    X = np.zeros((len(keyword_sets), max(1, len(vocab))), dtype=np.float64)
    for row, keywords in enumerate(keyword_sets):
        for kw in keywords:
            if kw in index:
                X[row, index[kw]] = 1.0
    return X


def _embedding_keyword_matrix(
    keyword_sets: list[set[str]], vectors: WordVectorTable
) -> np.ndarray:
    X = np.zeros((len(keyword_sets), vectors.dimension), dtype=np.float64)
    for row, keywords in enumerate(keyword_sets):
        hits = [vectors.get(kw) for kw in sorted(keywords) if kw in vectors]
        if hits:
            X[row] = np.mean(np.stack(hits), axis=0)
    return X


def group_tweets(
    tweet_keywords: list[tuple[str, set[str]]],
    method: str = DEFAULT_METHOD,
    k: int = DEFAULT_GROUPS,
    seed: int = 0,
    vectors: WordVectorTable | None = None,
) -> GroupAssignment:
    """Cluster tweets by their keywords so labels compare like with like.

    Tweets without usable keywords keep the zero vector and cluster together
    near it rather than being dropped.
    """
    if not tweet_keywords:
        raise ValueError("empty corpus")
    if k < 2:
        raise ValueError("k must be >= 2")
    if method not in GROUP_METHODS:
        raise ValueError(f"method must be one of {GROUP_METHODS}")
    ids = [tid for tid, _ in tweet_keywords]
    keyword_sets = [kws for _, kws in tweet_keywords]

    if method == "topic":
        docs = [sorted(kws) for kws in keyword_sets]
        # Keyword bags are tiny; the generic 50/K prior would flatten the
        # per-document signal, so grouping uses a short-text prior instead.
        model = lda_fit(docs, n_topics=k, alpha=1.0, seed=seed)
        labels = [int(np.argmax(lda_doc_topics(model, d))) for d in range(len(docs))]
    else:
        if method == "sim_binary":
            X = _binary_keyword_matrix(keyword_sets)
        else:
            if vectors is None:
                raise ValueError("sim_emb grouping needs a word-vector table")
            X = _embedding_keyword_matrix(keyword_sets, vectors)
        model = kmeans_fit(X, k=k, seed=seed)
        labels = [int(v) for v in model.assign(X)]

    return GroupAssignment(assignments=dict(zip(ids, labels)), method=method, k=k)


def attach_groups(example_set: ExampleSet, assignment: GroupAssignment) -> ExampleSet:
    example_set.require(STAGE_SCORED)
    examples = tuple(
        replace(ex, group=assignment.group_of(ex.tweet_id)) for ex in example_set.examples
    )
    return ExampleSet(examples, STAGE_GROUPED)


def remove_outliers(example_set: ExampleSet) -> ExampleSet:
    """Single pass: drop scores whose within-group z-score exceeds 2.

    Only the high side is removed; those are posts whose influence came from
    outsized announcements rather than composition.  A zero-spread group is
    kept whole.  Re-running on the filtered output could remove more, so the
    pipeline never applies this twice.
    """
    example_set.require(STAGE_GROUPED)
    by_group: dict[int, list[LabeledExample]] = {}
    for ex in example_set.examples:
        by_group.setdefault(ex.group, []).append(ex)

    cut: set[str] = set()
    for members in by_group.values():
        scores = np.array([ex.score for ex in members], dtype=np.float64)
        std = float(scores.std())  # population std
        if std == 0.0:
            continue
        mean = float(scores.mean())
        for ex in members:
            if (ex.score - mean) / std > 2.0:
                cut.add(ex.tweet_id)

    examples = tuple(
        replace(ex, retained=ex.tweet_id not in cut) for ex in example_set.examples
    )
    return ExampleSet(examples, STAGE_FILTERED)


def assign_labels(example_set: ExampleSet) -> tuple[ExampleSet, list[Diagnostic]]:
    """Median-split labels per group: top half positive, bottom half negative.

    Sorting is by score descending with tweet id ascending as the tie-break;
    the first floor(m/2) examples are positive, so an odd group has one more
    negative.  Groups with fewer than two retained examples stay unlabeled.
    """
    example_set.require(STAGE_FILTERED)
    diagnostics: list[Diagnostic] = []
    by_group: dict[int, list[LabeledExample]] = {}
    for ex in example_set.examples:
        if ex.retained:
            by_group.setdefault(ex.group, []).append(ex)

    labels: dict[str, str] = {}
    for group in sorted(by_group):
        members = by_group[group]
        if len(members) < 2:
            diagnostics.append(
                Diagnostic(0, f"group {group} has {len(members)} retained example(s); skipped")
            )
            continue
        members = sorted(members, key=lambda ex: (-ex.score, ex.tweet_id))
        n_positive = len(members) // 2
        for i, ex in enumerate(members):
            labels[ex.tweet_id] = POSITIVE if i < n_positive else NEGATIVE

    examples = tuple(
        replace(ex, label=labels.get(ex.tweet_id)) if ex.retained else ex
        for ex in example_set.examples
    )
    return ExampleSet(examples, STAGE_LABELED), diagnostics


def export_labels_csv(example_set: ExampleSet) -> str:
    """CSV with columns id, group, score, retained, label."""
    lines = ["id,group,score,retained,label"]
    for ex in example_set.examples:
        label = ex.label if ex.label is not None else ""
        group = ex.group if ex.group is not None else ""
        lines.append(f"{ex.tweet_id},{group},{ex.score!r},{str(ex.retained).lower()},{label}")
    return "\n".join(lines) + "\n"
