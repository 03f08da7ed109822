"""Evaluation harness: stratified folds, positive-class metrics, ablation.

Cross-validation refits every corpus-dependent transform (n-gram vocabulary,
standardizer) inside each fold, so no information leaks from test rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .corpus import SentimentLexicon, TweetRecord, WordVectorTable
from .features import DECORATION_SCHEMA, FAMILIES
from .influence import (
    POSITIVE,
    ExampleSet,
    assign_labels,
    attach_groups,
    group_tweets,
    remove_outliers,
    score_corpus,
)
from .ml.logreg import logreg_fit, logreg_predict_proba
from .ml.standardize import Standardizer, standardize_apply, standardize_fit
from .ml.svm import svm_fit_smo
from .pipeline import (
    Annotation,
    NlpModels,
    annotate_corpus,
    decoration_matrix,
    family_include_mask,
    train_nlp_models,
)
from .synth import SyntheticSpec, GoldExample, generate_synthetic
from .textproc.tokenizer import TokenizedTweet, tokenize
from .vectorizers import NGramVocabulary, featurize_embedding, fit_ngram_vocab, ngram_matrix

N_FOLDS = 5


@dataclass(frozen=True)
class FoldSplit:
    folds: tuple[tuple[int, ...], ...]
    seed: int

    def train_test(self, fold: int) -> tuple[list[int], list[int]]:
        test = list(self.folds[fold])
        train = [i for f, members in enumerate(self.folds) if f != fold for i in members]
        return sorted(train), sorted(test)


def kfold_split(labels: list, groups: list, seed: int = 0, n_folds: int = N_FOLDS) -> FoldSplit:
    """Deterministic folds, stratified by (group, label); sizes differ by <= 1."""
    labels = list(labels)
    groups = list(groups)
    if len(labels) != len(groups):
        raise ValueError("labels and groups differ in length")
    for value in set(labels):
        if sum(1 for l in labels if l == value) < n_folds:
            raise ValueError(f"need at least {n_folds} examples per class")

    rng = np.random.default_rng(seed)
    strata: dict[tuple, list[int]] = {}
    for i, key in enumerate(zip(groups, labels)):
        strata.setdefault(key, []).append(i)

    folds: list[list[int]] = [[] for _ in range(n_folds)]
    dealer = 0
    for key in sorted(strata, key=str):
        members = strata[key]
        order = rng.permutation(len(members))
        for pos in order:
            folds[dealer % n_folds].append(members[pos])
            dealer += 1
    return FoldSplit(tuple(tuple(sorted(f)) for f in folds), seed)


@dataclass(frozen=True)
class Metrics:
    precision: float
    recall: float
    f1: float
    tp: int
    fp: int
    fn: int
    tn: int


def compute_metrics(y_true, y_pred) -> Metrics:
    """Positive-class precision/recall/F1 over binary {0, 1} labels."""
    y_true = np.asarray(y_true, dtype=int)
    y_pred = np.asarray(y_pred, dtype=int)
    if y_true.size == 0:
        raise ValueError("empty input")
    if y_true.shape != y_pred.shape:
        raise ValueError("length mismatch")
    tp = int(((y_pred == 1) & (y_true == 1)).sum())
    fp = int(((y_pred == 1) & (y_true == 0)).sum())
    fn = int(((y_pred == 0) & (y_true == 1)).sum())
    tn = int(((y_pred == 0) & (y_true == 0)).sum())
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return Metrics(precision, recall, f1, tp, fp, fn, tn)


@dataclass(frozen=True)
class LabeledDataset:
    """Per-example payloads for cross-validation, in corpus order."""

    ids: tuple[str, ...]
    y: np.ndarray  # {0, 1}
    groups: np.ndarray
    tweets: tuple[TokenizedTweet, ...]
    decoration: np.ndarray
    embedding: np.ndarray | None = None

    def __len__(self) -> int:
        return len(self.ids)

    def subset(self, idx: list[int]) -> "LabeledDataset":
        idx = list(idx)
        return LabeledDataset(
            ids=tuple(self.ids[i] for i in idx),
            y=self.y[idx],
            groups=self.groups[idx],
            tweets=tuple(self.tweets[i] for i in idx),
            decoration=self.decoration[idx],
            embedding=None if self.embedding is None else self.embedding[idx],
        )


def build_labeled_dataset(
    records: list[TweetRecord],
    example_set: ExampleSet,
    annotations: list[Annotation],
    lexicon: SentimentLexicon,
    vectors: WordVectorTable | None = None,
) -> LabeledDataset:
    by_id = {ex.tweet_id: ex for ex in example_set.examples}
    keep = [i for i, r in enumerate(records) if by_id[r.id].label is not None]
    kept_records = [records[i] for i in keep]
    kept_annotations = [annotations[i] for i in keep]
    decoration = decoration_matrix(kept_records, kept_annotations, lexicon)
    embedding = None
    if vectors is not None:
        embedding = np.stack(
            [featurize_embedding(vectors, a.tweet) for a in kept_annotations]
        )
    return LabeledDataset(
        ids=tuple(r.id for r in kept_records),
        y=np.array([1 if by_id[r.id].label == POSITIVE else 0 for r in kept_records]),
        groups=np.array([by_id[r.id].group for r in kept_records]),
        tweets=tuple(a.tweet for a in kept_annotations),
        decoration=decoration,
        embedding=embedding,
    )


@dataclass(frozen=True)
class ExperimentConfig:
    representation: str = "decoration"  # decoration | ngram | embedding
    classifier: str = "svm-rbf"  # maxent | svm-linear | svm-rbf
    include_families: tuple[str, ...] = FAMILIES
    seed: int = 0
    C: float = 1.0
    gamma: float | None = None
    l2_lambda: float = 1e-4
    lr: float = 0.5
    epochs: int = 300
    svm_max_passes: int = 40


@dataclass(frozen=True)
class FoldTransforms:
    vocab: NGramVocabulary | None = None
    standardizer: Standardizer | None = None


def fit_fold_transforms(
    config: ExperimentConfig, dataset: LabeledDataset, train_idx: list[int]
) -> FoldTransforms:
    """Fit all corpus-dependent transforms on the training rows only."""
    if config.representation == "ngram":
        vocab = fit_ngram_vocab([dataset.tweets[i] for i in train_idx])
        return FoldTransforms(vocab=vocab)
    if config.representation == "decoration":
        X = dataset.decoration[train_idx].copy()
        X[:, ~family_include_mask(config.include_families)] = 0.0
        mask = DECORATION_SCHEMA.continuous_mask()
    elif config.representation == "embedding":
        if dataset.embedding is None:
            raise ValueError("dataset has no embedding payload")
        X = dataset.embedding[train_idx]
        mask = None
    else:
        raise ValueError(f"unknown representation {config.representation!r}")
    return FoldTransforms(standardizer=standardize_fit(X, mask))


def _design_matrix(config: ExperimentConfig, dataset: LabeledDataset,
                   idx: list[int], transforms: FoldTransforms):
    if config.representation == "ngram":
        return ngram_matrix(transforms.vocab, [dataset.tweets[i] for i in idx])
    if config.representation == "decoration":
        X = dataset.decoration[idx].copy()
        X[:, ~family_include_mask(config.include_families)] = 0.0
    else:
        X = dataset.embedding[idx]
    return standardize_apply(transforms.standardizer, X)


def _fit_predict(config: ExperimentConfig, X_train, y_train: np.ndarray, X_test) -> np.ndarray:
    if config.classifier == "maxent":
        model = logreg_fit(X_train, y_train, l2_lambda=config.l2_lambda,
                           lr=config.lr, epochs=config.epochs)
        proba = np.atleast_1d(np.asarray(logreg_predict_proba(model, X_test)))
        return (proba >= 0.5).astype(int)
    if config.classifier in ("svm-linear", "svm-rbf"):
        X_train = X_train.toarray() if hasattr(X_train, "toarray") else X_train
        X_test = X_test.toarray() if hasattr(X_test, "toarray") else X_test
        model = svm_fit_smo(
            X_train, np.where(y_train == 1, 1.0, -1.0),
            C=config.C,
            kernel="linear" if config.classifier == "svm-linear" else "rbf",
            gamma=config.gamma,
            max_passes=config.svm_max_passes,
            seed=config.seed,
        )
        return (model.decision(X_test) >= 0.0).astype(int)
    raise ValueError(f"unknown classifier {config.classifier!r}")


@dataclass(frozen=True)
class CvResult:
    precision: float
    recall: float
    f1: float
    folds: tuple[Metrics, ...]


def cross_validate(config: ExperimentConfig, dataset: LabeledDataset) -> CvResult:
    """Mean positive-class metrics over stratified folds; transforms refit per fold."""
    split = kfold_split(list(dataset.y), list(dataset.groups), seed=config.seed)
    fold_metrics = []
    for fold in range(len(split.folds)):
        train_idx, test_idx = split.train_test(fold)
        transforms = fit_fold_transforms(config, dataset, train_idx)
        X_train = _design_matrix(config, dataset, train_idx, transforms)
        X_test = _design_matrix(config, dataset, test_idx, transforms)
        y_pred = _fit_predict(config, X_train, dataset.y[train_idx], X_test)
        fold_metrics.append(compute_metrics(dataset.y[test_idx], y_pred))
    return CvResult(
        precision=float(np.mean([m.precision for m in fold_metrics])),
        recall=float(np.mean([m.recall for m in fold_metrics])),
        f1=float(np.mean([m.f1 for m in fold_metrics])),
        folds=tuple(fold_metrics),
    )


@dataclass(frozen=True)
class AblationRow:
    family: str
    delta_precision: float
    delta_recall: float
    delta_f1: float


@dataclass(frozen=True)
class AblationReport:
    full: CvResult
    rows: tuple[AblationRow, ...]
    cv_runs: int

    def to_csv(self) -> str:
        lines = ["family,delta_precision,delta_recall,delta_f1"]
        for row in self.rows:
            lines.append(
                f"{row.family},{row.delta_precision:.6f},"
                f"{row.delta_recall:.6f},{row.delta_f1:.6f}"
            )
        return "\n".join(lines) + "\n"


def ablate(config: ExperimentConfig, dataset: LabeledDataset) -> AblationReport:
    """Re-run CV with each feature family zeroed out; report deltas vs full.

    Issues exactly len(FAMILIES) + 1 cross-validation runs.
    """
    if config.representation != "decoration":
        raise ValueError("ablation applies to the decoration representation")
    full = cross_validate(config, dataset)
    runs = 1
    rows = []
    for family in FAMILIES:
        reduced = tuple(f for f in config.include_families if f != family)
        result = cross_validate(replace(config, include_families=reduced), dataset)
        runs += 1
        rows.append(AblationRow(
            family=family,
            delta_precision=result.precision - full.precision,
            delta_recall=result.recall - full.recall,
            delta_f1=result.f1 - full.f1,
        ))
    return AblationReport(full=full, rows=tuple(rows), cv_runs=runs)


# Paper-scale reference for documentation: with the original 63k-tweet corpus
# the decoration model reached F1 0.7923 vs 0.7664 (n-gram) and 0.7878
# (embedding).  Those figures need the original dataset and are not test
# targets here; desk-scale acceptance uses planted-signal corpora instead.
REFERENCE_F1 = {"decoration": 0.7923, "ngram": 0.7664, "embedding": 0.7878}


@dataclass(frozen=True)
class CorpusStats:
    n_records: int
    n_ratio_rows: int
    n_ratio_excluded: int
    ratio_mean: float
    ratio_histogram: tuple[tuple[str, int], ...]
    token_mean: float
    token_sd: float

    def to_csv(self) -> str:
        lines = ["metric,value"]
        lines.append(f"n_records,{self.n_records}")
        lines.append(f"n_ratio_rows,{self.n_ratio_rows}")
        lines.append(f"n_ratio_excluded,{self.n_ratio_excluded}")
        lines.append(f"ratio_mean,{self.ratio_mean!r}")
        lines.append(f"token_mean,{self.token_mean!r}")
        lines.append(f"token_sd,{self.token_sd!r}")
        for label, count in self.ratio_histogram:
            lines.append(f"ratio_bin_{label},{count}")
        return "\n".join(lines) + "\n"

    def to_table(self) -> str:
        width = max(len(label) for label, _ in self.ratio_histogram)
        lines = [
            f"records            {self.n_records}",
            f"ratio rows         {self.n_ratio_rows} ({self.n_ratio_excluded} excluded)",
            f"favorite/retweet   mean {self.ratio_mean:.4f}",
            f"tokens per tweet   {self.token_mean:.2f} +/- {self.token_sd:.2f}",
            "ratio histogram:",
        ]
        for label, count in self.ratio_histogram:
            lines.append(f"  {label.ljust(width)} {'#' * min(count, 60)} {count}")
        return "\n".join(lines)


def corpus_stats(records: list[TweetRecord]) -> CorpusStats:
    """Favorite-to-retweet ratio distribution and token-length moments.

    Ratio rows use final records with at least one retweet; everything else
    is counted as excluded.  (On the original corpus the mean ratio was
    about 2.5, which motivated the doubled retweet weight.)
    """
    ratios = []
    excluded = 0
    for record in records:
        if record.is_final and record.retweet_count >= 1:
            ratios.append(record.favorite_count / record.retweet_count)
        else:
            excluded += 1
    edges = [0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0]
    histogram = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        count = sum(1 for r in ratios if lo <= r < hi)
        histogram.append((f"[{lo:g},{hi:g})", count))
    histogram.append((f">={edges[-1]:g}", sum(1 for r in ratios if r >= edges[-1])))

    lengths = np.array([len(tokenize(r.text).tokens) for r in records], dtype=np.float64)
    return CorpusStats(
        n_records=len(records),
        n_ratio_rows=len(ratios),
        n_ratio_excluded=excluded,
        ratio_mean=float(np.mean(ratios)) if ratios else 0.0,
        ratio_histogram=tuple(histogram),
        token_mean=float(lengths.mean()) if len(lengths) else 0.0,
        token_sd=float(lengths.std()) if len(lengths) else 0.0,
    )


@dataclass(frozen=True)
class PlantedRun:
    """Everything the planted-signal acceptance checks need, computed once."""

    records: list[TweetRecord]
    gold: list[GoldExample]
    example_set: ExampleSet
    dataset: LabeledDataset
    annotations: list[Annotation]
    nlp: NlpModels
    lexicon: SentimentLexicon
    cv_decoration: CvResult
    cv_ngram: CvResult
    ablation: AblationReport
    labels: dict[str, str] = field(default_factory=dict)
    elapsed_seconds: float = 0.0


def label_corpus(
    records: list[TweetRecord],
    annotations: list[Annotation],
    method: str = "sim_binary",
    k: int = 3,
    seed: int = 0,
    vectors: WordVectorTable | None = None,
) -> ExampleSet:
    """Run the fixed labeling pipeline: score, group, outlier pass, label."""
    keywords = [(r.id, a.keywords) for r, a in zip(records, annotations)]
    assignment = group_tweets(keywords, method=method, k=k, seed=seed, vectors=vectors)
    example_set = score_corpus(records)
    example_set = attach_groups(example_set, assignment)
    example_set = remove_outliers(example_set)
    example_set, _ = assign_labels(example_set)
    return example_set


def run_planted_experiment(n: int = 2000, noise: float = 0.1, seed: int = 7) -> PlantedRun:
    """Generate, label and evaluate the planted-signal corpus end to end."""
    import time

    from .pipeline import load_default_lexicon

    started = time.perf_counter()
    spec = SyntheticSpec(n=n, noise_rate=noise)
    records, gold = generate_synthetic(spec, seed=seed)
    nlp = train_nlp_models()
    lexicon = load_default_lexicon()
    annotations = annotate_corpus(nlp, records)
    example_set = label_corpus(records, annotations, method="sim_binary",
                               k=spec.n_topics, seed=seed)
    dataset = build_labeled_dataset(records, example_set, annotations, lexicon)

    decoration_config = ExperimentConfig(representation="decoration",
                                         classifier="svm-rbf", seed=seed)
    ngram_config = ExperimentConfig(representation="ngram",
                                    classifier="maxent", seed=seed)
    ablation = ablate(decoration_config, dataset)
    labels = {
        ex.tweet_id: ex.label for ex in example_set.examples if ex.label is not None
    }
    return PlantedRun(
        records=records,
        gold=gold,
        example_set=example_set,
        dataset=dataset,
        annotations=annotations,
        nlp=nlp,
        lexicon=lexicon,
        cv_decoration=ablation.full,
        cv_ngram=cross_validate(ngram_config, dataset),
        ablation=ablation,
        labels=labels,
        elapsed_seconds=time.perf_counter() - started,
    )
