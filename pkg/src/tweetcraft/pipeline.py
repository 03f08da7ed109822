"""Pipeline assembly: bundled NLP models, featurization and a trained predictor.

A :class:`TrainedPipeline` is the unit the service loads: tagger, parser,
lexicon, standardizer, classifier, the include-mask over feature families and
a display-score calibration, all persisted in one JSON envelope.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path

import numpy as np

from .corpus import (
    Diagnostic,
    SentimentLexicon,
    TweetRecord,
    WordVectorTable,
    load_sentiment_lexicon,
    load_word_vectors,
)
from .features import DECORATION_SCHEMA, FAMILIES, extract_decoration
from .influence import NEGATIVE, POSITIVE
from .ml.logreg import LogisticModel, logreg_fit, logreg_predict_proba
from .ml.persist import SCHEMA_VERSION, from_envelope, to_envelope
from .ml.standardize import Standardizer, standardize_apply, standardize_fit
from .ml.svm import SvmModel, svm_fit_smo
from .textproc.parsing import DependencyTree, ParserModel, parse, train_parser
from .textproc.tagging import TagSequence, TaggerModel, keyword_extract, tag, train_tagger
from .textproc.tokenizer import TokenizedTweet, tokenize
from .textproc.treebank import load_annotated

CLASSIFIERS = ("maxent", "svm-linear", "svm-rbf")


def data_path(name: str) -> Path:
    return Path(str(resources.files("tweetcraft") / "data" / name))


def load_default_lexicon() -> SentimentLexicon:
    lexicon, _ = load_sentiment_lexicon(data_path("sentiment_lexicon.tsv"))
    return lexicon


def load_default_vectors() -> WordVectorTable:
    table, _ = load_word_vectors(data_path("word_vectors.txt"))
    return table


@dataclass(frozen=True)
class NlpModels:
    tagger: TaggerModel
    parser: ParserModel


def train_nlp_models(
    epochs: int = 5, seed: int = 13, annotated_path: str | Path | None = None
) -> NlpModels:
    """Train tagger and parser from the bundled (or given) annotated sample."""
    path = Path(annotated_path) if annotated_path else data_path("annotated_tweets.tsv")
    sentences = load_annotated(path)
    tagger = train_tagger([(tw, tg) for tw, tg, _ in sentences], epochs=epochs, seed=seed)
    parser = train_parser(sentences, epochs=epochs, seed=seed)
    return NlpModels(tagger=tagger, parser=parser)


@dataclass(frozen=True)
class Annotation:
    tweet: TokenizedTweet
    tags: TagSequence
    tree: DependencyTree

    @property
    def keywords(self) -> set[str]:
        return keyword_extract(self.tweet, self.tags)


def annotate(nlp: NlpModels, text: str) -> Annotation:
    tweet = tokenize(text)
    tags = tag(nlp.tagger, tweet)
    tree = parse(nlp.parser, tweet, tags)
    return Annotation(tweet=tweet, tags=tags, tree=tree)


def annotate_corpus(nlp: NlpModels, records: list[TweetRecord]) -> list[Annotation]:
    return [annotate(nlp, r.text) for r in records]


def decoration_matrix(
    records: list[TweetRecord],
    annotations: list[Annotation],
    lexicon: SentimentLexicon,
    diagnostics: list[Diagnostic] | None = None,
) -> np.ndarray:
    rows = [
        extract_decoration(r, a.tweet, a.tags, a.tree, lexicon, diagnostics)
        for r, a in zip(records, annotations)
    ]
    return np.stack(rows) if rows else np.zeros((0, len(DECORATION_SCHEMA)))


def family_include_mask(include_families: tuple[str, ...]) -> np.ndarray:
    unknown = set(include_families) - set(FAMILIES)
    if unknown:
        raise ValueError(f"unknown families: {sorted(unknown)}")
    mask = np.zeros(len(DECORATION_SCHEMA), dtype=bool)
    for family in include_families:
        mask |= DECORATION_SCHEMA.family_mask(family)
    return mask


def _fit_classifier(kind: str, X: np.ndarray, y01: np.ndarray, params: dict):
    if kind == "maxent":
        return logreg_fit(
            X, y01,
            l2_lambda=params.get("l2_lambda", 1e-4),
            lr=params.get("lr", 0.5),
            epochs=params.get("epochs", 300),
        )
    if kind in ("svm-linear", "svm-rbf"):
        return svm_fit_smo(
            X, np.where(y01 == 1, 1.0, -1.0),
            C=params.get("C", 1.0),
            kernel="linear" if kind == "svm-linear" else "rbf",
            gamma=params.get("gamma"),
            tol=params.get("tol", 1e-3),
            max_passes=params.get("max_passes", 40),
            seed=params.get("seed", 0),
        )
    raise ValueError(f"unknown classifier {kind!r}")


def _classifier_margins(kind: str, model, X) -> np.ndarray:
    if kind == "maxent":
        proba = logreg_predict_proba(model, X)
        return np.atleast_1d(np.asarray(proba))
    return model.decision(X)


@dataclass(frozen=True)
class TrainedPipeline:
    model_id: str
    classifier_kind: str
    include_families: tuple[str, ...]
    tagger: TaggerModel
    parser: ParserModel
    lexicon: SentimentLexicon
    standardizer: Standardizer
    classifier: LogisticModel | SvmModel
    score_range: tuple[float, float]  # training-margin min/max for display scores
    metrics: dict
    schema_version: str = DECORATION_SCHEMA.version

    @property
    def nlp(self) -> NlpModels:
        return NlpModels(tagger=self.tagger, parser=self.parser)

    def features_for(self, record: TweetRecord,
                     diagnostics: list[Diagnostic] | None = None) -> np.ndarray:
        annotation = annotate(self.nlp, record.text)
        vec = extract_decoration(
            record, annotation.tweet, annotation.tags, annotation.tree,
            self.lexicon, diagnostics,
        )
        vec[~family_include_mask(self.include_families)] = 0.0
        return vec

    def predict_record(self, record: TweetRecord) -> tuple[str, float, np.ndarray]:
        """(label, display score in [0, 1], raw decoration vector)."""
        raw = self.features_for(record)
        X = standardize_apply(self.standardizer, raw[None, :])
        margin = float(_classifier_margins(self.classifier_kind, self.classifier, X)[0])
        if self.classifier_kind == "maxent":
            label = POSITIVE if margin >= 0.5 else NEGATIVE
            score = margin
        else:
            label = POSITIVE if margin >= 0.0 else NEGATIVE
            lo, hi = self.score_range
            score = (margin - lo) / (hi - lo) if hi > lo else 0.5
            score = float(min(1.0, max(0.0, score)))
        return label, score, raw


def train_pipeline(
    records: list[TweetRecord],
    labels: dict[str, str],
    nlp: NlpModels,
    lexicon: SentimentLexicon,
    classifier_kind: str = "svm-rbf",
    include_families: tuple[str, ...] = FAMILIES,
    seed: int = 0,
    **params,
) -> TrainedPipeline:
    """Fit standardizer and classifier on the labeled subset of ``records``."""
    if classifier_kind not in CLASSIFIERS:
        raise ValueError(f"classifier must be one of {CLASSIFIERS}")
    labeled = [r for r in records if r.id in labels]
    if not labeled:
        raise ValueError("no labeled records to train on")
    annotations = annotate_corpus(nlp, labeled)
    X = decoration_matrix(labeled, annotations, lexicon)
    X[:, ~family_include_mask(include_families)] = 0.0
    y01 = np.array([1 if labels[r.id] == POSITIVE else 0 for r in labeled])

    standardizer = standardize_fit(X, DECORATION_SCHEMA.continuous_mask())
    Xs = standardize_apply(standardizer, X)
    params = dict(params)
    params.setdefault("seed", seed)
    classifier = _fit_classifier(classifier_kind, Xs, y01, params)

    margins = _classifier_margins(classifier_kind, classifier, Xs)
    predicted = (margins >= (0.5 if classifier_kind == "maxent" else 0.0)).astype(int)
    tp = int(((predicted == 1) & (y01 == 1)).sum())
    fp = int(((predicted == 1) & (y01 == 0)).sum())
    fn = int(((predicted == 0) & (y01 == 1)).sum())
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    metrics = {
        "train_precision": precision,
        "train_recall": recall,
        "train_f1": f1,
        "n_train": len(labeled),
    }

    pipeline = TrainedPipeline(
        model_id="",
        classifier_kind=classifier_kind,
        include_families=tuple(include_families),
        tagger=nlp.tagger,
        parser=nlp.parser,
        lexicon=lexicon,
        standardizer=standardizer,
        classifier=classifier,
        score_range=(float(margins.min()), float(margins.max())),
        metrics=metrics,
    )
    return replace(pipeline, model_id=_fingerprint(pipeline))


def pipeline_to_envelope(pipeline: TrainedPipeline) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "model_type": "pipeline",
        "hyperparameters": {
            "model_id": pipeline.model_id,
            "classifier_kind": pipeline.classifier_kind,
            "include_families": list(pipeline.include_families),
            "feature_schema_version": pipeline.schema_version,
            "score_range": list(pipeline.score_range),
            "metrics": pipeline.metrics,
            "lexicon": pipeline.lexicon.entries,
        },
        "arrays": {},
        "parts": {
            "tagger": to_envelope(pipeline.tagger),
            "parser": to_envelope(pipeline.parser),
            "standardizer": to_envelope(pipeline.standardizer),
            "classifier": to_envelope(pipeline.classifier),
        },
    }


def pipeline_from_envelope(envelope: dict) -> TrainedPipeline:
    if envelope.get("model_type") != "pipeline":
        raise ValueError("not a pipeline envelope")
    hyper = envelope["hyperparameters"]
    parts = envelope["parts"]
    return TrainedPipeline(
        model_id=hyper["model_id"],
        classifier_kind=hyper["classifier_kind"],
        include_families=tuple(hyper["include_families"]),
        tagger=from_envelope(parts["tagger"]),
        parser=from_envelope(parts["parser"]),
        lexicon=SentimentLexicon({k: float(v) for k, v in hyper["lexicon"].items()}),
        standardizer=from_envelope(parts["standardizer"]),
        classifier=from_envelope(parts["classifier"]),
        score_range=tuple(hyper["score_range"]),
        metrics=hyper["metrics"],
        schema_version=hyper["feature_schema_version"],
    )


def _fingerprint(pipeline: TrainedPipeline) -> str:
    payload = json.dumps(pipeline_to_envelope(pipeline), sort_keys=True).encode()
    return hashlib.sha256(payload).hexdigest()[:16]


def save_pipeline(pipeline: TrainedPipeline, path: str | Path) -> None:
    text = json.dumps(pipeline_to_envelope(pipeline), sort_keys=True, separators=(",", ":"))
    Path(path).write_text(text, encoding="utf-8")


def load_pipeline(path: str | Path) -> TrainedPipeline:
    return pipeline_from_envelope(json.loads(Path(path).read_text(encoding="utf-8")))
