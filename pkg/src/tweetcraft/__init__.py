"""Influence prediction and crafting toolkit for commercial social-media posts.

Pipeline: ingest tweet records, score their influence from direct reactions,
separate inherent meaning from decoration via keyword grouping, label by
per-group median split, featurize the decoration (structure, style, metadata),
train classifiers from scratch, evaluate with cross-validation and ablation,
and serve predictions over HTTP for interactive post crafting.
"""

__version__ = "0.1.0"

from .corpus import (
    AccountSnapshot,
    Diagnostic,
    MentionInfo,
    SentimentLexicon,
    TweetRecord,
    WordVectorTable,
    load_corpus,
    load_sentiment_lexicon,
    load_word_vectors,
    save_corpus,
)
from .features import DECORATION_SCHEMA, FAMILIES, FeatureSchema
from .influence import GroupAssignment, LabeledExample, influence_score
from .pipeline import TrainedPipeline, load_pipeline, save_pipeline, train_pipeline
from .synth import SyntheticSpec, generate_synthetic

__all__ = [
    "AccountSnapshot",
    "DECORATION_SCHEMA",
    "Diagnostic",
    "FAMILIES",
    "FeatureSchema",
    "GroupAssignment",
    "LabeledExample",
    "MentionInfo",
    "SentimentLexicon",
    "SyntheticSpec",
    "TrainedPipeline",
    "TweetRecord",
    "WordVectorTable",
    "__version__",
    "generate_synthetic",
    "influence_score",
    "load_corpus",
    "load_pipeline",
    "load_sentiment_lexicon",
    "load_word_vectors",
    "save_corpus",
    "save_pipeline",
    "train_pipeline",
]
