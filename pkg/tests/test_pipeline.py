import numpy as np
import pytest

from tweetcraft.features import DECORATION_SCHEMA
from tweetcraft.influence import NEGATIVE, POSITIVE
from tweetcraft.pipeline import (
    annotate,
    load_default_lexicon,
    load_default_vectors,
    load_pipeline,
    save_pipeline,
    train_nlp_models,
    train_pipeline,
)
from tweetcraft.synth import SyntheticSpec, generate_synthetic

from .conftest import make_record


@pytest.fixture(scope="module")
def small_pipeline():
    records, gold = generate_synthetic(SyntheticSpec(n=200, noise_rate=0.0), seed=21)
    labels = {g.tweet_id: g.label for g in gold}
    nlp = train_nlp_models()
    return train_pipeline(records, labels, nlp, load_default_lexicon(),
                          classifier_kind="svm-rbf", seed=21), records, labels


def test_bundled_lexicon_and_vectors_load():
    lexicon = load_default_lexicon()
    vectors = load_default_vectors()
    assert len(lexicon) > 20
    assert vectors.dimension == 12
    assert "coffee" in vectors


def test_pipeline_learns_planted_labels(small_pipeline):
    pipeline, records, labels = small_pipeline
    agree = sum(
        1 for r in records if pipeline.predict_record(r)[0] == labels[r.id]
    )
    assert agree / len(records) >= 0.95


def test_pipeline_scores_in_unit_interval(small_pipeline):
    pipeline, records, _ = small_pipeline
    for record in records[:50]:
        _, score, raw = pipeline.predict_record(record)
        assert 0.0 <= score <= 1.0
        assert raw.shape == (len(DECORATION_SCHEMA),)


def test_pipeline_save_load_roundtrip_bit_exact(tmp_path, small_pipeline):
    pipeline, records, _ = small_pipeline
    path_a = tmp_path / "model.json"
    save_pipeline(pipeline, path_a)
    loaded = load_pipeline(path_a)
    path_b = tmp_path / "model2.json"
    save_pipeline(loaded, path_b)
    assert path_a.read_bytes() == path_b.read_bytes()
    for record in records[:20]:
        label_a, score_a, raw_a = pipeline.predict_record(record)
        label_b, score_b, raw_b = loaded.predict_record(record)
        assert (label_a, score_a) == (label_b, score_b)
        assert (raw_a == raw_b).all()


def test_excluded_families_zeroed(small_pipeline):
    _, records, labels = small_pipeline
    nlp = train_nlp_models()
    families = ("punctuation", "mentions", "complexity")
    pipeline = train_pipeline(records, labels, nlp, load_default_lexicon(),
                              classifier_kind="maxent", include_families=families,
                              seed=3)
    vec = pipeline.features_for(records[0])
    excluded = ~np.zeros(len(DECORATION_SCHEMA), dtype=bool)
    for family in families:
        excluded &= ~DECORATION_SCHEMA.family_mask(family)
    assert (vec[excluded] == 0.0).all()


def test_predictions_deterministic(small_pipeline):
    pipeline, records, _ = small_pipeline
    record = records[0]
    label_a, score_a, raw_a = pipeline.predict_record(record)
    label_b, score_b, raw_b = pipeline.predict_record(record)
    assert (label_a, score_a) == (label_b, score_b)
    assert (raw_a == raw_b).all()


def test_annotation_keywords(small_pipeline):
    pipeline, _, _ = small_pipeline
    annotation = annotate(pipeline.nlp, "fresh coffee and a sweet treat @brandup!")
    assert "coffee" in annotation.keywords
    assert all(not kw.startswith("@") for kw in annotation.keywords)


def test_labels_are_the_two_expected_values(small_pipeline):
    pipeline, records, _ = small_pipeline
    seen = {pipeline.predict_record(r)[0] for r in records[:80]}
    assert seen <= {POSITIVE, NEGATIVE}
    assert len(seen) == 2


def test_train_requires_labeled_records():
    with pytest.raises(ValueError):
        train_pipeline([make_record()], {}, train_nlp_models(), load_default_lexicon())
