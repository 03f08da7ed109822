import json
import math

import numpy as np
import pytest

from tweetcraft.ml import (
    dumps_envelope,
    from_envelope,
    kmeans_fit,
    lda_fit,
    load_model,
    logreg_fit,
    save_model,
    standardize_apply,
    standardize_fit,
    svm_fit_smo,
    to_envelope,
)
from tweetcraft.pipeline import data_path, train_nlp_models
from tweetcraft.textproc import load_annotated, train_tagger


def test_standardize_column_moments():
    X = np.array([[1.0], [2.0], [3.0]])
    s = standardize_fit(X)
    assert s.mean[0] == pytest.approx(2.0)
    assert s.std[0] == pytest.approx(math.sqrt(2.0 / 3.0))
    out = standardize_apply(s, X)
    assert out.mean() == pytest.approx(0.0, abs=1e-12)


def test_standardize_constant_column_zeroed():
    X = np.full((4, 1), 7.0)
    s = standardize_fit(X)
    assert (standardize_apply(s, X) == 0.0).all()


def test_standardize_masked_out_passthrough():
    X = np.array([[1.0, 0.0], [3.0, 1.0]])
    s = standardize_fit(X, mask=np.array([True, False]))
    out = standardize_apply(s, X)
    assert (out[:, 1] == X[:, 1]).all()
    assert out[:, 0].mean() == pytest.approx(0.0, abs=1e-12)


def roundtrip(model, tmp_path, name):
    path = tmp_path / f"{name}.json"
    save_model(model, path)
    loaded = load_model(path)
    again = tmp_path / f"{name}2.json"
    save_model(loaded, again)
    assert path.read_bytes() == again.read_bytes()
    return loaded


def test_roundtrip_bit_exact_all_model_types(tmp_path):
    rng = np.random.default_rng(0)
    X = rng.normal(size=(12, 3))
    y01 = (X[:, 0] > 0).astype(float)
    ypm = np.where(y01 == 1, 1.0, -1.0)

    kmeans = kmeans_fit(X, k=2, seed=1)
    loaded = roundtrip(kmeans, tmp_path, "kmeans")
    assert (loaded.centroids == kmeans.centroids).all()

    lda = lda_fit([["a", "b"], ["b", "c"]], n_topics=2, iterations=5, seed=2)
    loaded = roundtrip(lda, tmp_path, "lda")
    assert (loaded.topic_word == lda.topic_word).all()
    assert loaded.vocabulary == lda.vocabulary

    logreg = logreg_fit(X, y01, epochs=20)
    loaded = roundtrip(logreg, tmp_path, "logreg")
    assert (loaded.weights == logreg.weights).all()
    assert loaded.bias == logreg.bias

    svm = svm_fit_smo(X, ypm, kernel="rbf")
    loaded = roundtrip(svm, tmp_path, "svm")
    assert (loaded.support_vectors == svm.support_vectors).all()
    assert (loaded.dual_coef == svm.dual_coef).all()
    assert loaded.bias == svm.bias

    standardizer = standardize_fit(X)
    loaded = roundtrip(standardizer, tmp_path, "std")
    assert (loaded.mean == standardizer.mean).all()

    sentences = load_annotated(data_path("annotated_tweets.tsv"))[:10]
    tagger = train_tagger([(tw, tg) for tw, tg, _ in sentences], epochs=2, seed=0)
    loaded = roundtrip(tagger, tmp_path, "tagger")
    assert loaded.weights == tagger.weights


def test_envelope_shape():
    model = logreg_fit(np.array([[1.0], [-1.0]]), np.array([1.0, 0.0]), epochs=5)
    envelope = to_envelope(model)
    assert set(envelope) == {"schema_version", "model_type", "hyperparameters", "arrays"}
    parsed = json.loads(dumps_envelope(envelope))
    rebuilt = from_envelope(parsed)
    assert (rebuilt.weights == model.weights).all()


def test_unknown_schema_version_rejected():
    model = logreg_fit(np.array([[1.0], [-1.0]]), np.array([1.0, 0.0]), epochs=5)
    envelope = to_envelope(model)
    envelope["schema_version"] = "something-else"
    with pytest.raises(ValueError):
        from_envelope(envelope)


def test_nlp_models_deterministic_roundtrip(tmp_path):
    a = train_nlp_models(epochs=2, seed=3)
    b = train_nlp_models(epochs=2, seed=3)
    assert a.tagger.weights == b.tagger.weights
    assert a.parser.weights == b.parser.weights
    save_model(a.parser, tmp_path / "parser.json")
    assert load_model(tmp_path / "parser.json").weights == a.parser.weights
