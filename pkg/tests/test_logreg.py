import numpy as np
import pytest
from scipy import sparse

from tweetcraft.ml.logreg import (
    LogisticModel,
    logreg_fit,
    logreg_loss_grad,
    logreg_predict_proba,
)


def test_zero_model_predicts_half():
    model = LogisticModel(weights=np.zeros(4), bias=0.0, l2_lambda=0.0)
    assert logreg_predict_proba(model, np.array([3.0, -1.0, 0.5, 2.0])) == pytest.approx(0.5)


def test_separable_1d_perfect_training_accuracy():
    X = np.array([[-3.0], [-2.0], [-1.0], [1.0], [2.0], [3.0]])
    y = np.array([0, 0, 0, 1, 1, 1])
    model = logreg_fit(X, y, l2_lambda=0.0, lr=0.5, epochs=500)
    proba = logreg_predict_proba(model, X)
    assert (((proba >= 0.5).astype(int)) == y).all()


def test_gradient_matches_central_finite_differences():
    # Oracle: central differences of the loss with h = 1e-5.
    rng = np.random.default_rng(0)
    X = rng.normal(size=(5, 4))
    y = rng.integers(0, 2, size=5).astype(float)
    w = rng.normal(size=4)
    b = 0.3
    l2 = 0.1
    h = 1e-5

    _, grad_w, grad_b = logreg_loss_grad(w, b, X, y, l2)
    numeric_w = np.zeros_like(w)
    for i in range(len(w)):
        up, down = w.copy(), w.copy()
        up[i] += h
        down[i] -= h
        loss_up, _, _ = logreg_loss_grad(up, b, X, y, l2)
        loss_down, _, _ = logreg_loss_grad(down, b, X, y, l2)
        numeric_w[i] = (loss_up - loss_down) / (2 * h)
    loss_up, _, _ = logreg_loss_grad(w, b + h, X, y, l2)
    loss_down, _, _ = logreg_loss_grad(w, b - h, X, y, l2)
    numeric_b = (loss_up - loss_down) / (2 * h)

    rel_w = np.abs(grad_w - numeric_w) / np.maximum(np.abs(numeric_w), 1e-12)
    assert rel_w.max() < 1e-5
    assert abs(grad_b - numeric_b) / max(abs(numeric_b), 1e-12) < 1e-5


def test_loss_decreases_monotonically_with_small_lr():
    rng = np.random.default_rng(1)
    X = rng.normal(size=(40, 3))
    y = (X @ np.array([1.0, -2.0, 0.5]) > 0).astype(float)
    model = logreg_fit(X, y, l2_lambda=1e-3, lr=0.05, epochs=200)
    losses = np.array(model.loss_history)
    assert (np.diff(losses) <= 1e-12).all()


def test_sparse_input_equivalent_to_dense():
    rng = np.random.default_rng(2)
    X = (rng.random((30, 6)) < 0.3).astype(float)
    y = rng.integers(0, 2, size=30).astype(float)
    dense = logreg_fit(X, y, l2_lambda=1e-4, lr=0.3, epochs=50)
    sp = logreg_fit(sparse.csr_matrix(X), y, l2_lambda=1e-4, lr=0.3, epochs=50)
    assert dense.weights == pytest.approx(sp.weights, abs=1e-12)
    assert dense.bias == pytest.approx(sp.bias, abs=1e-12)


def test_divergence_aborts_with_diagnostic():
    X = np.array([[1e200], [-1e200]])
    y = np.array([1.0, 0.0])
    with np.errstate(all="ignore"), pytest.raises(FloatingPointError, match="learning rate"):
        logreg_fit(X, y, l2_lambda=0.0, lr=1e9, epochs=50)


def test_rejects_bad_labels():
    with pytest.raises(ValueError):
        logreg_fit(np.zeros((2, 1)), np.array([1.0, 2.0]))
