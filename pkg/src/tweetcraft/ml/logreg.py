"""L2-regularized logistic regression (maximum entropy) via batch gradient descent."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import sparse


@dataclass(frozen=True)
class LogisticModel:
    weights: np.ndarray
    bias: float
    l2_lambda: float
    loss_history: tuple[float, ...] = field(default=(), compare=False)


def _sigmoid(z: np.ndarray) -> np.ndarray:
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def _margins(X, weights: np.ndarray, bias: float) -> np.ndarray:
    if sparse.issparse(X):
        return np.asarray(X @ weights).ravel() + bias
    return np.asarray(X, dtype=np.float64) @ weights + bias


def logreg_loss_grad(
    weights: np.ndarray, bias: float, X, y: np.ndarray, l2_lambda: float
) -> tuple[float, np.ndarray, float]:
    """Mean negative log-likelihood plus (l2/2)*||w||^2; bias unregularized.

    Returns (loss, grad_weights, grad_bias); kept separate from the fitting
    loop so the gradient can be checked against finite differences.
    """
    n = X.shape[0]
    z = _margins(X, weights, bias)
    # log(1 + e^z) - y*z, computed stably
    loss = float(np.mean(np.logaddexp(0.0, z) - y * z))
    loss += 0.5 * l2_lambda * float(weights @ weights)
    residual = _sigmoid(z) - y
    if sparse.issparse(X):
        grad_w = np.asarray(X.T @ residual).ravel() / n
    else:
        grad_w = np.asarray(X, dtype=np.float64).T @ residual / n
    grad_w += l2_lambda * weights
    grad_b = float(residual.mean())
    return loss, grad_w, grad_b


def logreg_fit(
    X,
    y: np.ndarray,
    l2_lambda: float = 1e-4,
    lr: float = 0.5,
    epochs: int = 300,
) -> LogisticModel:
    """Full-batch gradient descent; aborts if the loss goes non-finite."""
    y = np.asarray(y, dtype=np.float64)
    if set(np.unique(y)) - {0.0, 1.0}:
        raise ValueError("labels must be in {0, 1}")
    weights = np.zeros(X.shape[1], dtype=np.float64)
    bias = 0.0
    history = []
    for epoch in range(epochs):
        loss, grad_w, grad_b = logreg_loss_grad(weights, bias, X, y, l2_lambda)
        if not np.isfinite(loss):
            raise FloatingPointError(
                f"non-finite loss at epoch {epoch}; lower the learning rate (lr={lr})"
            )
        history.append(loss)
        weights -= lr * grad_w
        bias -= lr * grad_b
    return LogisticModel(weights=weights, bias=bias, l2_lambda=l2_lambda,
                         loss_history=tuple(history))


def logreg_predict_proba(model: LogisticModel, x) -> float | np.ndarray:
    """P(y=1 | x); accepts a single row or a (sparse or dense) matrix."""
    if sparse.issparse(x) or np.asarray(x).ndim == 2:
        return _sigmoid(_margins(x, model.weights, model.bias))
    z = float(np.asarray(x, dtype=np.float64) @ model.weights + model.bias)
    return float(_sigmoid(np.array([z]))[0])
