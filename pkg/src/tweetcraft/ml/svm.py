"""Support vector machine trained with sequential minimal optimization."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

_MIN_ALPHA_STEP = 1e-5
_SV_EPS = 1e-12


def kernel_matrix(kernel: str, gamma: float | None, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Gram matrix K[i, j] = k(A[i], B[j]) for the linear or RBF kernel."""
    A = np.asarray(A, dtype=np.float64)
    B = np.asarray(B, dtype=np.float64)
    if kernel == "linear":
        return A @ B.T
    if kernel == "rbf":
        if gamma is None or gamma <= 0:
            raise ValueError("rbf kernel needs gamma > 0")
        sq = (
            (A * A).sum(axis=1)[:, None]
            + (B * B).sum(axis=1)[None, :]
            - 2.0 * (A @ B.T)
        )
        np.maximum(sq, 0.0, out=sq)
        return np.exp(-gamma * sq)
    raise ValueError(f"unknown kernel {kernel!r}")


@dataclass(frozen=True)
class SvmModel:
    kernel: str
    gamma: float | None
    support_vectors: np.ndarray
    dual_coef: np.ndarray  # alpha_i * y_i per support vector
    bias: float
    C: float
    dual_history: tuple[float, ...] = field(default=(), compare=False)

    def decision(self, X) -> np.ndarray:
        X = np.atleast_2d(np.asarray(X, dtype=np.float64))
        K = kernel_matrix(self.kernel, self.gamma, X, self.support_vectors)
        return K @ self.dual_coef + self.bias


def svm_predict(model: SvmModel, x) -> tuple[np.ndarray, np.ndarray]:
    """(labels in {-1, +1}, margins); zero margin counts as +1."""
    margins = model.decision(x)
    labels = np.where(margins >= 0.0, 1.0, -1.0)
    return labels, margins


def _dual_objective(alphas: np.ndarray, y: np.ndarray, K: np.ndarray) -> float:
    coef = alphas * y
    return float(alphas.sum() - 0.5 * coef @ K @ coef)


def svm_fit_smo(
    X: np.ndarray,
    y: np.ndarray,
    C: float = 1.0,
    kernel: str = "rbf",
    gamma: float | None = None,
    tol: float = 1e-3,
    max_passes: int = 100,
    seed: int = 0,
    track_objective: bool = False,
) -> SvmModel:
    """SMO over the dual problem; deterministic under a fixed seed.

    Full sweeps over all examples; a pair update is attempted for every KKT
    violation beyond ``tol``.  The second index is the maximal
    |E_i - E_j| candidate with one seeded-random fallback.  Training stops
    when a full pass makes no updates, or after ``max_passes`` sweeps.
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    n = len(X)
    if n < 2:
        raise ValueError("need at least two training points")
    if set(np.unique(y)) != {-1.0, 1.0}:
        raise ValueError("labels must contain both -1 and +1")
    if C <= 0:
        raise ValueError("C must be positive")
    if kernel == "rbf" and gamma is None:
        gamma = 1.0 / X.shape[1]

    K = kernel_matrix(kernel, gamma, X, X)
    alphas = np.zeros(n, dtype=np.float64)
    b = 0.0
    f = np.zeros(n, dtype=np.float64)  # current decision values, kept incrementally
    rng = np.random.default_rng(seed)
    history: list[float] = []

    def try_pair(i: int, j: int) -> bool:
        nonlocal b, f
        if i == j:
            return False
        Ei = f[i] - y[i]
        Ej = f[j] - y[j]
        ai_old, aj_old = alphas[i], alphas[j]
        if y[i] != y[j]:
            L, H = max(0.0, aj_old - ai_old), min(C, C + aj_old - ai_old)
        else:
            L, H = max(0.0, ai_old + aj_old - C), min(C, ai_old + aj_old)
        if L >= H:
            return False
        eta = 2.0 * K[i, j] - K[i, i] - K[j, j]
        if eta >= 0:
            return False
        aj = aj_old - y[j] * (Ei - Ej) / eta
        aj = min(H, max(L, aj))
        if abs(aj - aj_old) < _MIN_ALPHA_STEP:
            return False
        ai = ai_old + y[i] * y[j] * (aj_old - aj)
        alphas[i], alphas[j] = ai, aj

        b1 = b - Ei - y[i] * (ai - ai_old) * K[i, i] - y[j] * (aj - aj_old) * K[i, j]
        b2 = b - Ej - y[i] * (ai - ai_old) * K[i, j] - y[j] * (aj - aj_old) * K[j, j]
        if 0.0 < ai < C:
            new_b = b1
        elif 0.0 < aj < C:
            new_b = b2
        else:
            new_b = (b1 + b2) / 2.0
        delta_b = new_b - b
        b = new_b
        f += y[i] * (ai - ai_old) * K[:, i] + y[j] * (aj - aj_old) * K[:, j] + delta_b
        if track_objective:
            history.append(_dual_objective(alphas, y, K))
        return True

    for _ in range(max_passes):
        changed = 0
        for i in range(n):
            Ei = f[i] - y[i]
            r = y[i] * Ei
            if not ((r < -tol and alphas[i] < C) or (r > tol and alphas[i] > 0)):
                continue
            diff = np.abs(Ei - (f - y))
            diff[i] = -1.0
            j = int(np.argmax(diff))
            if try_pair(i, j):
                changed += 1
                continue
            # Fall back to scanning every partner from a seeded offset.
            start = int(rng.integers(n))
            for step in range(n):
                j = (start + step) % n
                if try_pair(i, j):
                    changed += 1
                    break
        if changed == 0:
            break

    sv = alphas > _SV_EPS
    if not np.any(sv):
        raise RuntimeError("SMO produced no support vectors")
    return SvmModel(
        kernel=kernel,
        gamma=gamma,
        support_vectors=X[sv].copy(),
        dual_coef=(alphas * y)[sv].copy(),
        bias=b,
        C=C,
        dual_history=tuple(history),
    )
