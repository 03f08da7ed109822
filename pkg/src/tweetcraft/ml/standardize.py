"""Per-dimension feature standardization with a pass-through mask."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

STD_FLOOR = 1e-12


@dataclass(frozen=True)
class Standardizer:
    mean: np.ndarray
    std: np.ndarray  # already floored
    mask: np.ndarray  # True where (x - mean) / std applies


def standardize_fit(X_train: np.ndarray, mask: np.ndarray | None = None) -> Standardizer:
    """Fit means and population stds on the training split only.

    Dimensions outside ``mask`` (binary/one-hot columns) pass through
    unchanged.  Constant columns map to zero via the std floor.
    """
    X_train = np.asarray(X_train, dtype=np.float64)
    d = X_train.shape[1]
    if mask is None:
        mask = np.ones(d, dtype=bool)
    mask = np.asarray(mask, dtype=bool)
    if mask.shape != (d,):
        raise ValueError("mask length must match feature count")
    mean = X_train.mean(axis=0)
    std = np.maximum(X_train.std(axis=0), STD_FLOOR)
    return Standardizer(mean=mean, std=std, mask=mask)


def standardize_apply(standardizer: Standardizer, X: np.ndarray) -> np.ndarray:
    X = np.asarray(X, dtype=np.float64)
    out = X.copy()
    m = standardizer.mask
    out[..., m] = (X[..., m] - standardizer.mean[m]) / standardizer.std[m]
    return out
