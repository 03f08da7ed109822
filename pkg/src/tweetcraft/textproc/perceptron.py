"""Averaged perceptron over string features, shared by the tagger and parser."""

from __future__ import annotations


class AveragedPerceptron:
    """Multi-class perceptron with lazily-accumulated weight averaging.

    One call to :meth:`observe` is one step.  The averaged weights equal the
    mean of the weight-table snapshots taken after every step; updates are
    +/-1 so the accumulators stay exact in float64.
    """

    def __init__(self) -> None:
        self.weights: dict[str, dict[str, float]] = {}
        self._totals: dict[str, dict[str, float]] = {}
        self._tstamps: dict[str, dict[str, int]] = {}
        self.steps = 0

    def scores(self, features: list[str], classes: list[str]) -> dict[str, float]:
        scores = dict.fromkeys(classes, 0.0)
        for feat in features:
            table = self.weights.get(feat)
            if table is None:
                continue
            for cls, weight in table.items():
                if cls in scores:
                    scores[cls] += weight
        return scores

    def predict(self, features: list[str], classes: list[str]) -> str:
        """Highest-scoring class; ties break to the lexicographically first."""
        scores = self.scores(features, classes)
        return max(sorted(classes), key=scores.__getitem__)

    def observe(self, features: list[str], truth: str, classes: list[str]) -> str:
        """Predict, update on a miss, and advance the averaging clock."""
        self.steps += 1
        guess = self.predict(features, classes)
        if guess != truth:
            for feat in features:
                self._bump(feat, truth, 1.0)
                self._bump(feat, guess, -1.0)
        return guess

    def _bump(self, feat: str, cls: str, delta: float) -> None:
        table = self.weights.setdefault(feat, {})
        totals = self._totals.setdefault(feat, {})
        tstamps = self._tstamps.setdefault(feat, {})
        current = table.get(cls, 0.0)
        totals[cls] = totals.get(cls, 0.0) + (self.steps - tstamps.get(cls, 0)) * current
        table[cls] = current + delta
        tstamps[cls] = self.steps

    def averaged_weights(self) -> dict[str, dict[str, float]]:
        """Mean of per-step weight snapshots; zero-mean entries are dropped."""
        if self.steps == 0:
            return {}
        averaged: dict[str, dict[str, float]] = {}
        for feat, table in self.weights.items():
            out = {}
            for cls, weight in table.items():
                total = self._totals[feat].get(cls, 0.0)
                total += (self.steps + 1 - self._tstamps[feat].get(cls, 0)) * weight
                mean = total / self.steps
                if mean != 0.0:
                    out[cls] = mean
            if out:
                averaged[feat] = out
        return averaged


def score_with(weights: dict[str, dict[str, float]], features: list[str],
               classes: list[str]) -> dict[str, float]:
    """Score classes under a frozen (averaged) weight table."""
    scores = dict.fromkeys(classes, 0.0)
    for feat in features:
        table = weights.get(feat)
        if table is None:
            continue
        for cls, weight in table.items():
            if cls in scores:
                scores[cls] += weight
    return scores


def predict_with(weights: dict[str, dict[str, float]], features: list[str],
                 classes: list[str]) -> str:
    scores = score_with(weights, features, classes)
    return max(sorted(classes), key=scores.__getitem__)
