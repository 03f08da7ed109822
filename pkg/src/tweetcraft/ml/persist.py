"""Model persistence: versioned JSON envelopes with base64 float64 arrays.

Saving a loaded model reproduces the file byte for byte, so envelopes can be
hashed for run manifests.
"""

from __future__ import annotations

import base64
import json
from pathlib import Path

import numpy as np

from ..textproc.parsing import ParserModel
from ..textproc.tagging import TaggerModel
from .kmeans import KMeansModel
from .lda import LdaModel
from .logreg import LogisticModel
from .standardize import Standardizer
from .svm import SvmModel

SCHEMA_VERSION = "tweetcraft-model-v1"


def encode_array(arr: np.ndarray) -> dict:
    data = np.ascontiguousarray(arr, dtype="<f8")
    return {
        "shape": list(arr.shape),
        "data": base64.b64encode(data.tobytes()).decode("ascii"),
    }


def decode_array(obj: dict, dtype=np.float64) -> np.ndarray:
    flat = np.frombuffer(base64.b64decode(obj["data"]), dtype="<f8")
    return flat.reshape(obj["shape"]).astype(dtype)


def to_envelope(model) -> dict:
    if isinstance(model, KMeansModel):
        return {
            "schema_version": SCHEMA_VERSION,
            "model_type": "kmeans",
            "hyperparameters": {
                "inertia": model.inertia,
                "iterations_run": model.iterations_run,
            },
            "arrays": {"centroids": encode_array(model.centroids)},
        }
    if isinstance(model, LdaModel):
        return {
            "schema_version": SCHEMA_VERSION,
            "model_type": "lda",
            "hyperparameters": {
                "n_topics": model.n_topics,
                "alpha": model.alpha,
                "beta": model.beta,
                "iterations": model.iterations,
                "seed": model.seed,
                "vocabulary": model.vocabulary,
            },
            "arrays": {
                "topic_word": encode_array(model.topic_word),
                "doc_topic": encode_array(model.doc_topic),
                "topic_totals": encode_array(model.topic_totals),
                "doc_lengths": encode_array(model.doc_lengths),
            },
        }
    if isinstance(model, LogisticModel):
        return {
            "schema_version": SCHEMA_VERSION,
            "model_type": "logistic",
            "hyperparameters": {"bias": model.bias, "l2_lambda": model.l2_lambda},
            "arrays": {"weights": encode_array(model.weights)},
        }
    if isinstance(model, SvmModel):
        return {
            "schema_version": SCHEMA_VERSION,
            "model_type": "svm",
            "hyperparameters": {
                "kernel": model.kernel,
                "gamma": model.gamma,
                "bias": model.bias,
                "C": model.C,
            },
            "arrays": {
                "support_vectors": encode_array(model.support_vectors),
                "dual_coef": encode_array(model.dual_coef),
            },
        }
    if isinstance(model, Standardizer):
        return {
            "schema_version": SCHEMA_VERSION,
            "model_type": "standardizer",
            "hyperparameters": {},
            "arrays": {
                "mean": encode_array(model.mean),
                "std": encode_array(model.std),
                "mask": encode_array(model.mask.astype(np.float64)),
            },
        }
    if isinstance(model, (TaggerModel, ParserModel)):
        return {
            "schema_version": SCHEMA_VERSION,
            "model_type": "tagger" if isinstance(model, TaggerModel) else "parser",
            "hyperparameters": {
                "weights": model.weights,
                "averaged": model.averaged,
                "epochs": model.epochs,
                "seed": model.seed,
            },
            "arrays": {},
        }
    raise TypeError(f"no envelope encoding for {type(model).__name__}")


def from_envelope(envelope: dict):
    if envelope.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {envelope.get('schema_version')!r}")
    model_type = envelope["model_type"]
    hyper = envelope["hyperparameters"]
    arrays = envelope["arrays"]
    if model_type == "kmeans":
        return KMeansModel(
            centroids=decode_array(arrays["centroids"]),
            inertia=hyper["inertia"],
            iterations_run=hyper["iterations_run"],
        )
    if model_type == "lda":
        return LdaModel(
            n_topics=hyper["n_topics"],
            alpha=hyper["alpha"],
            beta=hyper["beta"],
            vocabulary={k: int(v) for k, v in hyper["vocabulary"].items()},
            topic_word=decode_array(arrays["topic_word"], np.int64),
            doc_topic=decode_array(arrays["doc_topic"], np.int64),
            topic_totals=decode_array(arrays["topic_totals"], np.int64),
            doc_lengths=decode_array(arrays["doc_lengths"], np.int64),
            iterations=hyper["iterations"],
            seed=hyper["seed"],
        )
    if model_type == "logistic":
        return LogisticModel(
            weights=decode_array(arrays["weights"]),
            bias=hyper["bias"],
            l2_lambda=hyper["l2_lambda"],
        )
    if model_type == "svm":
        return SvmModel(
            kernel=hyper["kernel"],
            gamma=hyper["gamma"],
            support_vectors=decode_array(arrays["support_vectors"]),
            dual_coef=decode_array(arrays["dual_coef"]),
            bias=hyper["bias"],
            C=hyper["C"],
        )
    if model_type == "standardizer":
        return Standardizer(
            mean=decode_array(arrays["mean"]),
            std=decode_array(arrays["std"]),
            mask=decode_array(arrays["mask"]).astype(bool),
        )
    if model_type in ("tagger", "parser"):
        cls = TaggerModel if model_type == "tagger" else ParserModel
        return cls(
            weights={
                feat: {c: float(w) for c, w in table.items()}
                for feat, table in hyper["weights"].items()
            },
            averaged=hyper["averaged"],
            epochs=hyper["epochs"],
            seed=hyper["seed"],
        )
    raise ValueError(f"unknown model_type {model_type!r}")


def dumps_envelope(envelope: dict) -> str:
    return json.dumps(envelope, sort_keys=True, separators=(",", ":"))


def save_model(model, path: str | Path) -> None:
    Path(path).write_text(dumps_envelope(to_envelope(model)), encoding="utf-8")


def load_model(path: str | Path):
    return from_envelope(json.loads(Path(path).read_text(encoding="utf-8")))
