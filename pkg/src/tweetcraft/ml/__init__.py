"""Learning primitives: clustering, topic model, classifiers, preprocessing."""

from .kmeans import KMeansModel, kmeans_fit
from .lda import LdaModel, lda_doc_topics, lda_fit
from .logreg import LogisticModel, logreg_fit, logreg_loss_grad, logreg_predict_proba
from .persist import (
    SCHEMA_VERSION,
    dumps_envelope,
    from_envelope,
    load_model,
    save_model,
    to_envelope,
)
from .standardize import Standardizer, standardize_apply, standardize_fit
from .svm import SvmModel, kernel_matrix, svm_fit_smo, svm_predict

__all__ = [
    "KMeansModel",
    "LdaModel",
    "LogisticModel",
    "SCHEMA_VERSION",
    "Standardizer",
    "SvmModel",
    "dumps_envelope",
    "from_envelope",
    "kernel_matrix",
    "kmeans_fit",
    "lda_doc_topics",
    "lda_fit",
    "load_model",
    "logreg_fit",
    "logreg_loss_grad",
    "logreg_predict_proba",
    "save_model",
    "standardize_apply",
    "standardize_fit",
    "svm_fit_smo",
    "svm_predict",
    "to_envelope",
]
