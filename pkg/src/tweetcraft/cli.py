"""Command-line driver for reproducible experiments.

Every subcommand writes its artifacts into a run directory together with a
``manifest.json`` recording the resolved config, seed, package version and
content hashes of inputs and outputs.  Manifests contain no timestamps, so a
re-run with the same config and seed is byte-identical.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

import numpy as np

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from . import __version__
from .corpus import load_corpus, load_sentiment_lexicon, load_word_vectors, save_corpus
from .evaluation import (
    ExperimentConfig,
    ablate,
    build_labeled_dataset,
    corpus_stats,
    cross_validate,
)
from .features import FAMILIES, decoration_csv
from .influence import (
    ExampleSet,
    LabeledExample,
    STAGE_LABELED,
    assign_labels,
    attach_groups,
    export_labels_csv,
    group_tweets,
    remove_outliers,
    score_corpus,
)
from .ml.persist import save_model
from .pipeline import (
    NlpModels,
    annotate_corpus,
    data_path,
    load_pipeline,
    save_pipeline,
    train_nlp_models,
    train_pipeline,
)
from .synth import SUPPORTED_FAMILIES, SyntheticSpec, generate_synthetic, gold_csv

GROUP_METHOD_FLAGS = {"binary": "sim_binary", "emb": "sim_emb", "topic": "topic"}


class CliError(ValueError):
    """Validation problem: wrong flags, missing files, bad inputs (exit 1)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


_DEFAULTS = {
    "seed": None,
    "corpus": None,
    "lexicon": None,
    "vectors": None,
    "annotated": None,
    "labels": None,
    "model_path": None,
    "out": None,
    "group_method": "emb",
    "k": 5,
    "model": "svm-rbf",
    "features": list(FAMILIES),
    "serve_addr": "127.0.0.1:8000",
    "static_dir": None,
    "n": 2000,
    "noise": 0.1,
    "signal_families": list(SUPPORTED_FAMILIES),
    "nlp_epochs": 5,
    "log_level": "info",
}


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--config", help="TOML config file; flags override its values")
    common.add_argument("--seed", type=int)
    common.add_argument("--corpus")
    common.add_argument("--lexicon")
    common.add_argument("--vectors")
    common.add_argument("--annotated")
    common.add_argument("--labels", help="labels.csv produced by the label subcommand")
    common.add_argument("--model-path", dest="model_path")
    common.add_argument("--out", help="run directory for artifacts and manifest")
    common.add_argument("--group-method", dest="group_method", choices=sorted(GROUP_METHOD_FLAGS))
    common.add_argument("--k", type=int, choices=(2, 3, 5, 7))
    common.add_argument("--model", choices=("maxent", "svm-linear", "svm-rbf"))
    common.add_argument("--features", help="comma-separated feature families to keep")
    common.add_argument("--serve-addr", dest="serve_addr")
    common.add_argument("--static-dir", dest="static_dir")
    common.add_argument("--n", type=int, help="synthetic corpus size")
    common.add_argument("--noise", type=float, help="synthetic label-noise rate")
    common.add_argument("--log-level", dest="log_level")

    parser = _Parser(prog="tweetcraft", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, help_text in [
        ("ingest", "validate and normalize a JSONL corpus"),
        ("stats", "corpus statistics: reaction ratios and token lengths"),
        ("train-nlp", "train the tagger and parser from annotated data"),
        ("label", "score, group, filter and label a corpus"),
        ("train", "train a prediction pipeline from a labeled corpus"),
        ("eval", "cross-validated metrics for the configured model"),
        ("ablate", "per-family ablation report"),
        ("predict", "offline predictions for a corpus"),
        ("synth", "generate a planted-signal synthetic corpus"),
        ("serve", "run the HTTP prediction service"),
    ]:
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def resolve_config(args: argparse.Namespace) -> dict:
    config = dict(_DEFAULTS)
    if args.config:
        path = Path(args.config)
        if not path.exists():
            raise CliError(f"config file not found: {path}")
        config.update(tomllib.loads(path.read_text(encoding="utf-8")))
    for key in _DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            config[key] = value
    if isinstance(config["features"], str):
        config["features"] = [f.strip() for f in config["features"].split(",") if f.strip()]
    unknown = set(config["features"]) - set(FAMILIES)
    if unknown:
        raise CliError(f"unknown feature families: {sorted(unknown)}")
    if config["seed"] is None:
        raise CliError("a seed is required (--seed or config)")
    if config["group_method"] in GROUP_METHOD_FLAGS:
        config["group_method"] = GROUP_METHOD_FLAGS[config["group_method"]]
    return config


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


class RunDir:
    """Collects artifacts plus their hashes and finalizes the manifest."""

    def __init__(self, out: str | None, command: str, config: dict):
        if not out:
            raise CliError("--out run directory is required")
        self.path = Path(out)
        self.path.mkdir(parents=True, exist_ok=True)
        self.command = command
        self.config = config
        self.inputs: dict[str, str] = {}
        self.outputs: dict[str, str] = {}

    def note_input(self, path: str | Path | None) -> None:
        if path and Path(path).is_file():
            self.inputs[str(path)] = _sha256(Path(path))

    def write_text(self, name: str, text: str) -> Path:
        target = self.path / name
        target.write_text(text, encoding="utf-8")
        self.outputs[name] = _sha256(target)
        return target

    def add_output(self, name: str) -> None:
        self.outputs[name] = _sha256(self.path / name)

    def finish(self) -> Path:
        manifest = {
            "command": self.command,
            "config": {k: self.config[k] for k in sorted(self.config)},
            "seed": self.config["seed"],
            "version": __version__,
            "input_hashes": self.inputs,
            "output_hashes": dict(sorted(self.outputs.items())),
        }
        target = self.path / "manifest.json"
        target.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n",
                          encoding="utf-8")
        return target


def _require(config: dict, key: str) -> str:
    value = config.get(key)
    if not value:
        raise CliError(f"--{key.replace('_', '-')} is required for this command")
    if not Path(value).exists():
        raise CliError(f"{key} path does not exist: {value}")
    return value


def _load_corpus_checked(config: dict, run: RunDir):
    path = _require(config, "corpus")
    run.note_input(path)
    records, diagnostics = load_corpus(path)
    if not records:
        raise CliError(f"no valid records in {path}")
    return records, diagnostics


def _nlp_models(config: dict) -> NlpModels:
    if config.get("annotated"):
        return train_nlp_models(epochs=config["nlp_epochs"], seed=config["seed"],
                                annotated_path=_require(config, "annotated"))
    return train_nlp_models(epochs=config["nlp_epochs"], seed=13)


def _lexicon(config: dict):
    if config.get("lexicon"):
        lexicon, _ = load_sentiment_lexicon(_require(config, "lexicon"))
        return lexicon
    lexicon, _ = load_sentiment_lexicon(data_path("sentiment_lexicon.tsv"))
    return lexicon


def _vectors(config: dict):
    if config.get("vectors"):
        table, _ = load_word_vectors(_require(config, "vectors"))
        return table
    table, _ = load_word_vectors(data_path("word_vectors.txt"))
    return table


def _labels_from_csv(path: str | Path) -> tuple[dict[str, str], dict[str, int]]:
    labels: dict[str, str] = {}
    groups: dict[str, int] = {}
    lines = Path(path).read_text(encoding="utf-8").strip().split("\n")
    if lines[0] != "id,group,score,retained,label":
        raise CliError(f"unexpected labels header in {path}")
    for line in lines[1:]:
        tweet_id, group, _score, _retained, label = line.split(",")
        if label:
            labels[tweet_id] = label
            groups[tweet_id] = int(group)
    if not labels:
        raise CliError(f"no labeled rows in {path}")
    return labels, groups


def cmd_ingest(config: dict) -> int:
    run = RunDir(config["out"], "ingest", config)
    records, diagnostics = _load_corpus_checked(config, run)
    save_corpus(run.path / "corpus.jsonl", records)
    run.add_output("corpus.jsonl")
    run.write_text("diagnostics.txt", "".join(f"{d}\n" for d in diagnostics))
    run.finish()
    print(f"ingested {len(records)} records, {len(diagnostics)} diagnostics")
    return 0


def cmd_stats(config: dict) -> int:
    run = RunDir(config["out"], "stats", config)
    records, _ = _load_corpus_checked(config, run)
    stats = corpus_stats(records)
    run.write_text("stats.csv", stats.to_csv())
    run.finish()
    print(stats.to_table())
    return 0


def cmd_train_nlp(config: dict) -> int:
    run = RunDir(config["out"], "train-nlp", config)
    annotated = config.get("annotated") or str(data_path("annotated_tweets.tsv"))
    run.note_input(annotated)
    nlp = train_nlp_models(epochs=config["nlp_epochs"], seed=config["seed"],
                           annotated_path=annotated)
    save_model(nlp.tagger, run.path / "tagger.json")
    save_model(nlp.parser, run.path / "parser.json")
    run.add_output("tagger.json")
    run.add_output("parser.json")
    run.finish()
    print(f"trained tagger ({len(nlp.tagger.weights)} features) "
          f"and parser ({len(nlp.parser.weights)} features)")
    return 0


def _label_pipeline(config: dict, records, run: RunDir) -> ExampleSet:
    provisional = [r.id for r in records if not r.is_final]
    if provisional:
        raise CliError(
            f"{len(provisional)} record(s) are provisional (collected less than 21 "
            f"days after posting) and cannot be labeled; first: {provisional[0]}"
        )
    nlp = _nlp_models(config)
    annotations = annotate_corpus(nlp, records)
    keywords = [(r.id, a.keywords) for r, a in zip(records, annotations)]
    vectors = _vectors(config) if config["group_method"] == "sim_emb" else None
    assignment = group_tweets(keywords, method=config["group_method"], k=config["k"],
                              seed=config["seed"], vectors=vectors)
    example_set = score_corpus(records)
    example_set = attach_groups(example_set, assignment)
    example_set = remove_outliers(example_set)
    example_set, diagnostics = assign_labels(example_set)
    for diagnostic in diagnostics:
        print(f"note: {diagnostic}", file=sys.stderr)
    return example_set


def cmd_label(config: dict) -> int:
    run = RunDir(config["out"], "label", config)
    records, _ = _load_corpus_checked(config, run)
    example_set = _label_pipeline(config, records, run)
    run.write_text("labels.csv", export_labels_csv(example_set))
    run.finish()
    labeled = sum(1 for ex in example_set.examples if ex.label is not None)
    print(f"labeled {labeled} of {len(example_set.examples)} records")
    return 0


def cmd_train(config: dict) -> int:
    run = RunDir(config["out"], "train", config)
    records, _ = _load_corpus_checked(config, run)
    labels_path = _require(config, "labels")
    run.note_input(labels_path)
    labels, _groups = _labels_from_csv(labels_path)
    pipeline = train_pipeline(
        records,
        labels,
        _nlp_models(config),
        _lexicon(config),
        classifier_kind=config["model"],
        include_families=tuple(config["features"]),
        seed=config["seed"],
    )
    save_pipeline(pipeline, run.path / "model.json")
    run.add_output("model.json")
    run.finish()
    print(f"trained {pipeline.classifier_kind} pipeline {pipeline.model_id} "
          f"(train F1 {pipeline.metrics['train_f1']:.4f})")
    return 0


def _dataset_from_labels(config: dict, records, run: RunDir):
    labels_path = _require(config, "labels")
    run.note_input(labels_path)
    labels, groups = _labels_from_csv(labels_path)
    nlp = _nlp_models(config)
    annotations = annotate_corpus(nlp, records)
    examples = tuple(
        LabeledExample(
            tweet_id=r.id,
            score=0.0,
            group=groups.get(r.id),
            retained=r.id in labels,
            label=labels.get(r.id),
        )
        for r in records
    )
    example_set = ExampleSet(examples, STAGE_LABELED)
    vectors = _vectors(config)
    return build_labeled_dataset(records, example_set, annotations, _lexicon(config), vectors)


def _experiment_config(config: dict, representation: str) -> ExperimentConfig:
    classifier = config["model"] if representation == "decoration" else (
        "maxent" if representation == "ngram" else config["model"]
    )
    return ExperimentConfig(
        representation=representation,
        classifier=classifier,
        include_families=tuple(config["features"]),
        seed=config["seed"],
    )


def cmd_eval(config: dict) -> int:
    run = RunDir(config["out"], "eval", config)
    records, _ = _load_corpus_checked(config, run)
    dataset = _dataset_from_labels(config, records, run)
    lines = ["representation,classifier,precision,recall,f1"]
    for representation in ("decoration", "ngram", "embedding"):
        experiment = _experiment_config(config, representation)
        result = cross_validate(experiment, dataset)
        lines.append(
            f"{representation},{experiment.classifier},"
            f"{result.precision:.4f},{result.recall:.4f},{result.f1:.4f}"
        )
        print(lines[-1])
    run.write_text("eval.csv", "\n".join(lines) + "\n")
    run.finish()
    return 0


def cmd_ablate(config: dict) -> int:
    run = RunDir(config["out"], "ablate", config)
    records, _ = _load_corpus_checked(config, run)
    dataset = _dataset_from_labels(config, records, run)
    report = ablate(_experiment_config(config, "decoration"), dataset)
    run.write_text("ablation.csv", report.to_csv())
    run.finish()
    print(f"full model F1 {report.full.f1:.4f}")
    for row in report.rows:
        print(f"  -{row.family:<14} dF1 {row.delta_f1:+.4f}")
    return 0


def cmd_predict(config: dict) -> int:
    run = RunDir(config["out"], "predict", config)
    records, _ = _load_corpus_checked(config, run)
    model_path = _require(config, "model_path")
    run.note_input(model_path)
    pipeline = load_pipeline(model_path)
    lines = ["id,label,score"]
    vectors = []
    for record in records:
        label, score, raw = pipeline.predict_record(record)
        lines.append(f"{record.id},{label},{score!r}")
        vectors.append(raw)
    run.write_text("predictions.csv", "\n".join(lines) + "\n")
    run.write_text("features.csv", decoration_csv(np.stack(vectors)))
    run.finish()
    print(f"predicted {len(records)} records with model {pipeline.model_id}")
    return 0


def cmd_synth(config: dict) -> int:
    run = RunDir(config["out"], "synth", config)
    spec = SyntheticSpec(
        n=config["n"],
        noise_rate=config["noise"],
        signal_families=tuple(config["signal_families"]),
    )
    records, gold = generate_synthetic(spec, seed=config["seed"])
    save_corpus(run.path / "corpus.jsonl", records)
    run.add_output("corpus.jsonl")
    run.write_text("gold.csv", gold_csv(gold, spec.signal_families))
    run.finish()
    print(f"wrote {len(records)} synthetic records to {run.path / 'corpus.jsonl'}")
    return 0


def cmd_serve(config: dict) -> int:
    import os

    from .service import serve

    # Environment variables back the flags for containerized deployments.
    config.setdefault("model_path", None)
    config["model_path"] = config["model_path"] or os.environ.get("TWEETCRAFT_MODEL")
    addr = os.environ.get("TWEETCRAFT_ADDR")
    if addr and config["serve_addr"] == _DEFAULTS["serve_addr"]:
        config["serve_addr"] = addr
    config["log_level"] = os.environ.get("TWEETCRAFT_LOG_LEVEL", config["log_level"])
    model_path = _require(config, "model_path")
    host, _, port = config["serve_addr"].partition(":")
    serve(model_path, host=host or "127.0.0.1", port=int(port or 8000),
          static_dir=config.get("static_dir"), log_level=config["log_level"])
    return 0


_COMMANDS = {
    "ingest": cmd_ingest,
    "stats": cmd_stats,
    "train-nlp": cmd_train_nlp,
    "label": cmd_label,
    "train": cmd_train,
    "eval": cmd_eval,
    "ablate": cmd_ablate,
    "predict": cmd_predict,
    "synth": cmd_synth,
    "serve": cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = resolve_config(args)
        return _COMMANDS[args.command](config)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # runtime failure
        print(f"runtime failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
