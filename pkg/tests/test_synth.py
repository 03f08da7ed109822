import numpy as np
import pytest

from tweetcraft.corpus import save_corpus
from tweetcraft.influence import (
    GroupAssignment,
    assign_labels,
    attach_groups,
    remove_outliers,
    score_corpus,
)
from tweetcraft.synth import (
    GoldExample,
    SyntheticSpec,
    generate_synthetic,
    gold_csv,
    rule_label,
)
from tweetcraft.textproc import tokenize


def test_depth_one_rule_recovers_labels_without_noise():
    # Hand-written rule classifier: majority of planted markers.
    spec = SyntheticSpec(n=100, noise_rate=0.0)
    records, gold = generate_synthetic(spec, seed=1)
    assert len(records) == 100
    for g in gold:
        assert g.label == rule_label(g.markers)
        assert g.score_flipped is False


def test_pipeline_labels_match_gold_without_noise():
    # With zero noise and gold topics as groups, the median split must
    # reproduce the planted labels exactly.
    spec = SyntheticSpec(n=120, noise_rate=0.0)
    records, gold = generate_synthetic(spec, seed=2)
    assignment = GroupAssignment(
        assignments={g.tweet_id: g.topic for g in gold}, method="sim_binary", k=3
    )
    example_set = score_corpus(records)
    example_set = attach_groups(example_set, assignment)
    example_set = remove_outliers(example_set)
    example_set, diags = assign_labels(example_set)
    assert diags == []
    produced = {ex.tweet_id: ex.label for ex in example_set.examples}
    for g in gold:
        assert produced[g.tweet_id] == g.label


def test_same_seed_identical_corpus_bytes(tmp_path):
    spec = SyntheticSpec(n=50, noise_rate=0.2)
    records_a, _ = generate_synthetic(spec, seed=9)
    records_b, _ = generate_synthetic(spec, seed=9)
    path_a, path_b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    save_corpus(path_a, records_a)
    save_corpus(path_b, records_b)
    assert path_a.read_bytes() == path_b.read_bytes()
    records_c, _ = generate_synthetic(spec, seed=10)
    save_corpus(tmp_path / "c.jsonl", records_c)
    assert path_a.read_bytes() != (tmp_path / "c.jsonl").read_bytes()


def test_token_length_mean_matches_spec():
    spec = SyntheticSpec(n=5000, noise_rate=0.1)
    records, _ = generate_synthetic(spec, seed=3)
    lengths = [len(tokenize(r.text).tokens) for r in records]
    assert abs(np.mean(lengths) - 15.2) < 0.5


def test_markers_materialize_in_record():
    spec = SyntheticSpec(n=200, noise_rate=0.0)
    records, gold = generate_synthetic(spec, seed=4)
    for record, g in zip(records, gold):
        assert ("!" in record.text) == g.markers["punctuation"]
        assert record.mentions_meta[0].verified == g.markers["mentions"]
        if g.markers["mentions"]:
            assert record.mentions_meta[0].follower_count >= 200_000
        else:
            assert record.mentions_meta[0].follower_count < 200


def test_invalid_specs_rejected():
    with pytest.raises(ValueError):
        SyntheticSpec(n=10, noise_rate=0.5).validate()
    with pytest.raises(ValueError):
        SyntheticSpec(n=10, signal_families=("nonsense",)).validate()
    with pytest.raises(ValueError):
        SyntheticSpec(n=0).validate()


def test_single_family_signal():
    spec = SyntheticSpec(n=40, noise_rate=0.0, signal_families=("punctuation",))
    records, gold = generate_synthetic(spec, seed=5)
    for record, g in zip(records, gold):
        assert g.label == rule_label(g.markers)
        assert ("!" in record.text) == (g.label == "positive")


def test_gold_csv_shape():
    gold = [GoldExample("t1", 0, "positive", {"punctuation": True}, False)]
    csv = gold_csv(gold, ("punctuation",))
    lines = csv.strip().split("\n")
    assert lines[0] == "id,topic,label,score_flipped,marker_punctuation"
    assert lines[1] == "t1,0,positive,false,true"
