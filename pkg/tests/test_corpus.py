import json
from datetime import timedelta

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tweetcraft.corpus import (
    CorpusError,
    load_corpus,
    load_sentiment_lexicon,
    load_word_vectors,
    save_corpus,
)

from .conftest import make_record, utc


def write_jsonl(path, dicts):
    path.write_text("\n".join(json.dumps(d) for d in dicts) + "\n", encoding="utf-8")


def test_load_corpus_valid_lines(tmp_path):
    path = tmp_path / "corpus.jsonl"
    write_jsonl(path, [make_record(id=f"t{i}").to_json_dict() for i in range(3)])
    records, diags = load_corpus(path)
    assert [r.id for r in records] == ["t0", "t1", "t2"]
    assert diags == []


def test_load_corpus_malformed_line_cited(tmp_path):
    path = tmp_path / "corpus.jsonl"
    lines = [
        json.dumps(make_record(id="a").to_json_dict()),
        json.dumps(make_record(id="b").to_json_dict()),
        "{not json",
    ]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    records, diags = load_corpus(path)
    assert [r.id for r in records] == ["a", "b"]
    assert len(diags) == 1
    assert diags[0].line == 3


def test_twenty_day_record_is_provisional(tmp_path):
    path = tmp_path / "corpus.jsonl"
    write_jsonl(path, [make_record(age_days=20).to_json_dict()])
    records, diags = load_corpus(path)
    assert diags == []
    assert records[0].is_final is False
    assert make_record(age_days=21).is_final is True


def test_invalid_record_becomes_diagnostic(tmp_path):
    bad = make_record(id="bad").to_json_dict()
    bad["retweet_count"] = -1
    path = tmp_path / "corpus.jsonl"
    write_jsonl(path, [make_record(id="ok").to_json_dict(), bad])
    records, diags = load_corpus(path)
    assert [r.id for r in records] == ["ok"]
    assert len(diags) == 1 and diags[0].line == 2


def test_no_line_silently_dropped(tmp_path):
    dicts = [make_record(id=f"t{i}").to_json_dict() for i in range(4)]
    dicts[2]["account"]["follower_count"] = -5
    path = tmp_path / "corpus.jsonl"
    write_jsonl(path, dicts)
    records, diags = load_corpus(path)
    assert len(records) + len(diags) == 4


def test_round_trip(tmp_path):
    records = [
        make_record(id="r1", utc_offset_minutes=-300, mentions_meta=[("BestBuy", True, 12345)]),
        make_record(id="r2", text="Unicode ✨ and #tags", retweet_count=0),
    ]
    path = tmp_path / "corpus.jsonl"
    save_corpus(path, records)
    reloaded, diags = load_corpus(path)
    assert diags == []
    assert reloaded == records


@settings(max_examples=50, deadline=None)
@given(
    rt=st.integers(0, 10**6),
    fav=st.integers(0, 10**6),
    followers=st.integers(0, 10**7),
    offset=st.integers(-720, 840),
    age=st.integers(0, 400),
    text=st.text(max_size=500),
)
def test_loaded_records_satisfy_invariants(tmp_path_factory, rt, fav, followers, offset, age, text):
    record = make_record(
        id="x",
        text=text,
        retweet_count=rt,
        favorite_count=fav,
        follower_count=followers,
        utc_offset_minutes=offset,
        age_days=age,
    )
    path = tmp_path_factory.mktemp("fuzz") / "one.jsonl"
    save_corpus(path, [record])
    records, diags = load_corpus(path)
    assert diags == []
    records[0].validate()
    assert records[0] == record


def test_account_snapshot_invariant():
    from .conftest import make_account

    late = make_record(
        account=make_account(posted_at=utc(), snapshot_at=utc() + timedelta(days=2))
    )
    with pytest.raises(ValueError):
        late.validate()


def test_lexicon_basic(tmp_path):
    path = tmp_path / "lex.tsv"
    path.write_text("good\t3\nbad\t-3\n", encoding="utf-8")
    lexicon, diags = load_sentiment_lexicon(path)
    assert len(lexicon) == 2 and diags == []
    assert lexicon.score("GOOD") == 3.0


def test_lexicon_duplicate_last_wins(tmp_path):
    path = tmp_path / "lex.tsv"
    path.write_text("good\t3\ngood\t2\n", encoding="utf-8")
    lexicon, diags = load_sentiment_lexicon(path)
    assert len(lexicon) == 1
    assert lexicon.score("good") == 2.0
    assert len(diags) == 1


def test_lexicon_non_numeric_skipped(tmp_path):
    path = tmp_path / "lex.tsv"
    path.write_text("good\tx\n", encoding="utf-8")
    lexicon, diags = load_sentiment_lexicon(path)
    assert len(lexicon) == 0
    assert len(diags) == 1


def test_word_vectors_basic(tmp_path):
    path = tmp_path / "vecs.txt"
    path.write_text("2 3\nfoo 1.0 2.0 3.0\nbar 0.5 0.5 0.5\n", encoding="utf-8")
    table, diags = load_word_vectors(path)
    assert table.dimension == 3 and len(table) == 2 and diags == []


def test_word_vectors_count_mismatch_diagnostic(tmp_path):
    path = tmp_path / "vecs.txt"
    path.write_text("5 3\nfoo 1 2 3\nbar 4 5 6\n", encoding="utf-8")
    table, diags = load_word_vectors(path)
    assert len(table) == 2
    assert len(diags) == 1


def test_word_vectors_dimension_mismatch_fatal(tmp_path):
    path = tmp_path / "vecs.txt"
    path.write_text("2 3\nfoo 1 2 3\nbar 4 5\n", encoding="utf-8")
    with pytest.raises(CorpusError, match="line 3"):
        load_word_vectors(path)
