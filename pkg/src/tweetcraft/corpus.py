"""Data model and file ingestion for tweet corpora, lexicons and word vectors.

Loaders are pure functions over file contents: they return the parsed
objects together with a list of per-line diagnostics instead of logging or
raising on recoverable problems.  Every input line ends up either in the
result or in a diagnostic, never silently dropped.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timedelta, timezone
from pathlib import Path

import numpy as np

# Records younger than this are "provisional": reaction counts may still move.
FINAL_AGE = timedelta(days=21)

MAX_TEXT_CHARS = 500


class CorpusError(ValueError):
    """Fatal, unrecoverable problem with an input file."""


def _split_lines(text: str) -> list[str]:
    # Strictly newline-delimited: unlike str.splitlines(), record text may
    # legally contain U+0085/U+2028-style breaks inside a JSON string.
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return [line[:-1] if line.endswith("\r") else line for line in lines]


@dataclass(frozen=True)
class Diagnostic:
    """A recoverable per-line problem, reported instead of raised."""

    line: int
    message: str

    def __str__(self) -> str:
        return f"line {self.line}: {self.message}"


def _parse_rfc3339(value: str) -> datetime:
    """Parse an RFC 3339 timestamp into an aware UTC datetime."""
    raw = value.strip()
    if raw.endswith(("Z", "z")):
        raw = raw[:-1] + "+00:00"
    dt = datetime.fromisoformat(raw)
    if dt.tzinfo is None:
        raise ValueError(f"timestamp {value!r} has no UTC offset")
    return dt.astimezone(timezone.utc)


def _format_rfc3339(dt: datetime) -> str:
    return dt.astimezone(timezone.utc).isoformat().replace("+00:00", "Z")


@dataclass(frozen=True)
class AccountSnapshot:
    """Author account statistics captured near posting time."""

    follower_count: int
    post_count: int
    favorite_count: int
    listed_count: int
    registered_at: datetime
    snapshot_at: datetime

    def validate(self) -> None:
        for name in ("follower_count", "post_count", "favorite_count", "listed_count"):
            if getattr(self, name) < 0:
                raise ValueError(f"account.{name} must be >= 0")
        if self.snapshot_at < self.registered_at:
            raise ValueError("account.snapshot_at precedes registered_at")

    @classmethod
    def from_json_dict(cls, obj: dict) -> "AccountSnapshot":
        return cls(
            follower_count=int(obj["follower_count"]),
            post_count=int(obj["post_count"]),
            favorite_count=int(obj["favorite_count"]),
            listed_count=int(obj["listed_count"]),
            registered_at=_parse_rfc3339(obj["registered_at"]),
            snapshot_at=_parse_rfc3339(obj["snapshot_at"]),
        )

    def to_json_dict(self) -> dict:
        return {
            "follower_count": self.follower_count,
            "post_count": self.post_count,
            "favorite_count": self.favorite_count,
            "listed_count": self.listed_count,
            "registered_at": _format_rfc3339(self.registered_at),
            "snapshot_at": _format_rfc3339(self.snapshot_at),
        }


@dataclass(frozen=True)
class MentionInfo:
    """Metadata for one username mentioned in a tweet, captured at ingestion."""

    username: str
    verified: bool
    follower_count: int

    def validate(self) -> None:
        if self.follower_count < 0:
            raise ValueError("mention follower_count must be >= 0")


@dataclass(frozen=True)
class TweetRecord:
    """One post with its reaction counts and author snapshot."""

    id: str
    text: str
    posted_at: datetime
    utc_offset_minutes: int
    collected_at: datetime
    retweet_count: int
    favorite_count: int
    account: AccountSnapshot
    mentions_meta: tuple[MentionInfo, ...] = field(default_factory=tuple)

    @property
    def is_final(self) -> bool:
        """True once reaction counts were collected at least 21 days after posting."""
        return self.collected_at - self.posted_at >= FINAL_AGE

    @property
    def local_posted_at(self) -> datetime:
        """Posting time in the author's locale, from the stored UTC offset."""
        return self.posted_at + timedelta(minutes=self.utc_offset_minutes)

    def validate(self) -> None:
        if not self.id:
            raise ValueError("id must be non-empty")
        if len(self.text) > MAX_TEXT_CHARS:
            raise ValueError(f"text exceeds {MAX_TEXT_CHARS} chars")
        if self.retweet_count < 0 or self.favorite_count < 0:
            raise ValueError("reaction counts must be >= 0")
        if self.account.snapshot_at > self.posted_at + timedelta(days=1):
            raise ValueError("account.snapshot_at is more than 1 day after posted_at")
        self.account.validate()
        for mention in self.mentions_meta:
            mention.validate()

    @classmethod
    def from_json_dict(cls, obj: dict) -> "TweetRecord":
        mentions = tuple(
            MentionInfo(
                username=str(m["username"]),
                verified=bool(m["verified"]),
                follower_count=int(m["follower_count"]),
            )
            for m in obj.get("mentions_meta", [])
        )
        return cls(
            id=str(obj["id"]),
            text=str(obj["text"]),
            posted_at=_parse_rfc3339(obj["posted_at"]),
            utc_offset_minutes=int(obj["utc_offset_minutes"]),
            collected_at=_parse_rfc3339(obj["collected_at"]),
            retweet_count=int(obj["retweet_count"]),
            favorite_count=int(obj["favorite_count"]),
            account=AccountSnapshot.from_json_dict(obj["account"]),
            mentions_meta=mentions,
        )

    def to_json_dict(self) -> dict:
        return {
            "id": self.id,
            "text": self.text,
            "posted_at": _format_rfc3339(self.posted_at),
            "utc_offset_minutes": self.utc_offset_minutes,
            "collected_at": _format_rfc3339(self.collected_at),
            "retweet_count": self.retweet_count,
            "favorite_count": self.favorite_count,
            "account": self.account.to_json_dict(),
            "mentions_meta": [
                {
                    "username": m.username,
                    "verified": m.verified,
                    "follower_count": m.follower_count,
                }
                for m in self.mentions_meta
            ],
        }


@dataclass(frozen=True)
class SentimentLexicon:
    """Token -> valence score in [-5, +5], tokens lowercase and unique."""

    entries: dict[str, float]

    def score(self, token: str) -> float:
        return self.entries.get(token.lower(), 0.0)

    def __contains__(self, token: str) -> bool:
        return token.lower() in self.entries

    def __len__(self) -> int:
        return len(self.entries)


class WordVectorTable:
    """Pretrained word vectors, all of one fixed dimension."""

    def __init__(self, dimension: int, entries: dict[str, np.ndarray]):
        if dimension <= 0:
            raise ValueError("dimension must be positive")
        for token, vec in entries.items():
            if vec.shape != (dimension,):
                raise ValueError(f"vector for {token!r} is not of length {dimension}")
        self.dimension = dimension
        self.entries = entries

    def get(self, token: str) -> np.ndarray | None:
        return self.entries.get(token.lower())

    def __contains__(self, token: str) -> bool:
        return token.lower() in self.entries

    def __len__(self) -> int:
        return len(self.entries)


def load_corpus(path: str | Path) -> tuple[list[TweetRecord], list[Diagnostic]]:
    """Load a JSONL corpus. Malformed or invalid lines become diagnostics.

    Returns records in file order.  For every non-empty input line either a
    record or a diagnostic is produced.
    """
    records: list[TweetRecord] = []
    diagnostics: list[Diagnostic] = []
    text = Path(path).read_text(encoding="utf-8")
    for lineno, line in enumerate(_split_lines(text), start=1):
        if not line.strip():
            continue
        try:
            record = TweetRecord.from_json_dict(json.loads(line))
            record.validate()
        except (ValueError, KeyError, TypeError) as exc:
            diagnostics.append(Diagnostic(lineno, f"skipped record: {exc}"))
            continue
        records.append(record)
    return records, diagnostics


def save_corpus(path: str | Path, records: list[TweetRecord]) -> None:
    """Write records as JSONL; inverse of :func:`load_corpus`."""
    with open(path, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record.to_json_dict(), ensure_ascii=False) + "\n")


def load_sentiment_lexicon(path: str | Path) -> tuple[SentimentLexicon, list[Diagnostic]]:
    """Load a TSV of ``token<TAB>score`` rows; duplicate tokens last-wins."""
    entries: dict[str, float] = {}
    diagnostics: list[Diagnostic] = []
    text = Path(path).read_text(encoding="utf-8")
    for lineno, line in enumerate(_split_lines(text), start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            diagnostics.append(Diagnostic(lineno, "expected token<TAB>score"))
            continue
        token = parts[0].strip().lower()
        try:
            score = float(parts[1])
        except ValueError:
            diagnostics.append(Diagnostic(lineno, f"non-numeric score {parts[1]!r}"))
            continue
        if not -5.0 <= score <= 5.0:
            diagnostics.append(Diagnostic(lineno, f"score {score} outside [-5, 5]"))
            continue
        if token in entries:
            diagnostics.append(Diagnostic(lineno, f"duplicate token {token!r}, last wins"))
        entries[token] = score
    return SentimentLexicon(entries), diagnostics


def load_word_vectors(path: str | Path) -> tuple[WordVectorTable, list[Diagnostic]]:
    """Load a textual word-vector table.

    First line is ``<vocab_size> <dimension>``; each following line is a token
    and exactly ``dimension`` floats.  A wrong number of floats on any line is
    fatal; a vocab-size mismatch only yields a diagnostic.
    """
    diagnostics: list[Diagnostic] = []
    text = Path(path).read_text(encoding="utf-8")
    lines = _split_lines(text)
    if not lines:
        raise CorpusError("empty word-vector file")
    header = lines[0].split()
    if len(header) != 2:
        raise CorpusError("header must be '<vocab_size> <dimension>'")
    try:
        declared_count, dimension = int(header[0]), int(header[1])
    except ValueError as exc:
        raise CorpusError(f"bad header: {exc}") from exc
    if dimension <= 0:
        raise CorpusError("dimension must be positive")

    entries: dict[str, np.ndarray] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.rstrip().split(" ")
        if len(parts) != dimension + 1:
            raise CorpusError(
                f"line {lineno}: expected {dimension} floats, got {len(parts) - 1}"
            )
        try:
            vec = np.array([float(x) for x in parts[1:]], dtype=np.float64)
        except ValueError as exc:
            raise CorpusError(f"line {lineno}: {exc}") from exc
        entries[parts[0].lower()] = vec

    if len(entries) != declared_count:
        diagnostics.append(
            Diagnostic(1, f"header declares {declared_count} tokens, file has {len(entries)}")
        )
    return WordVectorTable(dimension, entries), diagnostics
