"""Reader for annotated training data: CoNLL-like TSV.

Columns are ``index<TAB>token<TAB>tag<TAB>head`` with a blank line between
tweets.  Head 0 is the virtual root.  Source text is reconstructed by joining
tokens with single spaces, which is lossless for training purposes.
"""

from __future__ import annotations

from pathlib import Path

from .parsing import DependencyTree
from .tagging import PosTag, TagSequence
from .tokenizer import Token, TokenizedTweet, classify_token_text

AnnotatedTweet = tuple[TokenizedTweet, TagSequence, DependencyTree]


def _build_tweet(texts: list[str]) -> TokenizedTweet:
    tokens = []
    cursor = 0
    for text in texts:
        tokens.append(Token(text, classify_token_text(text), (cursor, cursor + len(text))))
        cursor += len(text) + 1
    return TokenizedTweet(tuple(tokens), " ".join(texts))


def load_annotated(path: str | Path) -> list[AnnotatedTweet]:
    """Parse the annotated TSV; raises ValueError with a line number on bad rows."""
    sentences: list[AnnotatedTweet] = []
    texts: list[str] = []
    tags: list[PosTag] = []
    heads: list[int] = []

    def flush() -> None:
        if not texts:
            return
        tweet = _build_tweet(texts)
        tree = DependencyTree(tuple(heads))
        tree.validate()
        sentences.append((tweet, TagSequence(tuple(tags)), tree))
        texts.clear()
        tags.clear()
        heads.clear()

    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip():
            flush()
            continue
        parts = line.split("\t")
        if len(parts) != 4:
            raise ValueError(f"line {lineno}: expected 4 tab-separated columns")
        index, token, tag, head = parts
        if int(index) != len(texts) + 1:
            raise ValueError(f"line {lineno}: token index out of sequence")
        texts.append(token)
        try:
            tags.append(PosTag(tag))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: unknown tag {tag!r}") from exc
        heads.append(int(head))
    flush()
    return sentences
