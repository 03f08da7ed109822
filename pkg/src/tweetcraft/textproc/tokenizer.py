"""Tweet tokenizer: splits text into classified tokens with source spans."""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum


class TokenKind(str, Enum):
    WORD = "word"
    HASHTAG = "hashtag"
    MENTION = "mention"
    URL = "url"
    NUMBER = "number"
    PUNCTUATION = "punctuation"
    EMOJI = "emoji"
    OTHER = "other"


@dataclass(frozen=True)
class Token:
    text: str
    kind: TokenKind
    char_span: tuple[int, int]


@dataclass(frozen=True)
class TokenizedTweet:
    tokens: tuple[Token, ...]
    source: str

    def __len__(self) -> int:
        return len(self.tokens)

    def texts(self) -> list[str]:
        return [t.text for t in self.tokens]

    def validate(self) -> None:
        prev_end = 0
        for tok in self.tokens:
            start, end = tok.char_span
            if not (0 <= start < end <= len(self.source)):
                raise ValueError(f"span {tok.char_span} outside text bounds")
            if start < prev_end:
                raise ValueError("token spans overlap or are out of order")
            if self.source[start:end] != tok.text:
                raise ValueError("token text does not match its span")
            # Only whitespace may sit between consecutive tokens.
            if self.source[prev_end:start].strip():
                raise ValueError("non-whitespace gap between tokens")
            if tok.kind is TokenKind.HASHTAG and not tok.text.startswith("#"):
                raise ValueError("hashtag token must start with '#'")
            if tok.kind is TokenKind.MENTION and not tok.text.startswith("@"):
                raise ValueError("mention token must start with '@'")
            prev_end = end
        if self.source[prev_end:].strip():
            raise ValueError("trailing non-whitespace not covered by tokens")


# Shorteners commonly seen without an explicit scheme in tweets.
_SHORTENERS = (
    "t.co", "bit.ly", "goo.gl", "tinyurl.com", "ow.ly", "buff.ly",
    "pic.twitter.com", "sbux.co", "yhoo.it", "soc.att.com", "blck.by",
    "mcys.co", "yt.be", "amzn.to",
)

_EMOJI_RANGES = (
    "\U0001F300-\U0001F5FF"
    "\U0001F600-\U0001F64F"
    "\U0001F680-\U0001F6FF"
    "\U0001F900-\U0001F9FF"
    "\U0001FA00-\U0001FAFF"
    "\U0001F1E6-\U0001F1FF"
    "☀-➿"
    "⬀-⯿"
)

_PUNCT_CHARS = r"""!"#$%&'()*+,\-./:;<=>?@\[\\\]^_`{|}~…—–‒“”‘’«»¡¿·"""

_TOKEN_RE = re.compile(
    "|".join(
        f"(?P<{name}>{pattern})"
        for name, pattern in [
            ("url", r"https?://\S+|(?:%s)/\S+" % "|".join(s.replace(".", r"\.") for s in _SHORTENERS)),
            ("mention", r"@\w+"),
            ("hashtag", r"#\w+"),
            ("emoji", f"[{_EMOJI_RANGES}][{_EMOJI_RANGES}‍️]*"),
            ("number", r"[$€£¥]?\d+(?:[.,:/\-]\d+)*%?"),
            ("word", r"[^\W\d_]+(?:['’\-][^\W\d_]+)*"),
            ("punctuation", f"[{_PUNCT_CHARS}]+"),
            ("other", r"\S"),
        ]
    ),
    re.UNICODE,
)


def classify_token_text(text: str) -> TokenKind:
    """Kind a standalone token text would get from the tokenizer."""
    match = _TOKEN_RE.fullmatch(text)
    if match is None:
        return TokenKind.OTHER
    return TokenKind(match.lastgroup)


def tokenize(text: str) -> TokenizedTweet:
    """Split ``text`` into tokens; empty text yields an empty token list.

    URLs (scheme or known shortener prefix), @mentions, #hashtags, numbers,
    emoji, and punctuation runs each become one token of the matching kind;
    contractions and hyphenated words stay single word tokens.
    """
    tokens = []
    for match in _TOKEN_RE.finditer(text):
        kind = TokenKind(match.lastgroup)
        tokens.append(Token(match.group(), kind, match.span()))
    return TokenizedTweet(tuple(tokens), text)
