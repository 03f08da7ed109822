"""Linguistic substrate: tokenization, POS tagging, dependency parsing."""

from .parsing import (
    DependencyTree,
    ParserModel,
    head_count,
    parse,
    train_parser,
    tree_depth,
)
from .tagging import (
    KEYWORD_TAGS,
    PosTag,
    TagSequence,
    TaggerModel,
    keyword_extract,
    tag,
    train_tagger,
)
from .tokenizer import Token, TokenizedTweet, TokenKind, tokenize
from .treebank import load_annotated

__all__ = [
    "DependencyTree",
    "KEYWORD_TAGS",
    "ParserModel",
    "PosTag",
    "TagSequence",
    "TaggerModel",
    "Token",
    "TokenizedTweet",
    "TokenKind",
    "head_count",
    "keyword_extract",
    "load_annotated",
    "parse",
    "tag",
    "tokenize",
    "train_parser",
    "train_tagger",
    "tree_depth",
]
