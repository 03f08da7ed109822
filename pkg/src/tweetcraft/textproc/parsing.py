"""Greedy arc-standard dependency parser over an averaged perceptron.

Trees use a virtual root: ``heads[i] == 0`` marks token ``i + 1`` as a
syntactic root, and several roots per tweet are allowed (tweets are often a
sequence of complete fragments rather than one sentence).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .perceptron import AveragedPerceptron, predict_with
from .tagging import TagSequence
from .tokenizer import TokenizedTweet

SHIFT = "shift"
LEFT = "left_arc"
RIGHT = "right_arc"
_MOVES = [SHIFT, LEFT, RIGHT]


@dataclass(frozen=True)
class DependencyTree:
    heads: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.heads)

    def validate(self) -> None:
        n = len(self.heads)
        if n == 0:
            return
        for head in self.heads:
            if not 0 <= head <= n:
                raise ValueError(f"head {head} outside 0..{n}")
        if not any(head == 0 for head in self.heads):
            raise ValueError("no token attaches to the virtual root")
        # Reachability from the virtual root implies acyclicity here: every
        # token has exactly one head, so unreachable tokens sit on a cycle.
        children: dict[int, list[int]] = {}
        for i, head in enumerate(self.heads, start=1):
            children.setdefault(head, []).append(i)
        seen: set[int] = set()
        frontier = [0]
        while frontier:
            node = frontier.pop()
            for child in children.get(node, []):
                if child not in seen:
                    seen.add(child)
                    frontier.append(child)
        if len(seen) != n:
            raise ValueError("tree contains a cycle or unreachable token")


@dataclass(frozen=True)
class ParserModel:
    weights: dict[str, dict[str, float]]
    averaged: bool
    epochs: int
    seed: int


def tree_depth(tree: DependencyTree) -> float:
    """Longest root-to-token path in nodes, divided by token count; 0 if empty."""
    n = len(tree.heads)
    if n == 0:
        return 0.0
    depths = [0] * (n + 1)

    def depth_of(i: int) -> int:
        if depths[i] == 0:
            head = tree.heads[i - 1]
            depths[i] = 1 if head == 0 else depth_of(head) + 1
        return depths[i]

    return max(depth_of(i) for i in range(1, n + 1)) / n


def head_count(tree: DependencyTree) -> float:
    """Number of syntactic roots divided by token count; 0 if empty."""
    n = len(tree.heads)
    if n == 0:
        return 0.0
    return sum(1 for head in tree.heads if head == 0) / n


class _Config:
    """Stack / buffer / arcs state of an arc-standard derivation."""

    def __init__(self, n: int):
        self.stack = [0]
        self.buffer = list(range(1, n + 1))
        self.heads = [0] * (n + 1)
        self.attached = [False] * (n + 1)

    def legal_moves(self) -> list[str]:
        moves = []
        if self.buffer:
            moves.append(SHIFT)
        if len(self.stack) >= 2:
            if self.stack[-2] != 0:
                moves.append(LEFT)
            moves.append(RIGHT)
        return moves

    def apply(self, move: str) -> None:
        if move == SHIFT:
            self.stack.append(self.buffer.pop(0))
        elif move == LEFT:
            dep = self.stack.pop(-2)
            self.heads[dep] = self.stack[-1]
            self.attached[dep] = True
        elif move == RIGHT:
            dep = self.stack.pop()
            self.heads[dep] = self.stack[-1]
            self.attached[dep] = True
        else:
            raise ValueError(f"unknown move {move!r}")

    @property
    def done(self) -> bool:
        return not self.buffer and len(self.stack) == 1


def _config_features(config: _Config, words: list[str], tags: list[str]) -> list[str]:
    def word_at(idx: int | None) -> str:
        if idx is None:
            return "-NONE-"
        return "-ROOT-" if idx == 0 else words[idx - 1]

    def tag_at(idx: int | None) -> str:
        if idx is None:
            return "-NONE-"
        return "-ROOT-" if idx == 0 else tags[idx - 1]

    s0 = config.stack[-1] if config.stack else None
    s1 = config.stack[-2] if len(config.stack) >= 2 else None
    b0 = config.buffer[0] if config.buffer else None
    b1 = config.buffer[1] if len(config.buffer) >= 2 else None
    if s0 is not None and s1 is not None:
        dist = min(s0 - s1, 5)
    else:
        dist = "-NONE-"
    return [
        f"s0w={word_at(s0)}",
        f"s0t={tag_at(s0)}",
        f"s1w={word_at(s1)}",
        f"s1t={tag_at(s1)}",
        f"b0w={word_at(b0)}",
        f"b0t={tag_at(b0)}",
        f"b1t={tag_at(b1)}",
        f"dist={dist}",
        f"s0t,s1t={tag_at(s0)},{tag_at(s1)}",
        f"s0t,b0t={tag_at(s0)},{tag_at(b0)}",
        f"s1t,s0t,b0t={tag_at(s1)},{tag_at(s0)},{tag_at(b0)}",
        f"s0w,s1w={word_at(s0)},{word_at(s1)}",
        f"s0w,b0w={word_at(s0)},{word_at(b0)}",
        f"s0w,s1t={word_at(s0)},{tag_at(s1)}",
        f"s1w,s0t={word_at(s1)},{tag_at(s0)}",
        f"s1t,b0t={tag_at(s1)},{tag_at(b0)}",
    ]


def _oracle_move(config: _Config, gold: tuple[int, ...], n_children: list[int]) -> str:
    if len(config.stack) >= 2:
        s0, s1 = config.stack[-1], config.stack[-2]
        if s1 != 0 and gold[s1 - 1] == s0:
            return LEFT
        if gold[s0 - 1] == s1:
            pending = n_children[s0] - sum(
                1 for i in range(1, len(gold) + 1) if gold[i - 1] == s0 and config.attached[i]
            )
            if pending == 0:
                return RIGHT
    if config.buffer:
        return SHIFT
    return RIGHT


def _prepare(tweet: TokenizedTweet, tags: TagSequence) -> tuple[list[str], list[str]]:
    words = [t.text.lower() for t in tweet.tokens]
    tag_values = [t.value for t in tags.tags]
    return words, tag_values


def train_parser(
    corpus: list[tuple[TokenizedTweet, TagSequence, DependencyTree]],
    epochs: int = 5,
    seed: int = 0,
) -> ParserModel:
    """Train the transition classifier on gold trees via the static oracle."""
    if not corpus:
        raise ValueError("empty training corpus")
    if epochs < 1:
        raise ValueError("epochs must be >= 1")
    for tweet, tags, tree in corpus:
        tags.validate(tweet)
        tree.validate()
        if len(tree.heads) != len(tweet.tokens):
            raise ValueError("tree size does not match token count")

    model = AveragedPerceptron()
    rng = random.Random(seed)
    order = list(range(len(corpus)))
    for _ in range(epochs):
        rng.shuffle(order)
        for idx in order:
            tweet, tags, tree = corpus[idx]
            if not tweet.tokens:
                continue
            words, tag_values = _prepare(tweet, tags)
            n_children = [0] * (len(tree.heads) + 1)
            for head in tree.heads:
                n_children[head] += 1
            config = _Config(len(tweet.tokens))
            while not config.done:
                legal = config.legal_moves()
                truth = _oracle_move(config, tree.heads, n_children)
                if truth not in legal:  # non-projective remainder
                    truth = legal[-1]
                feats = _config_features(config, words, tag_values)
                model.observe(feats, truth, legal)
                config.apply(truth)
    return ParserModel(weights=model.averaged_weights(), averaged=True, epochs=epochs, seed=seed)


def parse(model: ParserModel, tweet: TokenizedTweet, tags: TagSequence) -> DependencyTree:
    """Greedy decode; the output always satisfies the tree invariants."""
    tags.validate(tweet)
    n = len(tweet.tokens)
    if n == 0:
        return DependencyTree(())
    words, tag_values = _prepare(tweet, tags)
    config = _Config(n)
    while not config.done:
        legal = config.legal_moves()
        feats = _config_features(config, words, tag_values)
        move = predict_with(model.weights, feats, legal)
        config.apply(move)
    # Anything left unattached (cannot happen under the legality filter, but
    # kept as a safety net) becomes a root.
    heads = tuple(config.heads[1:])
    tree = DependencyTree(heads)
    tree.validate()
    return tree
