"""Tokenizing, tagging and parsing tweets with the in-repo trainable models.

The tagger and parser are averaged perceptrons trained from the small
annotated sample bundled with the package; no external NLP models are needed.

Run:  python demos/02_linguistic_annotations.py
"""

from tweetcraft.pipeline import annotate, train_nlp_models
from tweetcraft.textproc import head_count, keyword_extract, tokenize, tree_depth

print("Tokenization classifies every piece of a tweet:")
tweet = tokenize("Check out this #deal from @BestBuy: 50% off today! http://t.co/x 🎉")
for token in tweet.tokens:
    print(f"  {token.text!r:<18} {token.kind.value}")

print("\nTraining tagger + parser on the bundled annotated sample...")
nlp = train_nlp_models(epochs=5, seed=13)
print(f"  tagger features: {len(nlp.tagger.weights)}")
print(f"  parser features: {len(nlp.parser.weights)}")

examples = [
    "win your new deal today!",
    "fresh coffee and a sweet treat in our store @brandup!",
    "exclusive swag. bring it!",
]
for text in examples:
    annotation = annotate(nlp, text)
    pairs = [
        f"{tok.text}/{tag.value}"
        for tok, tag in zip(annotation.tweet.tokens, annotation.tags.tags)
    ]
    print(f"\n  {text}")
    print(f"    tags:  {' '.join(pairs)}")
    print(f"    heads: {annotation.tree.heads}  (0 = virtual root)")
    print(
        f"    depth {tree_depth(annotation.tree):.3f}, "
        f"head count {head_count(annotation.tree):.3f} (both length-normalized)"
    )
    print(f"    keywords: {sorted(keyword_extract(annotation.tweet, annotation.tags))}")

print(
    "\nMulti-fragment tweets keep several roots: each fragment attaches to the"
    "\nvirtual root, so the head count measures information density."
)
