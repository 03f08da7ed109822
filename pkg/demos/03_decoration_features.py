"""The 30-dimensional decoration vector: structure and metadata, no content.

Shows the full named feature breakdown for one tweet and the two comparison
representations (binary n-grams, averaged word embeddings).

Run:  python demos/03_decoration_features.py
"""

from datetime import datetime, timedelta, timezone

from tweetcraft.corpus import AccountSnapshot, MentionInfo, TweetRecord
from tweetcraft.features import DECORATION_SCHEMA, breakdown, extract_decoration
from tweetcraft.pipeline import annotate, load_default_lexicon, load_default_vectors, train_nlp_models
from tweetcraft.vectorizers import featurize_embedding, featurize_ngrams, fit_ngram_vocab

posted = datetime(2024, 3, 5, 14, 30, tzinfo=timezone.utc)
record = TweetRecord(
    id="demo",
    text="exclusive swag! win a custom console controller every time you post @brandup",
    posted_at=posted,
    utc_offset_minutes=-300,
    collected_at=posted + timedelta(days=22),
    retweet_count=40,
    favorite_count=90,
    account=AccountSnapshot(
        follower_count=10_000,
        post_count=1_000,
        favorite_count=300,
        listed_count=50,
        registered_at=posted - timedelta(days=500),
        snapshot_at=posted,
    ),
    mentions_meta=(MentionInfo("brandup", True, 250_000),),
)

nlp = train_nlp_models()
lexicon = load_default_lexicon()
annotation = annotate(nlp, record.text)
vector = extract_decoration(record, annotation.tweet, annotation.tags, annotation.tree, lexicon)

print(f"Decoration vector ({len(DECORATION_SCHEMA)} dims, schema {DECORATION_SCHEMA.version}):")
family_of = dict(DECORATION_SCHEMA.entries)
for name, value in breakdown(vector).items():
    print(f"  {name:<24} {family_of[name]:<12} {value: .4f}")

print("\nComparison representation 1: binary n-grams (n = 1..5, count >= 2).")
corpus = [annotation.tweet, annotation.tweet]  # tiny fitting corpus for the demo
vocab = fit_ngram_vocab(corpus)
sparse = featurize_ngrams(vocab, annotation.tweet)
print(f"  vocabulary size {len(vocab)}, active indices {len(sparse.indices)}")

print("\nComparison representation 2: averaged pretrained word vectors.")
vectors = load_default_vectors()
embedded = featurize_embedding(vectors, annotation.tweet)
print(f"  dimension {vectors.dimension}, first values {[round(float(v), 3) for v in embedded[:4]]}")

print(
    "\nNote what the decoration vector does NOT contain: no token identities,"
    "\nno product words. It captures how the post is built, not what it sells."
)
