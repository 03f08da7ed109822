"""Crafting a post against the prediction service: the edit-predict loop.

Trains a pipeline on a planted-signal corpus, serves it in-process, and walks
a draft through several revisions until the model predicts a positive
influence -- the workflow the browser workbench wraps interactively.

Run:  python demos/06_prediction_service.py      (about a minute)
"""

from fastapi.testclient import TestClient

from tweetcraft.evaluation import label_corpus
from tweetcraft.pipeline import annotate_corpus, load_default_lexicon, train_nlp_models, train_pipeline
from tweetcraft.service import create_app
from tweetcraft.synth import SyntheticSpec, generate_synthetic

print("Training a pipeline on a planted-signal corpus...")
records, _ = generate_synthetic(SyntheticSpec(n=600, noise_rate=0.05), seed=15)
nlp = train_nlp_models()
annotations = annotate_corpus(nlp, records)
example_set = label_corpus(records, annotations, method="sim_binary", k=3, seed=15)
labels = {ex.tweet_id: ex.label for ex in example_set.examples if ex.label}
pipeline = train_pipeline(records, labels, nlp, load_default_lexicon(),
                          classifier_kind="svm-rbf", seed=15)
print(f"  model {pipeline.model_id}, train F1 {pipeline.metrics['train_f1']:.3f}")

app = create_app(pipeline=pipeline)
client = TestClient(app)

account = {
    "follower_count": 10_000,
    "post_count": 1_000,
    "favorite_count": 300,
    "listed_count": 50,
    "registered_at": "2022-11-01T00:00:00Z",
}

drafts = [
    # Plain announcement: no hook, lukewarm mention, short.
    {
        "text": "every post using the tag makes you eligible for a custom console controller.",
        "mentions_meta": [],
    },
    # Add a big, verified mention.
    {
        "text": "every post using the tag makes you eligible for a custom console "
                "controller @brandup.",
        "mentions_meta": [{"username": "brandup", "verified": True, "follower_count": 400_000}],
    },
    # Add the hook phrase and the exclamation.
    {
        "text": "exclusive swag and a limited chance to win big this weekend. every post "
                "using the tag makes you eligible for a custom console controller @brandup!",
        "mentions_meta": [{"username": "brandup", "verified": True, "follower_count": 400_000}],
    },
]

print("\nIterating on the draft:")
payloads = [
    {"text": d["text"], "account": account, "posted_at": "2024-03-06T15:00:00Z",
     "mentions_meta": d["mentions_meta"]}
    for d in drafts
]
for i, payload in enumerate(payloads, start=1):
    body = client.post("/v1/predict", json=payload).json()
    print(f"\n  draft {i}: {payload['text'][:64]}...")
    print(f"    label {body['label']}, score {body['score']:.3f}")
    interesting = ["readability", "head_count", "mean_mention_followers", "has_exclamation"]
    shown = {k: round(body["feature_breakdown"][k], 3) for k in interesting}
    print(f"    breakdown: {shown}")

print("\nSide-by-side ranking via /v1/compare:")
ranked = client.post("/v1/compare", json=payloads).json()
for body, payload in zip(ranked, payloads):
    print(f"  rank {body['rank']}: score {body['score']:.3f}  {payload['text'][:56]}...")

print("\nThe hooked variant overtakes the plain one without changing the offer itself.")
