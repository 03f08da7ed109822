from hypothesis import given, settings
from hypothesis import strategies as st

from tweetcraft.textproc import TokenKind, tokenize


def kinds(text):
    return [t.kind.value for t in tokenize(text).tokens]


def test_mixed_elements():
    assert kinds("Check #deal @BestBuy http://t.co/x !") == [
        "word", "hashtag", "mention", "url", "punctuation",
    ]


def test_empty_text():
    assert tokenize("").tokens == ()


def test_percentage_is_number():
    tweet = tokenize("Save 50% today!")
    assert [t.kind.value for t in tweet.tokens] == ["word", "number", "word", "punctuation"]
    assert tweet.tokens[1].text == "50%"


def test_contractions_stay_single():
    tweet = tokenize("Don't miss it, you're in")
    assert tweet.tokens[0].text == "Don't"
    assert "you're" in tweet.texts()


def test_hyphenated_word_single_token():
    assert tokenize("gecko-themed controller").tokens[0].text == "gecko-themed"


def test_shortener_without_scheme():
    tweet = tokenize("More info bit.ly/2iPzTuS today")
    assert tweet.tokens[2].kind is TokenKind.URL


def test_punctuation_runs_are_one_token():
    tweet = tokenize("Really?! No way...")
    punct = [t.text for t in tweet.tokens if t.kind is TokenKind.PUNCTUATION]
    assert punct == ["?!", "..."]


def test_emoji_classified():
    tweet = tokenize("So good 🎉")
    assert tweet.tokens[-1].kind is TokenKind.EMOJI


def test_mention_and_hashtag_prefixes():
    tweet = tokenize("@trollhunters #NowOnNetflix")
    assert tweet.tokens[0].text.startswith("@")
    assert tweet.tokens[1].text.startswith("#")


@settings(max_examples=300, deadline=None)
@given(st.text(max_size=280))
def test_span_coverage_invariant(text):
    tweet = tokenize(text)
    tweet.validate()
    # Reconstruct: spans plus inter-token gaps must give back the source.
    rebuilt = []
    cursor = 0
    for tok in tweet.tokens:
        start, end = tok.char_span
        rebuilt.append(text[cursor:start])
        rebuilt.append(text[start:end])
        cursor = end
    rebuilt.append(text[cursor:])
    assert "".join(rebuilt) == text
