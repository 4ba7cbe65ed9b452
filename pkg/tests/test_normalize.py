from speech_clarity.normalize import normalize_word, tokenize


def norms(text):
    return [t.norm for t in tokenize(text)]


def test_lowercase_and_punctuation_strip():
    assert norms("The Rainbow, passage.") == ["the", "rainbow", "passage"]


def test_empty_input():
    assert tokenize("") == []


def test_internal_apostrophe_and_hyphen_preserved():
    assert norms("don't stop-go") == ["don't", "stop-go"]


def test_edge_apostrophes_stripped():
    assert normalize_word("'tis'") == "tis"
    assert normalize_word("--dash--") == "dash"


def test_unicode_quotes_and_dashes_folded():
    assert normalize_word("don’t") == "don't"
    assert normalize_word("stop–go") == "stop-go"


def test_empty_after_normalization_dropped_and_indices_consecutive():
    toks = tokenize("a ... b -- c")
    assert [t.norm for t in toks] == ["a", "b", "c"]
    assert [t.index for t in toks] == [0, 1, 2]


def test_digits_kept():
    assert norms("route 66") == ["route", "66"]


def test_idempotence():
    first = norms("The quick, brown fox; doesn't jump!")
    assert norms(" ".join(first)) == first


def test_order_preserved():
    toks = tokenize("one two three")
    assert [t.surface for t in toks] == ["one", "two", "three"]
    assert [t.norm for t in toks] == ["one", "two", "three"]
