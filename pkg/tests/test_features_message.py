import pytest
from hypothesis import given, strategies as st

from tweetsent.corpus_io import ClusterMap, Lexicon
from tweetsent.features_message import (
    DEFAULT_MESSAGE_CONFIG,
    FeatureVector,
    MessageFeatureConfig,
    build_feature_dictionary,
    extract_message_features,
    format_feature_dump,
    vectorize,
)
from tweetsent.negation import EMPTY_ANNOTATION, mark_negation
from tweetsent.tokenizer import attach_clusters, tokenize, tokens_from_tagged


def lex(entries, name="L", affects=("positive",), kind="manual"):
    return Lexicon(name=name, affects=affects, entries=entries, kind=kind)


def extract(text, lexicons=(), clusters=None, config=DEFAULT_MESSAGE_CONFIG):
    message = tokenize(text)
    return extract_message_features(
        message, mark_negation(message), lexicons, clusters, config
    )


def test_golden_positive_message():
    fv = extract("Good :)", [lex({"good": {"positive": 2.0}})])
    assert fv.entries == {
        "wng|good": 1.0,
        "wng|:)": 1.0,
        "wng|good :)": 1.0,
        "cng|goo": 1.0,
        "cng|ood": 1.0,
        "cng|good": 1.0,
        "lex|L|uni|cnt|positive": 1.0,
        "lex|L|uni|sum|positive": 2.0,
        "lex|L|uni|max|positive": 2.0,
        "lex|L|uni|last|positive": 2.0,
        "emo|positive": 1.0,
        "emo|last_positive": 1.0,
    }


def test_golden_bare_word():
    assert extract("hi").entries == {"wng|hi": 1.0}


def test_golden_empty_message():
    assert extract("").entries == {}


def test_negated_context_suffixes_ngrams():
    fv = extract("no fun .")
    assert "wng|fun_NEG" in fv.entries
    assert "wng|fun" not in fv.entries
    assert "wng|no fun_NEG" in fv.entries
    assert fv.get("neg|count") == 1.0
    # Interior wildcard over the 3-gram.
    assert "wng|no * ." in fv.entries


def test_negated_lexicon_block():
    fv = extract("not good .", [lex({"good": {"positive": 2.0}})])
    assert fv.get("lex|L|uni|sum|positive_NEG") == 2.0
    assert fv.get("lex|L|uni|cnt|positive_NEG") == 1.0
    assert fv.get("lex|L|uni|last|positive_NEG") == 2.0
    assert "lex|L|uni|sum|positive" not in fv.entries


def test_bigram_and_pair_lexicons():
    bigram_lex = lex({"bi:good day": {"positive": 1.5}})
    fv = extract("good day", [bigram_lex])
    assert fv.get("lex|L|bi|sum|positive") == 1.5
    pair_lex = lex({"pair:good---day": {"positive": 1.0}})
    fv = extract("good x day", [pair_lex])
    assert fv.get("lex|L|pair|sum|positive") == 1.0
    # Two tokens leave no room for a gapped pair.
    assert "lex|L|pair|sum|positive" not in extract("good day", [pair_lex]).entries


def test_lexicon_scopes_on_tagged_input():
    message = tokens_from_tagged((("GOOD", "A"), ("day", "N"), ("#win", "#")))
    lexicon = lex({"good": {"positive": 2.0}, "day": {"positive": -1.0},
                   "#win": {"positive": 1.0}})
    fv = extract_message_features(message, EMPTY_ANNOTATION, [lexicon])
    assert fv.get("lex|L|uni|sum|positive") == 2.0
    assert fv.get("lex|L|uni|pos:A|sum|positive") == 2.0
    assert fv.get("lex|L|uni|caps|sum|positive") == 2.0
    assert fv.get("lex|L|uni|hashtag|sum|positive") == 1.0
    assert fv.get("lex|L|uni|pos:N|sum|positive") == -1.0
    # No token scored above zero in this scope: cnt/max/last all drop.
    assert "lex|L|uni|pos:N|max|positive" not in fv.entries
    assert "lex|L|uni|pos:N|cnt|positive" not in fv.entries
    assert fv.get("pos|A") == 1.0
    assert fv.get("pos|N") == 1.0
    assert fv.get("caps|count") == 1.0
    assert fv.get("ht|count") == 1.0


def test_punctuation_features():
    fv = extract("what ?! stop !! now ?")
    assert fv.get("pnc|exclaim|count") == 1.0
    assert fv.get("pnc|question|count") == 1.0
    assert fv.get("pnc|mixed|count") == 1.0
    assert fv.get("pnc|last") == 1.0
    assert "pnc|last" not in extract("fine .").entries


def test_emoticon_features():
    fv = extract(":( but now :)")
    assert fv.get("emo|negative") == 1.0
    assert fv.get("emo|positive") == 1.0
    assert fv.get("emo|last_positive") == 1.0
    assert "emo|last_negative" not in fv.entries


def test_elongated_counts_words_only():
    fv = extract("soooo good !!!!")
    assert fv.get("elo|count") == 1.0


def test_cluster_features_from_map_and_tokens():
    clusters = ClusterMap(entries={"good": 7})
    fv = extract("Good day", clusters=clusters)
    assert fv.get("cls|7") == 1.0
    message = attach_clusters(tokenize("Good day"), clusters)
    fv = extract_message_features(message, EMPTY_ANNOTATION)
    assert fv.get("cls|7") == 1.0


def test_unigrams_only_config():
    config = MessageFeatureConfig.unigrams_only()
    fv = extract("no fun :)", config=config)
    # Unigram names only: negation off, every other group off.
    assert fv.entries == {"wng|no": 1.0, "wng|fun": 1.0, "wng|:)": 1.0}


def test_without_encodings_config():
    config = DEFAULT_MESSAGE_CONFIG.without_encodings()
    fv = extract("SOOOO good !! :)", config=config)
    assert not any(
        name.split("|")[0] in ("caps", "ht", "pnc", "emo", "elo")
        for name in fv.entries
    )
    assert "wng|good" in fv.entries


def test_manual_and_auto_lexicon_toggles():
    manual = lex({"good": {"positive": 1.0}}, name="m", kind="manual")
    auto = lex({"good": {"positive": 1.0}}, name="a", kind="auto")
    both = extract("good", [manual, auto])
    assert "lex|m|uni|sum|positive" in both.entries
    assert "lex|a|uni|sum|positive" in both.entries
    from dataclasses import replace

    no_manual = extract(
        "good", [manual, auto],
        config=replace(DEFAULT_MESSAGE_CONFIG, manual_lexicons=False),
    )
    assert "lex|m|uni|sum|positive" not in no_manual.entries
    assert "lex|a|uni|sum|positive" in no_manual.entries
    no_lex = extract(
        "good", [manual, auto],
        config=replace(DEFAULT_MESSAGE_CONFIG, lexicons=False),
    )
    assert not any(name.startswith("lex|") for name in no_lex.entries)


@given(st.lists(st.sampled_from(["aa", "bb", "cc", "dd"]), max_size=6))
def test_wildcards_exactly_mirror_contiguous_ngrams(tokens):
    fv = extract(" ".join(tokens))
    expected = set()
    for i in range(len(tokens) - 2):
        a, b, c = tokens[i : i + 3]
        expected.add(f"wng|{a} * {c}")
    for i in range(len(tokens) - 3):
        a, b, c, d = tokens[i : i + 4]
        expected.add(f"wng|{a} * {c} {d}")
        expected.add(f"wng|{a} {b} * {d}")
    got = {name for name in fv.entries if name.startswith("wng|") and "*" in name}
    assert got == expected


@given(st.lists(st.sampled_from(["good", "bad", "meh", "not", ".", ","]), max_size=7))
def test_lexicon_sum_and_count_partition(tokens):
    lexicon = lex({"good": {"positive": 2.0}, "bad": {"positive": -1.0},
                   "meh": {"positive": 0.0}})
    message = tokenize(" ".join(tokens))
    fv = extract_message_features(message, mark_negation(message), [lexicon])
    scores = [
        lexicon.entries[s]["positive"]
        for s in message.surfaces()
        if s in lexicon.entries
    ]
    total = fv.get("lex|L|uni|sum|positive") + fv.get("lex|L|uni|sum|positive_NEG")
    assert total == pytest.approx(sum(scores))
    count = fv.get("lex|L|uni|cnt|positive") + fv.get("lex|L|uni|cnt|positive_NEG")
    assert count == sum(1 for s in scores if s > 0)


def test_feature_vector_drops_zero_on_insert():
    fv = FeatureVector()
    fv.set("x", 0)
    fv.set("y", 2)
    assert fv.entries == {"y": 2.0}
    assert fv.get("x") == 0.0
    assert len(fv) == 1


def test_dictionary_sorted_and_order_independent():
    a = FeatureVector(entries={"b": 1.0, "a": 2.0})
    b = FeatureVector(entries={"c": 1.0, "a": 1.0})
    forward = build_feature_dictionary([a, b])
    backward = build_feature_dictionary([b, a])
    assert forward == backward
    assert forward.names == ("a", "b", "c")
    assert forward.index == {"a": 0, "b": 1, "c": 2}
    assert forward.size == 3
    assert build_feature_dictionary([]).size == 0


def test_vectorize_drops_unknown_names():
    dictionary = build_feature_dictionary(
        [FeatureVector(entries={"a": 1.0, "b": 1.0})]
    )
    iv = vectorize(FeatureVector(entries={"b": 3.0, "zz": 9.0}), dictionary)
    assert iv.indices.tolist() == [1]
    assert iv.values.tolist() == [3.0]


def test_format_feature_dump_sorted():
    fv = FeatureVector(entries={"b": 2.0, "a": 1.0})
    assert format_feature_dump(fv) == "a\t1\nb\t2\n"
