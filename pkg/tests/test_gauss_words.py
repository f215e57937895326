import pytest

from gauss.models import GaussWord
from gauss.service import (
    enumerate_gauss_words,
    format_gauss_word,
    gauss_word_count,
    gauss_word_prefixes,
    is_dihedral_minimal,
    parse_gauss_word,
    reverse_gauss_word,
    rotate_gauss_word,
    word_to_map,
)
from ribbon.service import canonical_form, genus, trace_boundaries


def test_parse_basic_word():
    w = parse_gauss_word("1 2 1 2 / +-")
    assert w.word == (1, 2, 1, 2)
    assert w.signs == ("+", "-")
    assert w.k == 2


def test_parse_renumbers_in_first_occurrence_order():
    w = parse_gauss_word("2 1 2 1 / -+")
    assert w.word == (1, 2, 1, 2)
    assert w.signs == ("-", "+")

    w = parse_gauss_word("7 3 3 7 / +-")
    assert w.word == (1, 2, 2, 1)
    assert w.signs == ("+", "-")


def test_parse_empty_word():
    w = parse_gauss_word("@")
    assert w.k == 0
    assert w.word == ()
    assert format_gauss_word(w) == "@"


@pytest.mark.parametrize(
    "text",
    [
        "1 1 1 / +",
        "1 2 1 / +-",
        "1 x 1 x / +",
        "1 1 / +-",
        "1 1 / *",
        "1 1 +",
        "0 0 / +",
        "/ +",
    ],
)
def test_parse_rejects_malformed_words(text):
    with pytest.raises(ValueError):
        parse_gauss_word(text)


def test_text_form_is_idempotent():
    for text in ["2 1 2 1 / -+", "1 1 / -", "3 3 1 2 1 2 / +--", "@"]:
        w = parse_gauss_word(text)
        assert parse_gauss_word(format_gauss_word(w)) == w
        assert format_gauss_word(parse_gauss_word(format_gauss_word(w))) == format_gauss_word(w)


def test_gauss_word_validates_structure():
    with pytest.raises(ValueError):
        GaussWord(word=(2, 1, 2, 1), signs=("+", "+"))
    with pytest.raises(ValueError):
        GaussWord(word=(1, 1, 2), signs=("+",))
    with pytest.raises(ValueError):
        GaussWord(word=(1, 1), signs=("x",))


@pytest.mark.parametrize("k,expected", [(0, 1), (1, 2), (2, 12), (3, 120), (4, 1680)])
def test_enumeration_counts(k, expected):
    words = list(enumerate_gauss_words(k))
    assert len(words) == expected == gauss_word_count(k)
    assert len(set(words)) == expected


def test_enumeration_is_lexicographic():
    words = list(enumerate_gauss_words(3))
    keys = [w.sort_key() for w in words]
    assert keys == sorted(keys)


def test_prefix_shards_cover_the_stream():
    full = list(enumerate_gauss_words(3))
    sharded = []
    for prefix in gauss_word_prefixes(3, 3):
        sharded.extend(enumerate_gauss_words(3, prefix))
    assert sharded == full


def test_prefix_must_be_valid():
    with pytest.raises(ValueError):
        list(enumerate_gauss_words(2, (2,)))
    with pytest.raises(ValueError):
        list(enumerate_gauss_words(2, (1, 1, 1)))


def test_word_maps_have_expected_size():
    for k in range(1, 4):
        for w in enumerate_gauss_words(k):
            m = word_to_map(w)
            assert m.dart_count == 4 * k
            assert m.vertex_count == k
            assert m.edge_count == 2 * k


def test_empty_word_maps_to_annulus():
    m = word_to_map(parse_gauss_word("@"))
    assert m.is_annulus
    assert trace_boundaries(m).b == 2


@pytest.mark.parametrize("text", ["1 1 / +", "1 1 / -"])
def test_single_crossing_is_figure_eight(text):
    m = word_to_map(parse_gauss_word(text))
    assert trace_boundaries(m).b == 3
    assert genus(m) == 0


def test_rotation_flips_the_moved_label():
    w = parse_gauss_word("1 1 2 2 / ++")
    assert rotate_gauss_word(w, 1) == parse_gauss_word("1 2 2 1 / -+")
    assert rotate_gauss_word(w, 2) == w
    assert rotate_gauss_word(w, 4) == w


def test_reversal_flips_every_sign():
    w = parse_gauss_word("1 2 1 2 / ++")
    assert reverse_gauss_word(w) == parse_gauss_word("1 2 1 2 / --")


def test_rotation_and_reversal_preserve_the_map():
    for k in range(1, 4):
        for w in enumerate_gauss_words(k):
            key = canonical_form(word_to_map(w))
            assert canonical_form(word_to_map(reverse_gauss_word(w))) == key
            for s in range(1, 2 * k):
                assert canonical_form(word_to_map(rotate_gauss_word(w, s))) == key


def test_dihedral_minimality_matches_brute_force():
    for k in range(0, 4):
        for w in enumerate_gauss_words(k):
            n = max(1, 2 * k)
            variants = [rotate_gauss_word(w, s) for s in range(n)]
            variants += [rotate_gauss_word(reverse_gauss_word(w), s) for s in range(n)]
            least = min(v.sort_key() for v in variants)
            assert is_dihedral_minimal(w) == (w.sort_key() == least)
