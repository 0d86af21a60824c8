import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ucycle.core import (
    CycleString,
    Params,
    WordError,
    aperiodic_prefix,
    cyclic_equal,
    format_word,
    is_necklace,
    parse_word,
    rotate_left,
    rotations,
    window_indices,
    windows,
)

from conftest import S1_CYCLE, S1_WORDS, T42_CYCLE, w, words

small_words = st.lists(st.integers(1, 4), min_size=1, max_size=8).map(tuple)


@pytest.mark.parametrize(
    "word, steps, expected",
    [("123", 1, "231"), ("534", 0, "534"), ("4212121", 7, "4212121")],
)
def test_rotate_left(word, steps, expected):
    assert rotate_left(w(word), steps) == w(expected)


def test_rotations_examples():
    assert rotations(w("123")) == words(["123", "231", "312"])
    assert rotations(w("2222")) == {w("2222")}
    assert rotations(w("1212")) == words(["1212", "2121"])


@pytest.mark.parametrize("word, expected", [("112", True), ("121", False), ("1322", True)])
def test_is_necklace(word, expected):
    assert is_necklace(w(word)) is expected


@pytest.mark.parametrize("word, prefix", [("1212", "12"), ("123", "123"), ("3333", "3")])
def test_aperiodic_prefix(word, prefix):
    assert aperiodic_prefix(w(word)) == w(prefix)


def test_windows_examples():
    assert windows(w("1"), n=2) == [w("11")]
    wins = windows(CycleString(w(T42_CYCLE), 4))
    assert wins.count(w("2212")) == 1
    assert set(windows(w(S1_CYCLE), n=3)) == words(S1_WORDS)
    assert len(windows(w(S1_CYCLE), n=3)) == 30


@given(small_words)
def test_full_rotation_is_identity(word):
    assert rotate_left(word, len(word)) == word
    assert len(word) % len(rotations(word)) == 0


@given(small_words)
def test_necklace_is_min_rotation(word):
    brute = min(word[i:] + word[:i] for i in range(len(word)))
    assert is_necklace(word) == (word == brute)


@given(small_words)
def test_aperiodic_prefix_reconstructs(word):
    p = aperiodic_prefix(word)
    assert len(word) % len(p) == 0
    assert p * (len(word) // len(p)) == word
    # no shorter period
    for q in range(1, len(p)):
        if len(word) % q == 0:
            assert word[:q] * (len(word) // q) != word


@given(st.lists(st.integers(1, 3), min_size=1, max_size=12).map(tuple), st.integers(1, 5))
def test_windows_shape_and_indices(cycle, n):
    wins = windows(cycle, n=n)
    assert len(wins) == len(cycle)
    assert all(len(x) == n for x in wins)
    p = Params(n, 3)
    assert list(window_indices(cycle, p)) == [p.index(x) for x in wins]


def test_index_round_trip_is_lexicographic():
    p = Params(3, 3)
    all_words = list(itertools.product(range(1, 4), repeat=3))
    assert [p.index(x) for x in all_words] == list(range(27))
    assert [p.word(i) for i in range(27)] == all_words


def test_params_validation():
    with pytest.raises(WordError):
        Params(0, 3)
    with pytest.raises(WordError):
        Params(3, 1)
    with pytest.raises(WordError):
        Params(40, 9)
    with pytest.raises(WordError):
        Params(3, 3).check((1, 4, 1))


def test_text_format():
    assert format_word((5, 3, 4)) == "534"
    assert format_word((12, 3, 11)) == "12,3,11"
    assert format_word((1, 2), k=10) == "1,2"
    assert parse_word("12,3,11") == (12, 3, 11)
    assert parse_word("534") == (5, 3, 4)
    with pytest.raises(WordError):
        parse_word("5a4")
    with pytest.raises(WordError):
        parse_word("594", k=5)


def test_cyclic_equal():
    assert cyclic_equal((1, 2, 3), (2, 3, 1))
    assert not cyclic_equal((1, 2, 3), (1, 3, 2))
    assert not cyclic_equal((1, 2), (1, 2, 1))
