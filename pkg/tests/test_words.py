from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from anagramfree.core.io import word_from_str, word_to_str
from anagramfree.errors import MorphismStall
from anagramfree.words import (
    DEKKING_3,
    KERANEN,
    KERANEN_A,
    Morphism,
    dekking_prefix,
    free_word,
    iterate_morphism,
    k_anagram_free_word,
    keranen_prefix,
    max_anagram_free_length,
)

from oracles import is_power, word_has_power


def test_morphism_iteration():
    fib = Morphism.from_strings("ab", "a")
    assert word_to_str(iterate_morphism(fib, (0,), 5)) == "abaab"


def test_morphism_stall():
    flat = Morphism.from_strings("a", "b")
    with pytest.raises(MorphismStall):
        iterate_morphism(flat, (0,), 3)


def test_morphism_rejects_bad_images():
    with pytest.raises(ValueError):
        Morphism(2, ((0,), (2,)))
    with pytest.raises(ValueError):
        Morphism(2, ((0,),))


def test_keranen_is_uniform_rotation():
    assert len(KERANEN_A) == 85
    assert all(len(img) == 85 for img in KERANEN.images)
    assert KERANEN.images[1] == tuple((x + 1) % 4 for x in KERANEN.images[0])
    assert word_to_str(keranen_prefix(10)) == "abcacdcbcd"


def test_dekking_images():
    assert DEKKING_3.images == ((0, 0, 1, 2), (1, 1, 2), (0, 2, 2))
    assert set(dekking_prefix(4, 50)) == {0, 1}
    with pytest.raises(ValueError):
        dekking_prefix(5, 10)


def test_checker_examples():
    assert k_anagram_free_word(word_from_str("abcbabc")) is None
    assert k_anagram_free_word(word_from_str("abcbabca")) == (2, 6)
    assert k_anagram_free_word(word_from_str("aa")) == (0, 2)
    assert k_anagram_free_word(word_from_str("abab"), 3) is None
    assert k_anagram_free_word(word_from_str("abbaab"), 3) == (0, 6)


@settings(max_examples=300)
@given(st.lists(st.integers(0, 2), max_size=14), st.integers(2, 4))
def test_word_checker_matches_brute_force(w, k):
    hit = k_anagram_free_word(w, k)
    assert (hit is None) == (not word_has_power(w, k))
    if hit is not None:
        s, L = hit
        assert word_has_power(w[s : s + L], k)
        assert is_power(list(w[s : s + L]), k)
        # nothing starts further left
        assert not any(is_power(list(w[i : i + m]), k) for i in range(s) for m in range(k, len(w) - i + 1, k))


@pytest.mark.parametrize("n", [1, 85, 500])
def test_keranen_prefixes_free(n):
    assert k_anagram_free_word(keranen_prefix(n)) is None


def test_free_word_tiers():
    for z in (2, 3, 4):
        w = free_word(z, 400)
        assert len(w) == 400 and k_anagram_free_word(w, z) is None
    assert len(set(free_word(4, 100))) == 2
    assert free_word(3, 0) == ()


def _brute_max(alphabet, k, cap):
    best = 0
    for n in range(1, cap + 1):
        if not any(not word_has_power(w, k) for w in product(range(alphabet), repeat=n)):
            break
        best = n
    return best


# frozen from _brute_max
@pytest.mark.parametrize("alphabet,k,expected", [(1, 2, 1), (2, 2, 3), (3, 2, 7), (1, 3, 2), (2, 3, 9)])
def test_max_lengths(alphabet, k, expected):
    res = max_anagram_free_length(alphabet, k, cap=60)
    assert res.length == expected and not res.reached_cap
    assert k_anagram_free_word(res.word, k) is None


@pytest.mark.parametrize("alphabet,k", [(2, 2), (3, 2), (2, 3)])
def test_max_lengths_match_oracle(alphabet, k):
    assert max_anagram_free_length(alphabet, k, cap=60).length == _brute_max(alphabet, k, 10)


def test_max_search_hits_cap_on_four_letters():
    res = max_anagram_free_length(4, 2, cap=120)
    assert res.reached_cap and res.length == 120
    assert k_anagram_free_word(res.word) is None
