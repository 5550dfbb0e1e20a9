# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import pytest
from hypothesis import given
from strategies import AB, ABC, deg, word, words

from hopf_adams.errors import AlphabetMismatchError, WordError
from hopf_adams.grading import Ordering
from hopf_adams.words import (
    Alphabet,
    Leaf,
    Node,
    bracket_tree,
    compare_letters,
    is_lyndon,
    lyndon_factorize,
    pseudo_lex_compare,
    shirshov_factorize,
)


class TestAlphabet:
    def test_rejects_degree_zero_letters(self):
        with pytest.raises(WordError):
            Alphabet("z", ("a",), (deg(0),))

    def test_rejects_duplicate_labels(self):
        with pytest.raises(WordError):
            Alphabet("d", ("a", "a"), (deg(1), deg(1)))

    def test_degree_compatibility(self):
        assert ABC.is_degree_compatible()
        assert not Alphabet("ba", ("a", "b"), (deg(2), deg(1))).is_degree_compatible()

    def test_words_of_degree(self):
        found = {str(w) for w in ABC.words_of_degree(deg(2))}
        assert found == {"(a,a)", "(a,b)", "(b,a)", "(b,b)", "(c)"}
        assert len(list(AB.words_of_degree(deg(4)))) == 16

    def test_unknown_letter(self):
        with pytest.raises(WordError):
            AB.parse(["z"])

    def test_word_degree(self):
        assert word(ABC, "acb").degree == deg(4)
        assert word(ABC, "").degree == deg(0)


class TestPseudoLexOrder:
    def test_longer_extension_is_smaller(self):
        assert pseudo_lex_compare(word(AB, "ab"), word(AB, "a")) is Ordering.LESS
        assert pseudo_lex_compare(word(AB, "a"), word(AB, "ab")) is Ordering.GREATER

    def test_first_difference_decides(self):
        assert pseudo_lex_compare(word(AB, "ab"), word(AB, "b")) is Ordering.LESS
        assert pseudo_lex_compare(word(AB, "ba"), word(AB, "bb")) is Ordering.LESS

    def test_alphabets_must_match(self):
        with pytest.raises(AlphabetMismatchError):
            pseudo_lex_compare(word(AB, "a"), word(ABC, "a"))

    @given(words(), words())
    def test_total(self, u, v):
        assert pseudo_lex_compare(u, v) == -pseudo_lex_compare(v, u)
        assert (pseudo_lex_compare(u, v) is Ordering.EQUAL) == (u == v)

    @given(words(), words(), words())
    def test_transitive(self, u, v, w):
        if pseudo_lex_compare(u, v) is Ordering.LESS and pseudo_lex_compare(v, w) is Ordering.LESS:
            assert pseudo_lex_compare(u, w) is Ordering.LESS


class TestLyndon:
    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ("a", True),
            ("b", True),
            ("ba", True),
            ("bba", True),
            ("baa", True),
            ("ab", False),
            ("aa", False),
            ("bab", False),
            ("abb", False),
        ],
    )
    def test_is_lyndon(self, text, expected):
        assert is_lyndon(word(AB, text)) is expected

    def test_empty_word(self):
        with pytest.raises(WordError):
            is_lyndon(word(AB, ""))

    def test_shirshov(self):
        left, right = shirshov_factorize(word(AB, "bba"))
        assert (str(left), str(right)) == ("(b)", "(b,a)")
        left, right = shirshov_factorize(word(AB, "baa"))
        assert (str(left), str(right)) == ("(b,a)", "(a)")

    def test_shirshov_needs_two_letters(self):
        with pytest.raises(WordError):
            shirshov_factorize(word(AB, "b"))

    def test_factorize(self):
        assert [str(f) for f in lyndon_factorize(word(AB, "ab"))] == ["(a)", "(b)"]
        assert [str(f) for f in lyndon_factorize(word(AB, "aba"))] == ["(a)", "(b,a)"]
        assert lyndon_factorize(word(AB, "")) == []

    @given(words(min_size=1))
    def test_factorization_properties(self, u):
        factors = lyndon_factorize(u)
        assert sum((f.letters for f in factors), ()) == u.letters
        assert all(is_lyndon(f) for f in factors)
        for first, second in zip(factors, factors[1:]):
            assert compare_letters(first.letters, second.letters) is not Ordering.GREATER

    @given(words(min_size=2))
    def test_shirshov_factors_are_lyndon(self, u):
        if is_lyndon(u):
            left, right = shirshov_factorize(u)
            assert left + right == u
            assert is_lyndon(left)
            assert is_lyndon(right)


class TestBracketTree:
    def test_shape(self):
        tree = bracket_tree(word(AB, "bba"))
        assert tree == Node(Leaf(1), Node(Leaf(1), Leaf(0)))

    @given(words(min_size=1))
    def test_frontier(self, u):
        if is_lyndon(u):
            assert bracket_tree(u).frontier() == u.letters

    def test_rejects_non_lyndon(self):
        with pytest.raises(WordError):
            bracket_tree(word(AB, "ab"))
