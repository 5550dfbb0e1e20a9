# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

from hypothesis import strategies as st
from sympy import QQ

from hopf_adams.grading import MultiDegree
from hopf_adams.ssym import Permutation
from hopf_adams.words import Alphabet, Word

AB = Alphabet("ab", ("a", "b"), (MultiDegree.of(1), MultiDegree.of(1)))
ABC = Alphabet("abc", ("a", "b", "c"), (MultiDegree.of(1), MultiDegree.of(1), MultiDegree.of(2)))

T_ORDER_R = ["T:123", "T:213", "T:132", "T:231", "T:312", "T:321"]

PSI2_T_PREC_R = [
    [8, 0, 2, 1, 1, 0],
    [0, 2, 1, -1, 1, 1],
    [0, 0, 4, 0, 0, 2],
    [0, 0, 0, 2, 0, 0],
    [0, 0, 0, 0, 2, 0],
    [0, 0, 0, 0, 0, 2],
]


def deg(*parts):
    return MultiDegree.of(*parts)


def word(alphabet, text):
    return alphabet.parse(list(text))


def degrees(rank=2, max_part=4):
    return st.lists(st.integers(0, max_part), min_size=rank, max_size=rank).map(lambda p: MultiDegree(tuple(p)))


def words(alphabet=ABC, min_size=0, max_size=7):
    return st.lists(st.integers(0, len(alphabet) - 1), min_size=min_size, max_size=max_size).map(
        lambda letters: Word(alphabet, tuple(letters)),
    )


def sorted_sequences(letters=4, max_size=6):
    return st.lists(st.integers(0, letters - 1), max_size=max_size).map(lambda s: tuple(sorted(s)))


def rationals():
    return st.builds(QQ, st.integers(-20, 20), st.integers(1, 12))


def permutations(max_size=4):
    return st.integers(0, max_size).flatmap(lambda m: st.permutations(range(1, m + 1))).map(
        lambda entries: Permutation(tuple(entries)),
    )
