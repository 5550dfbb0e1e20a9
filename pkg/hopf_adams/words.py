# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

"""Words over a totally ordered graded alphabet.

The order used throughout is the pseudo-lexicographic order: a proper
extension of a word is smaller than the word, otherwise the first differing
letter decides. Lyndon words are the words strictly greater than every
nontrivial rotation under this order.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import Union

from hopf_adams.errors import AlphabetMismatchError, WordError
from hopf_adams.grading import MultiDegree, Ordering

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Alphabet:
    """A finite graded alphabet listed in ascending letter order.

    Letter ``i`` is the ``i``-th entry of ``labels``; letters compare by index.
    """

    name: str
    labels: tuple[str, ...]
    degrees: tuple[MultiDegree, ...]

    def __post_init__(self: Alphabet) -> None:
        """Validate the letters."""
        if len(self.labels) != len(self.degrees):
            msg = f"alphabet {self.name}: {len(self.labels)} labels for {len(self.degrees)} degrees"
            raise WordError(msg)
        if len(set(self.labels)) != len(self.labels):
            msg = f"alphabet {self.name}: duplicate letter labels"
            raise WordError(msg)
        for label, degree in zip(self.labels, self.degrees):
            if degree.is_zero():
                msg = f"alphabet {self.name}: letter {label} has degree 0"
                raise WordError(msg)

    def __len__(self: Alphabet) -> int:
        """Number of letters."""
        return len(self.labels)

    @property
    def rank(self: Alphabet) -> int:
        """Grading rank of the letter degrees."""
        return self.degrees[0].rank if self.degrees else 1

    def index(self: Alphabet, label: str) -> int:
        """Return the letter with the given label."""
        try:
            return self.labels.index(label)
        except ValueError as err:
            msg = f"alphabet {self.name} has no letter {label!r}"
            raise WordError(msg) from err

    def is_degree_compatible(self: Alphabet) -> bool:
        """Whether a strictly smaller degree always means a smaller letter."""
        return all(
            not self.degrees[j] < self.degrees[i]
            for i in range(len(self))
            for j in range(i + 1, len(self))
        )

    def word(self: Alphabet, *letters: int) -> Word:
        """Build a word from letter indices."""
        return Word(self, tuple(letters))

    def parse(self: Alphabet, labels: Sequence[str]) -> Word:
        """Build a word from letter labels."""
        return Word(self, tuple(self.index(label) for label in labels))

    def words_of_degree(self: Alphabet, degree: MultiDegree) -> Iterator[Word]:
        """Yield every word of exactly the given degree."""
        for letters in _letter_sequences(self, degree):
            yield Word(self, letters)

    def to_json(self: Alphabet) -> list[dict]:
        """Serialize the letters as ``{label, degree}`` objects."""
        return [
            {"label": label, "degree": degree.to_json()}
            for label, degree in zip(self.labels, self.degrees)
        ]


def _letter_sequences(alphabet: Alphabet, degree: MultiDegree) -> Iterator[tuple[int, ...]]:
    if degree.is_zero():
        yield ()
        return
    for letter, letter_degree in enumerate(alphabet.degrees):
        if letter_degree.divides(degree):
            for rest in _letter_sequences(alphabet, degree - letter_degree):
                yield (letter, *rest)


@dataclass(frozen=True)
class Word:
    """A finite sequence of letters of an alphabet."""

    alphabet: Alphabet
    letters: tuple[int, ...]

    @property
    def length(self: Word) -> int:
        """Number of letters."""
        return len(self.letters)

    def __len__(self: Word) -> int:
        """Number of letters."""
        return len(self.letters)

    @property
    def degree(self: Word) -> MultiDegree:
        """Sum of the letter degrees."""
        total = MultiDegree.zero(self.alphabet.rank)
        for letter in self.letters:
            total = total + self.alphabet.degrees[letter]
        return total

    def __add__(self: Word, other: Word) -> Word:
        """Concatenate two words."""
        _check_alphabet(self, other)
        return Word(self.alphabet, self.letters + other.letters)

    def __getitem__(self: Word, key: slice) -> Word:
        """Return a factor of the word."""
        return Word(self.alphabet, self.letters[key])

    def __pow__(self: Word, n: int) -> Word:
        """Repeat the word n times."""
        return Word(self.alphabet, self.letters * n)

    def __str__(self: Word) -> str:
        """Letters joined by commas, in parentheses."""
        return "(" + ",".join(self.alphabet.labels[x] for x in self.letters) + ")"

    def to_json(self: Word) -> list[int]:
        """Serialize as an array of letter indices."""
        return list(self.letters)


@dataclass(frozen=True)
class Leaf:
    """A single letter of a bracketing tree."""

    letter: int

    def frontier(self: Leaf) -> tuple[int, ...]:
        """The letters read left to right."""
        return (self.letter,)


@dataclass(frozen=True)
class Node:
    """A bracket of two subtrees."""

    left: ShirshovTree
    right: ShirshovTree

    def frontier(self: Node) -> tuple[int, ...]:
        """The letters read left to right."""
        return self.left.frontier() + self.right.frontier()


ShirshovTree = Union[Leaf, Node]


def _check_alphabet(u: Word, v: Word) -> None:
    if u.alphabet != v.alphabet:
        msg = f"words over alphabets {u.alphabet.name} and {v.alphabet.name}"
        raise AlphabetMismatchError(msg)


def compare_letters(u: Sequence, v: Sequence) -> Ordering:
    """Pseudo-lexicographic comparison of two sequences of ordered letters."""
    for a, b in zip(u, v):
        if a != b:
            return Ordering.LESS if a < b else Ordering.GREATER
    if len(u) == len(v):
        return Ordering.EQUAL
    # the longer sequence extends the shorter one
    return Ordering.LESS if len(u) > len(v) else Ordering.GREATER


def pseudo_lex_compare(u: Word, v: Word) -> Ordering:
    """Compare two words in the pseudo-lexicographic order.

    Parameters
    ----------
    u: Word
        Left operand.
    v: Word
        Right operand.

    Returns
    -------
    Ordering
        LESS when u is a proper extension of v or the first differing letter
        of u is smaller.

    Raises
    ------
    AlphabetMismatchError
        If the words are over different alphabets.

    """
    _check_alphabet(u, v)
    return compare_letters(u.letters, v.letters)


def letters_are_lyndon(letters: Sequence) -> bool:
    """Whether a nonempty sequence is greater than all its nontrivial rotations."""
    n = len(letters)
    return all(
        compare_letters(list(letters[i:]) + list(letters[:i]), letters) is Ordering.LESS
        for i in range(1, n)
    )


def is_lyndon(u: Word) -> bool:
    """Return whether a nonempty word is Lyndon.

    Parameters
    ----------
    u: Word
        The word to test.

    Returns
    -------
    bool
        True when wv is smaller than u for every factorization u = vw with
        v and w nonempty.

    Raises
    ------
    WordError
        If u is empty.

    """
    if not u.letters:
        msg = "the empty word is not Lyndon"
        raise WordError(msg)
    return letters_are_lyndon(u.letters)


def shirshov_factorize(u: Word) -> tuple[Word, Word]:
    """Split a word at its greatest proper suffix.

    Parameters
    ----------
    u: Word
        A word of length at least two.

    Returns
    -------
    tuple[Word, Word]
        The pair (u_L, u_R) with u = u_L u_R and u_R the greatest proper
        suffix.

    Raises
    ------
    WordError
        If u has fewer than two letters.

    """
    if u.length < 2:  # noqa: PLR2004
        msg = f"cannot split {u}: fewer than two letters"
        raise WordError(msg)
    split = 1
    for i in range(2, u.length):
        if compare_letters(u.letters[i:], u.letters[split:]) is Ordering.GREATER:
            split = i
    return u[:split], u[split:]


def lyndon_factor_slices(letters: Sequence) -> list[tuple[int, int]]:
    """Return the (start, stop) slices of the Lyndon factorization of a sequence.

    Duval's algorithm with the letter comparison reversed, so that the
    factors come out nondecreasing in the pseudo-lexicographic order.
    """
    n = len(letters)
    slices = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and letters[k] >= letters[j]:
            k = i if letters[k] > letters[j] else k + 1
            j += 1
        while i <= k:
            slices.append((i, i + j - k))
            i += j - k
    return slices


def lyndon_factorize(u: Word) -> list[Word]:
    """Factor a word into nondecreasing Lyndon words.

    Parameters
    ----------
    u: Word
        Any word; the empty word has no factors.

    Returns
    -------
    list[Word]
        Lyndon factors whose concatenation is u.

    """
    return [u[start:stop] for start, stop in lyndon_factor_slices(u.letters)]


def bracket_tree(u: Word) -> ShirshovTree:
    """Build the bracketing tree of a Lyndon word.

    Parameters
    ----------
    u: Word
        A Lyndon word.

    Returns
    -------
    ShirshovTree
        A leaf for a letter, else the node of the trees of the Shirshov factors.

    Raises
    ------
    WordError
        If u is not Lyndon.

    """
    if not is_lyndon(u):
        msg = f"{u} is not a Lyndon word"
        raise WordError(msg)
    return _bracket(u)


def _bracket(u: Word) -> ShirshovTree:
    if u.length == 1:
        return Leaf(u.letters[0])
    left, right = shirshov_factorize(u)
    return Node(_bracket(left), _bracket(right))
