# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

"""Built-in cocommutative and commutative instances on words.

Both instances have the words in the letters a, b, c, ... as basis; a word is
labeled by its letters and the empty word by ``1``. The tensor instance
concatenates words and makes every letter primitive; the shuffle instance
shuffles words and deconcatenates them. They are graded duals of each other.
"""

from __future__ import annotations

import functools
import itertools
import logging
import string
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Literal

from hopf_adams.algebra import Element, GradedBasis, HopfData, Tensor, evaluate_word
from hopf_adams.errors import HopfError
from hopf_adams.grading import MultiDegree, degrees_up_to, graded_compare
from hopf_adams.linalg import ZERO
from hopf_adams.pbw import Generator, GeneratorFamily
from hopf_adams.report import Report
from hopf_adams.words import Alphabet, Word, bracket_tree, compare_letters, is_lyndon

logger = logging.getLogger(__name__)

Kind = Literal["tensor", "shuffle"]
UNIT = "1"


@dataclass(frozen=True)
class InstanceSpec:
    """Kind, generator degrees and part-sum bound of a built-in instance."""

    kind: Kind
    degrees: tuple[MultiDegree, ...]
    bound: int

    def __post_init__(self: InstanceSpec) -> None:
        """Validate the generators."""
        if self.kind not in {"tensor", "shuffle"}:
            msg = f"unknown instance kind {self.kind!r}"
            raise HopfError(msg)
        if not self.degrees:
            msg = "an instance needs at least one generator"
            raise HopfError(msg)
        if len(self.degrees) > len(string.ascii_lowercase):
            msg = f"at most {len(string.ascii_lowercase)} generators are supported"
            raise HopfError(msg)
        if any(degree.is_zero() for degree in self.degrees):
            msg = "generator degrees must be nonzero"
            raise HopfError(msg)
        if len({degree.rank for degree in self.degrees}) != 1:
            msg = "generator degrees have different ranks"
            raise HopfError(msg)
        if self.bound < 0:
            msg = f"negative bound {self.bound}"
            raise HopfError(msg)

    @classmethod
    def of(cls: type[InstanceSpec], kind: Kind, degrees: Sequence, bound: int) -> InstanceSpec:
        """Build from plain degrees such as ``[1, 2]`` or ``[(1, 0), (0, 1)]``."""
        return cls(kind, tuple(MultiDegree.coerce(d) for d in degrees), bound)

    @property
    def rank(self: InstanceSpec) -> int:
        """Grading rank."""
        return self.degrees[0].rank

    @property
    def name(self: InstanceSpec) -> str:
        """Display name, e.g. ``tensor[1,2]<=4``."""
        return f"{self.kind}[{';'.join(str(d) for d in self.degrees)}]<={self.bound}"


def instance_alphabet(spec: InstanceSpec) -> Alphabet:
    """The letters a, b, c, ... with the generator degrees."""
    return Alphabet(spec.kind, tuple(string.ascii_lowercase[: len(spec.degrees)]), spec.degrees)


def word_label(word: Word) -> str:
    """Concatenated letters; ``1`` for the empty word."""
    return "".join(word.alphabet.labels[x] for x in word.letters) or UNIT


def _words(spec: InstanceSpec) -> tuple[Alphabet, dict[MultiDegree, list[Word]]]:
    alphabet = instance_alphabet(spec)
    strata = {
        degree: list(alphabet.words_of_degree(degree))
        for degree in degrees_up_to(spec.rank, spec.bound)
    }
    return alphabet, strata


def _graded_basis(spec: InstanceSpec, strata: dict[MultiDegree, list[Word]]) -> GradedBasis:
    return GradedBasis(
        {degree: [word_label(w) for w in words] for degree, words in strata.items()},
        spec.bound,
        spec.rank,
    )


def build_tensor_hopf(spec: InstanceSpec) -> HopfData:
    """Free algebra on primitive letters.

    Parameters
    ----------
    spec: InstanceSpec
        A tensor instance.

    Returns
    -------
    HopfData
        Concatenation product; the coproduct of a word sums u_S (x) u_T over
        the splittings of its positions into two subsequences.

    Raises
    ------
    HopfError
        If the spec is not of kind tensor.

    """
    if spec.kind != "tensor":
        msg = f"expected a tensor instance, got {spec.kind}"
        raise HopfError(msg)
    _, strata = _words(spec)
    basis = _graded_basis(spec, strata)
    words = [w for ws in strata.values() for w in ws]
    product = {}
    for u, v in itertools.product(words, repeat=2):
        if basis.within(u.degree + v.degree):
            product[(word_label(u), word_label(v))] = Element.monomial(word_label(u + v))
    coproduct = {}
    for w in words:
        terms = []
        for mask in itertools.product((False, True), repeat=w.length):
            left = Word(w.alphabet, tuple(x for x, m in zip(w.letters, mask) if m))
            right = Word(w.alphabet, tuple(x for x, m in zip(w.letters, mask) if not m))
            terms.append(((word_label(left), word_label(right)), 1))
        coproduct[word_label(w)] = Tensor(terms)
    logger.debug("built %s", spec.name)
    return HopfData(spec.name, basis, product, coproduct)


def shuffles(u: Sequence[int], v: Sequence[int]) -> list[tuple[int, ...]]:
    """All interleavings of u and v, with repetition."""
    n = len(u) + len(v)
    result = []
    for positions in itertools.combinations(range(n), len(u)):
        chosen = set(positions)
        left, right = iter(u), iter(v)
        result.append(tuple(next(left) if k in chosen else next(right) for k in range(n)))
    return result


def build_shuffle_hopf(spec: InstanceSpec) -> HopfData:
    """Shuffle algebra with the deconcatenation coproduct.

    Parameters
    ----------
    spec: InstanceSpec
        A shuffle instance.

    Returns
    -------
    HopfData
        The commutative instance dual to the tensor instance.

    Raises
    ------
    HopfError
        If the spec is not of kind shuffle.

    """
    if spec.kind != "shuffle":
        msg = f"expected a shuffle instance, got {spec.kind}"
        raise HopfError(msg)
    alphabet, strata = _words(spec)
    basis = _graded_basis(spec, strata)
    words = [w for ws in strata.values() for w in ws]
    product = {}
    for u, v in itertools.product(words, repeat=2):
        if basis.within(u.degree + v.degree):
            product[(word_label(u), word_label(v))] = Element(
                (word_label(Word(alphabet, w)), 1) for w in shuffles(u.letters, v.letters)
            )
    coproduct = {
        word_label(w): Tensor(((word_label(w[:i]), word_label(w[i:])), 1) for i in range(w.length + 1))
        for w in words
    }
    logger.debug("built %s", spec.name)
    return HopfData(spec.name, basis, product, coproduct)


def build_instance(spec: InstanceSpec) -> HopfData:
    """Dispatch on the instance kind."""
    if spec.kind == "tensor":
        return build_tensor_hopf(spec)
    return build_shuffle_hopf(spec)


def check_duality(tensor: HopfData, shuffle: HopfData) -> Report:
    """Check that the word pairing <u, v> = [u = v] is a bialgebra pairing.

    Parameters
    ----------
    tensor: HopfData
        A tensor instance.
    shuffle: HopfData
        The shuffle instance on the same generators and bound.

    Returns
    -------
    Report
        Children ``product`` (<ab, c> = <a (x) b, D c>) and ``coproduct``
        (<D a, b (x) c> = <a, b c>).

    """
    report = Report(f"duality {tensor.name} / {shuffle.name}")
    strata = report.child("strata")
    strata.tick()
    if list(tensor.basis.all_labels()) != list(shuffle.basis.all_labels()):
        strata.fail("the instances have different word bases")
        return report
    basis = tensor.basis
    labels = list(basis.all_labels())

    products = report.child("product")
    coproducts = report.child("coproduct")
    for a, b in itertools.product(labels, repeat=2):
        if not basis.within(basis.degree_of(a) + basis.degree_of(b)):
            continue
        for c in basis.labels(basis.degree_of(a) + basis.degree_of(b)):
            products.tick()
            lhs = tensor.product.get((a, b), Element()).coefficient(c)
            rhs = _tensor_coefficient(shuffle.coproduct[c], a, b)
            if lhs != rhs:
                products.fail("<ab, c> differs from <a (x) b, D(c)>", a=a, b=b, c=c, left=lhs, right=rhs)
            coproducts.tick()
            lhs = _tensor_coefficient(tensor.coproduct[c], a, b)
            rhs = shuffle.product.get((a, b), Element()).coefficient(c)
            if lhs != rhs:
                coproducts.fail("<D(c), a (x) b> differs from <c, ab>", a=a, b=b, c=c, left=lhs, right=rhs)
    return report


def _tensor_coefficient(tensor: Tensor, left: str, right: str) -> object:
    return dict(tensor.items()).get((left, right), ZERO)


def _lyndon_words(spec: InstanceSpec) -> list[Word]:
    _, strata = _words(spec)
    return [w for degree, ws in strata.items() if not degree.is_zero() for w in ws if is_lyndon(w)]


def _within_degree(u: Word, v: Word) -> int:
    return int(compare_letters(u.letters, v.letters))


def cocommutative_family(hopf: HopfData, spec: InstanceSpec) -> GeneratorFamily:
    """Bracketed Lyndon words of the tensor instance, larger degree first.

    The brackets are primitive and form a basis of the free Lie algebra on
    the letters, so their sorted products form a basis for any order.
    """
    alphabet = instance_alphabet(spec)
    images = {i: Element.monomial(label) for i, label in enumerate(alphabet.labels)}

    def order(u: Word, v: Word) -> int:
        if u.degree != v.degree:
            return -int(graded_compare(u.degree, v.degree))
        return _within_degree(u, v)

    words = sorted(_lyndon_words(spec), key=functools.cmp_to_key(order))
    return GeneratorFamily(
        [
            Generator(f"[{word_label(w)}]", w.degree, evaluate_word(hopf, images, bracket_tree(w)), None, w)
            for w in words
        ],
        spec.rank,
    )


def commutative_family(hopf: HopfData, spec: InstanceSpec) -> GeneratorFamily:
    """Lyndon words of the shuffle instance, smaller degree first.

    They span a complement of the square of the augmentation ideal.
    """

    def order(u: Word, v: Word) -> int:
        if u.degree != v.degree:
            return int(graded_compare(u.degree, v.degree))
        return _within_degree(u, v)

    words = sorted(_lyndon_words(spec), key=functools.cmp_to_key(order))
    return GeneratorFamily(
        [Generator(word_label(w), w.degree, hopf.element(word_label(w)), None, w) for w in words],
        spec.rank,
    )
