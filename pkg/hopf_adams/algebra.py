# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

"""Connected graded Hopf algebras given by structure constants.

A ``HopfData`` holds a labeled basis per degree up to a part-sum bound, the
products of basis elements and the coproducts of basis elements. Labels are
unique across the whole basis. Elements are sparse label to scalar maps;
tensors are sparse (left label, right label) to scalar maps.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable, Iterator, Mapping, Sequence
from functools import cached_property
from typing import Any, Union

from sympy.polys.matrices import DomainMatrix

from hopf_adams.errors import (
    BoundMismatchError,
    ConnectednessError,
    DegreeOverflowError,
    HopfError,
    MissingImageError,
)
from hopf_adams.grading import MultiDegree, degrees_up_to
from hopf_adams.linalg import (
    ONE,
    ZERO,
    format_scalar,
    identity,
    matrices_equal,
    matrix_columns,
    scalar,
    sparse_matrix,
    to_lists,
    zeros,
)
from hopf_adams.report import Report
from hopf_adams.words import Leaf, Node, ShirshovTree, Word

logger = logging.getLogger(__name__)


class GradedBasis:
    """Ordered basis labels for every degree with part-sum up to ``bound``."""

    def __init__(
        self: GradedBasis,
        strata: Mapping[MultiDegree, Sequence[str]],
        bound: int,
        rank: int = 1,
    ) -> None:
        """Store the strata, filling absent degrees with empty strata.

        Parameters
        ----------
        strata: Mapping[MultiDegree, Sequence[str]]
            Basis labels per degree.
        bound: int
            Part-sum bound of the represented degrees.
        rank: int
            Grading rank k of N^k.

        Raises
        ------
        ConnectednessError
            If degree 0 does not have exactly one label.
        HopfError
            If a label repeats or a degree exceeds the bound.

        """
        self.bound = bound
        self.rank = rank
        self.degrees = degrees_up_to(rank, bound)
        self._strata = {degree: tuple(strata.get(degree, ())) for degree in self.degrees}
        for degree in strata:
            if degree not in self._strata:
                msg = f"degree {degree} lies outside the bound {bound}"
                raise HopfError(msg)
        zero = MultiDegree.zero(rank)
        if len(self._strata[zero]) != 1:
            msg = f"degree 0 has dimension {len(self._strata[zero])}, expected 1"
            raise ConnectednessError(msg)
        self._index: dict[str, tuple[MultiDegree, int]] = {}
        for degree in self.degrees:
            for position, label in enumerate(self._strata[degree]):
                if label in self._index:
                    msg = f"basis label {label!r} repeats"
                    raise HopfError(msg)
                self._index[label] = (degree, position)

    @property
    def unit(self: GradedBasis) -> str:
        """The label of the degree 0 basis element."""
        return self._strata[MultiDegree.zero(self.rank)][0]

    @property
    def zero_degree(self: GradedBasis) -> MultiDegree:
        """The zero degree."""
        return MultiDegree.zero(self.rank)

    def labels(self: GradedBasis, degree: MultiDegree) -> tuple[str, ...]:
        """Labels of a degree in basis order."""
        return self._strata.get(degree, ())

    def dim(self: GradedBasis, degree: MultiDegree) -> int:
        """Dimension of a degree stratum."""
        return len(self.labels(degree))

    def __contains__(self: GradedBasis, label: object) -> bool:
        """Whether a label belongs to the basis."""
        return label in self._index

    def degree_of(self: GradedBasis, label: str) -> MultiDegree:
        """Degree of a basis label."""
        try:
            return self._index[label][0]
        except KeyError as err:
            msg = f"unknown basis label {label!r}"
            raise HopfError(msg) from err

    def position(self: GradedBasis, label: str) -> int:
        """Index of a label inside its stratum."""
        return self._index[label][1]

    def sort_key(self: GradedBasis, label: str) -> tuple[MultiDegree, int]:
        """Key ordering labels by degree, then basis position."""
        return self._index[label]

    def all_labels(self: GradedBasis) -> Iterator[str]:
        """Every label, degree by degree."""
        for degree in self.degrees:
            yield from self._strata[degree]

    def within(self: GradedBasis, degree: MultiDegree) -> bool:
        """Whether a degree is inside the bound."""
        return degree.total <= self.bound

    def positive_degrees(self: GradedBasis) -> list[MultiDegree]:
        """Degrees other than 0."""
        return [d for d in self.degrees if not d.is_zero()]

    def restrict(self: GradedBasis, bound: int) -> GradedBasis:
        """The same basis cut at a smaller bound."""
        if bound > self.bound:
            msg = f"cannot extend a basis of bound {self.bound} to {bound}"
            raise BoundMismatchError(msg)
        return GradedBasis(
            {d: s for d, s in self._strata.items() if d.total <= bound}, bound, self.rank,
        )

    def __eq__(self: GradedBasis, other: object) -> bool:
        """Equal strata and bounds."""
        if not isinstance(other, GradedBasis):
            return NotImplemented
        if self is other:
            return True
        return self.bound == other.bound and self._strata == other._strata

    __hash__ = None  # type: ignore[assignment]


class Element:
    """A finite linear combination of basis labels."""

    __slots__ = ("_terms",)

    def __init__(self: Element, terms: Mapping[str, Any] | Iterable[tuple[str, Any]] = ()) -> None:
        """Collect terms, merging repeated labels and dropping zeros."""
        collected: dict[str, Any] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for label, coefficient in items:
            value = collected.get(label, ZERO) + scalar(coefficient)
            if value:
                collected[label] = value
            else:
                collected.pop(label, None)
        self._terms = collected

    @classmethod
    def monomial(cls: type[Element], label: str, coefficient: Any = ONE) -> Element:
        """A single basis element times a scalar."""
        return cls({label: coefficient})

    def items(self: Element) -> Iterable[tuple[str, Any]]:
        """(label, coefficient) pairs."""
        return self._terms.items()

    @property
    def support(self: Element) -> set[str]:
        """Labels with nonzero coefficient."""
        return set(self._terms)

    def coefficient(self: Element, label: str) -> Any:
        """Coefficient of a label."""
        return self._terms.get(label, ZERO)

    def __bool__(self: Element) -> bool:
        """False for the zero element."""
        return bool(self._terms)

    def __len__(self: Element) -> int:
        """Number of nonzero terms."""
        return len(self._terms)

    def __add__(self: Element, other: Element) -> Element:
        """Sum."""
        return Element(itertools.chain(self.items(), other.items()))

    def __sub__(self: Element, other: Element) -> Element:
        """Difference."""
        return self + (-other)

    def __neg__(self: Element) -> Element:
        """Additive inverse."""
        return self.scale(-ONE)

    def scale(self: Element, factor: Any) -> Element:
        """Scalar multiple."""
        factor = scalar(factor)
        return Element({label: factor * c for label, c in self.items()})

    def __rmul__(self: Element, factor: Any) -> Element:
        """Scalar multiple written ``c * element``."""
        return self.scale(factor)

    def __eq__(self: Element, other: object) -> bool:
        """Exact equality of coefficients."""
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def restricted(self: Element, labels: Iterable[str]) -> Element:
        """The terms whose label is among the given ones."""
        keep = set(labels)
        return Element({label: c for label, c in self.items() if label in keep})

    def __repr__(self: Element) -> str:
        """Readable linear combination."""
        if not self._terms:
            return "0"
        return " + ".join(f"{format_scalar(c)}*{label}" for label, c in self.items())


class Tensor:
    """A finite linear combination of pairs of basis labels."""

    __slots__ = ("_terms",)

    def __init__(self: Tensor, terms: Mapping[tuple[str, str], Any] | Iterable = ()) -> None:
        """Collect terms, merging repeated pairs and dropping zeros."""
        collected: dict[tuple[str, str], Any] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for pair, coefficient in items:
            value = collected.get(pair, ZERO) + scalar(coefficient)
            if value:
                collected[pair] = value
            else:
                collected.pop(pair, None)
        self._terms = collected

    def items(self: Tensor) -> Iterable[tuple[tuple[str, str], Any]]:
        """((left, right), coefficient) pairs."""
        return self._terms.items()

    def __bool__(self: Tensor) -> bool:
        """False for the zero tensor."""
        return bool(self._terms)

    def __add__(self: Tensor, other: Tensor) -> Tensor:
        """Sum."""
        return Tensor(itertools.chain(self.items(), other.items()))

    def __sub__(self: Tensor, other: Tensor) -> Tensor:
        """Difference."""
        return Tensor(itertools.chain(self.items(), ((p, -c) for p, c in other.items())))

    def scale(self: Tensor, factor: Any) -> Tensor:
        """Scalar multiple."""
        factor = scalar(factor)
        return Tensor({pair: factor * c for pair, c in self.items()})

    def __eq__(self: Tensor, other: object) -> bool:
        """Exact equality of coefficients."""
        if not isinstance(other, Tensor):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def flipped(self: Tensor) -> Tensor:
        """Swap the tensor legs."""
        return Tensor({(right, left): c for (left, right), c in self.items()})

    def canonical(self: Tensor, basis: GradedBasis) -> list[tuple[str, str, Any]]:
        """Terms sorted by the basis order of the left, then the right leg."""
        return sorted(
            ((left, right, c) for (left, right), c in self.items()),
            key=lambda term: (basis.sort_key(term[0]), basis.sort_key(term[1])),
        )

    def terms(self: Tensor) -> list[tuple[Element, Element, Any]]:
        """Terms as (left element, right element, coefficient)."""
        return [
            (Element.monomial(left), Element.monomial(right), c)
            for (left, right), c in self.items()
        ]

    def __repr__(self: Tensor) -> str:
        """Readable linear combination."""
        if not self._terms:
            return "0"
        return " + ".join(f"{format_scalar(c)}*{l}(x){r}" for (l, r), c in self.items())


class GradedMap:
    """A degree preserving linear endomorphism, one square matrix per degree.

    Column j of the block of a degree is the image of the j-th basis label of
    that degree.
    """

    def __init__(self: GradedMap, basis: GradedBasis, blocks: Mapping[MultiDegree, DomainMatrix]) -> None:
        """Store the blocks; absent degrees are zero blocks."""
        self.basis = basis
        self.blocks: dict[MultiDegree, DomainMatrix] = {}
        for degree in basis.degrees:
            n = basis.dim(degree)
            block = blocks.get(degree)
            if block is None:
                block = zeros(n)
            elif block.shape != (n, n):
                msg = f"block of degree {degree} has shape {block.shape}, expected {(n, n)}"
                raise HopfError(msg)
            self.blocks[degree] = block.to_sparse()

    @classmethod
    def identity(cls: type[GradedMap], basis: GradedBasis) -> GradedMap:
        """The identity map."""
        return cls(basis, {d: identity(basis.dim(d)) for d in basis.degrees})

    @classmethod
    def zero(cls: type[GradedMap], basis: GradedBasis) -> GradedMap:
        """The zero map."""
        return cls(basis, {})

    @classmethod
    def unit(cls: type[GradedMap], basis: GradedBasis) -> GradedMap:
        """Unit composed with counit: identity on degree 0, zero elsewhere."""
        return cls(basis, {basis.zero_degree: identity(1)})

    @classmethod
    def from_images(cls: type[GradedMap], basis: GradedBasis, images: Mapping[str, Element]) -> GradedMap:
        """Build a map from the images of basis labels."""
        blocks = {}
        for degree in basis.degrees:
            entries = {}
            for j, label in enumerate(basis.labels(degree)):
                for target, c in images.get(label, Element()).items():
                    if basis.degree_of(target) != degree:
                        msg = f"image of {label} leaves degree {degree}"
                        raise HopfError(msg)
                    entries[(basis.position(target), j)] = c
            blocks[degree] = sparse_matrix(entries, (basis.dim(degree), basis.dim(degree)))
        return cls(basis, blocks)

    def block(self: GradedMap, degree: MultiDegree) -> DomainMatrix:
        """The matrix of a degree."""
        return self.blocks[degree]

    @cached_property
    def _columns(self: GradedMap) -> dict[str, list[tuple[str, Any]]]:
        columns = {}
        for degree, block in self.blocks.items():
            labels = self.basis.labels(degree)
            cols = matrix_columns(block)
            for j, label in enumerate(labels):
                columns[label] = [(labels[i], c) for i, c in cols.get(j, {}).items()]
        return columns

    def column(self: GradedMap, label: str) -> list[tuple[str, Any]]:
        """Image of a basis label as (label, coefficient) pairs."""
        return self._columns[label]

    def apply(self: GradedMap, element: Element) -> Element:
        """Image of an element."""
        return Element(
            (target, c * a)
            for label, c in element.items()
            for target, a in self.column(label)
        )

    def _check(self: GradedMap, other: GradedMap) -> None:
        if self.basis != other.basis:
            msg = "graded maps over different bases or bounds"
            raise BoundMismatchError(msg)

    def __add__(self: GradedMap, other: GradedMap) -> GradedMap:
        """Sum."""
        self._check(other)
        return GradedMap(self.basis, {d: self.blocks[d] + other.blocks[d] for d in self.blocks})

    def __sub__(self: GradedMap, other: GradedMap) -> GradedMap:
        """Difference."""
        self._check(other)
        return GradedMap(self.basis, {d: self.blocks[d] - other.blocks[d] for d in self.blocks})

    def __neg__(self: GradedMap) -> GradedMap:
        """Additive inverse."""
        return self.scale(-ONE)

    def scale(self: GradedMap, factor: Any) -> GradedMap:
        """Scalar multiple."""
        factor = scalar(factor)
        return GradedMap(self.basis, {d: b * factor for d, b in self.blocks.items()})

    def __rmul__(self: GradedMap, factor: Any) -> GradedMap:
        """Scalar multiple written ``c * f``."""
        return self.scale(factor)

    def __matmul__(self: GradedMap, other: GradedMap) -> GradedMap:
        """Composition: (f @ g)(x) = f(g(x))."""
        self._check(other)
        return GradedMap(self.basis, {d: self.blocks[d] * other.blocks[d] for d in self.blocks})

    def __eq__(self: GradedMap, other: object) -> bool:
        """Exact equality in every degree."""
        if not isinstance(other, GradedMap):
            return NotImplemented
        return self.basis == other.basis and all(
            matrices_equal(self.blocks[d], other.blocks[d]) for d in self.blocks
        )

    __hash__ = None  # type: ignore[assignment]

    def first_difference(self: GradedMap, other: GradedMap) -> MultiDegree | None:
        """The lowest degree where two maps differ."""
        self._check(other)
        for degree in self.basis.degrees:
            if not matrices_equal(self.blocks[degree], other.blocks[degree]):
                return degree
        return None

    def to_json(self: GradedMap) -> dict[str, list[list[str]]]:
        """Serialize as {degree: matrix of "p/q" strings}."""
        return {
            str(degree): [[format_scalar(v) for v in row] for row in to_lists(block)]
            for degree, block in self.blocks.items()
        }


class HopfData:
    """A connected graded Hopf algebra given by structure constants.

    Parameters
    ----------
    name: str
        Display name of the instance.
    basis: GradedBasis
        Labeled basis per degree.
    product: Mapping[tuple[str, str], Element]
        Product of basis labels; absent pairs multiply to 0.
    coproduct: Mapping[str, Tensor]
        Coproduct of every basis label.

    """

    def __init__(
        self: HopfData,
        name: str,
        basis: GradedBasis,
        product: Mapping[tuple[str, str], Element],
        coproduct: Mapping[str, Tensor],
    ) -> None:
        """Store the structure constants."""
        self.name = name
        self.basis = basis
        self.product = dict(product)
        self.coproduct = {label: coproduct.get(label, Tensor()) for label in basis.all_labels()}

    @property
    def unit(self: HopfData) -> str:
        """The unit label."""
        return self.basis.unit

    @property
    def bound(self: HopfData) -> int:
        """Part-sum bound."""
        return self.basis.bound

    @property
    def rank(self: HopfData) -> int:
        """Grading rank."""
        return self.basis.rank

    def counit(self: HopfData, label: str) -> Any:
        """Counit of a basis label: 1 on the unit, 0 on positive degrees."""
        return ONE if label == self.unit else ZERO

    def counit_value(self: HopfData, element: Element) -> Any:
        """Counit of an element."""
        return element.coefficient(self.unit)

    def one(self: HopfData) -> Element:
        """The unit element."""
        return Element.monomial(self.unit)

    def element(self: HopfData, label: str, coefficient: Any = ONE) -> Element:
        """A basis element, checking the label."""
        self.basis.degree_of(label)
        return Element.monomial(label, coefficient)

    def degree_of(self: HopfData, element: Element) -> MultiDegree:
        """Degree of a nonzero homogeneous element."""
        degrees = {self.basis.degree_of(label) for label in element.support}
        if len(degrees) != 1:
            msg = f"element {element!r} is not homogeneous"
            raise HopfError(msg)
        return degrees.pop()

    def homogeneous_component(self: HopfData, element: Element, degree: MultiDegree) -> Element:
        """The part of an element lying in one degree."""
        return element.restricted(self.basis.labels(degree))

    def with_bound(self: HopfData, bound: int) -> HopfData:
        """The truncation to a smaller bound."""
        basis = self.basis.restrict(bound)
        return HopfData(
            self.name,
            basis,
            {pair: e for pair, e in self.product.items() if pair[0] in basis and pair[1] in basis
             and basis.within(basis.degree_of(pair[0]) + basis.degree_of(pair[1]))},
            {label: self.coproduct[label] for label in basis.all_labels()},
        )


def multiply(hopf: HopfData, a: Element, b: Element) -> Element:
    """Multiply two elements.

    Parameters
    ----------
    hopf: HopfData
        The ambient algebra.
    a: Element
        Left factor.
    b: Element
        Right factor.

    Returns
    -------
    Element
        The bilinear extension of the stored products.

    Raises
    ------
    DegreeOverflowError
        If a product of terms leaves the bound.

    """
    basis = hopf.basis
    terms: list[tuple[str, Any]] = []
    for left, c in a.items():
        left_degree = basis.degree_of(left)
        for right, d in b.items():
            if not basis.within(left_degree + basis.degree_of(right)):
                msg = f"{left}*{right} exceeds the degree bound {basis.bound}"
                raise DegreeOverflowError(msg)
            cd = c * d
            terms.extend((label, cd * e) for label, e in hopf.product.get((left, right), Element()).items())
    return Element(terms)


def comultiply(hopf: HopfData, a: Element) -> Tensor:
    """Coproduct of an element in canonical merged form.

    Parameters
    ----------
    hopf: HopfData
        The ambient algebra.
    a: Element
        Any element within the bound.

    Returns
    -------
    Tensor
        Linear extension of the stored coproducts.

    """
    return Tensor(
        (pair, c * e)
        for label, c in a.items()
        for pair, e in hopf.coproduct[label].items()
    )


def tensor_multiply(hopf: HopfData, s: Tensor, t: Tensor) -> Tensor:
    """Product in H (x) H: (a (x) b)(c (x) d) = ac (x) bd."""
    terms = []
    for (a, b), c in s.items():
        for (x, y), d in t.items():
            left = multiply(hopf, Element.monomial(a), Element.monomial(x))
            right = multiply(hopf, Element.monomial(b), Element.monomial(y))
            terms.extend(
                ((u, v), c * d * e * f)
                for u, e in left.items()
                for v, f in right.items()
            )
    return Tensor(terms)


WordLike = Union[Word, ShirshovTree]


def evaluate_word(hopf: HopfData, images: Mapping[int, Element], w: WordLike) -> Element:
    """Evaluate a word as a product, or a bracketing tree as nested commutators.

    Parameters
    ----------
    hopf: HopfData
        The target algebra.
    images: Mapping[int, Element]
        Image of each letter index.
    w: Word or ShirshovTree
        What to evaluate.

    Returns
    -------
    Element
        The product of letter images for a word, [left, right] for a node.

    Raises
    ------
    MissingImageError
        If a letter has no image.

    """
    if isinstance(w, Word):
        result = hopf.one()
        for letter in w.letters:
            result = multiply(hopf, result, _image(images, letter))
        return result
    if isinstance(w, Leaf):
        return _image(images, w.letter)
    if isinstance(w, Node):
        left = evaluate_word(hopf, images, w.left)
        right = evaluate_word(hopf, images, w.right)
        return multiply(hopf, left, right) - multiply(hopf, right, left)
    msg = f"cannot evaluate {w!r}"
    raise TypeError(msg)


def _image(images: Mapping[int, Element], letter: int) -> Element:
    try:
        return images[letter]
    except KeyError as err:
        msg = f"letter {letter} has no image"
        raise MissingImageError(msg) from err


def _positive_tuples(hopf: HopfData, size: int) -> Iterator[tuple[str, ...]]:
    """Tuples of positive degree labels whose degrees sum within the bound."""
    basis = hopf.basis
    positive = [label for label in basis.all_labels() if label != hopf.unit]

    def extend(prefix: tuple[str, ...], total: MultiDegree) -> Iterator[tuple[str, ...]]:
        if len(prefix) == size:
            yield prefix
            return
        for label in positive:
            degree = total + basis.degree_of(label)
            if basis.within(degree):
                yield from extend((*prefix, label), degree)

    yield from extend((), basis.zero_degree)


def verify_bialgebra(hopf: HopfData) -> Report:
    """Check the connected graded bialgebra axioms on every basis label.

    Parameters
    ----------
    hopf: HopfData
        The algebra to check.

    Returns
    -------
    Report
        One child per axiom; each keeps its first violation.

    """
    report = Report(f"bialgebra {hopf.name}")
    basis = hopf.basis
    one = hopf.one()

    connected = report.child("connectedness")
    connected.tick()
    if basis.dim(basis.zero_degree) != 1:
        connected.fail("degree 0 is not one dimensional")

    grading = report.child("grading")
    for (left, right), value in hopf.product.items():
        grading.tick()
        expected = basis.degree_of(left) + basis.degree_of(right)
        wrong = [label for label in value.support if basis.degree_of(label) != expected]
        if wrong:
            grading.fail("product leaves the sum degree", left=left, right=right, label=wrong[0])
    for label, tensor in hopf.coproduct.items():
        grading.tick()
        for (a, b), _ in tensor.items():
            if basis.degree_of(a) + basis.degree_of(b) != basis.degree_of(label):
                grading.fail("coproduct term has the wrong degree", label=label, term=f"{a}(x){b}")

    unit_law = report.child("unit")
    counit_law = report.child("counit")
    for label in basis.all_labels():
        x = Element.monomial(label)
        unit_law.tick()
        if multiply(hopf, one, x) != x or multiply(hopf, x, one) != x:
            unit_law.fail("1*x = x*1 = x fails", x=label)
        counit_law.tick()
        delta = hopf.coproduct[label]
        left = Element((b, c * hopf.counit(a)) for (a, b), c in delta.items())
        right = Element((a, c * hopf.counit(b)) for (a, b), c in delta.items())
        if left != x or right != x:
            counit_law.fail("(e (x) id)D(x) = (id (x) e)D(x) = x fails", x=label)

    associativity = report.child("associativity")
    for a, b, c in _positive_tuples(hopf, 3):
        associativity.tick()
        ea, eb, ec = (Element.monomial(t) for t in (a, b, c))
        if multiply(hopf, multiply(hopf, ea, eb), ec) != multiply(hopf, ea, multiply(hopf, eb, ec)):
            associativity.fail("(ab)c = a(bc) fails", a=a, b=b, c=c)
            break

    coassociativity = report.child("coassociativity")
    for label in basis.all_labels():
        coassociativity.tick()
        first: dict[tuple[str, str, str], Any] = {}
        second: dict[tuple[str, str, str], Any] = {}
        for (a, b), c in hopf.coproduct[label].items():
            for (u, v), d in hopf.coproduct[a].items():
                first[(u, v, b)] = first.get((u, v, b), ZERO) + c * d
            for (u, v), d in hopf.coproduct[b].items():
                second[(a, u, v)] = second.get((a, u, v), ZERO) + c * d
        if {k: v for k, v in first.items() if v} != {k: v for k, v in second.items() if v}:
            coassociativity.fail("(D (x) id)D = (id (x) D)D fails", x=label)
            break

    compatibility = report.child("compatibility")
    for a, b in _positive_tuples(hopf, 2):
        compatibility.tick()
        ea, eb = Element.monomial(a), Element.monomial(b)
        lhs = comultiply(hopf, multiply(hopf, ea, eb))
        rhs = tensor_multiply(hopf, hopf.coproduct[a], hopf.coproduct[b])
        if lhs != rhs:
            compatibility.fail("D(ab) = D(a)D(b) fails", a=a, b=b)
            break

    logger.debug("bialgebra check of %s: passed=%s", hopf.name, report.passed)
    return report


def is_commutative(hopf: HopfData) -> tuple[bool, tuple[str, str] | None]:
    """Whether ab = ba for all basis pairs; returns a witness otherwise."""
    for a, b in _positive_tuples(hopf, 2):
        if hopf.product.get((a, b), Element()) != hopf.product.get((b, a), Element()):
            return False, (a, b)
    return True, None


def is_cocommutative(hopf: HopfData) -> tuple[bool, str | None]:
    """Whether the coproduct is invariant under the flip; returns a witness otherwise."""
    for label in hopf.basis.all_labels():
        if hopf.coproduct[label] != hopf.coproduct[label].flipped():
            return False, label
    return True, None
