# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

"""PBW bases indexed by sorted sequences of generators.

A generator family is a list of homogeneous elements z_xi listed in
ascending order, with a height per generator (``None`` means no power of the
generator is ever reducible within the bound). Sorted sequences are tuples of
generator indices that never decrease and repeat each index fewer times than
its height; the product of the corresponding generators is z_V.

Two orders compare sequences: both look at the degree first, then ``L``
decides at the first difference from the left and ``R`` at the first
difference from the right. Bases are always listed ``R``-ascending.
"""

from __future__ import annotations

import functools
import itertools
import logging
import math
from collections import Counter
from collections.abc import Callable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any, Literal

from sympy.polys.matrices import DomainMatrix

from hopf_adams.algebra import (
    Element,
    GradedMap,
    HopfData,
    Tensor,
    comultiply,
    evaluate_word,
    multiply,
)
from hopf_adams.convolution import ConvolutionContext
from hopf_adams.errors import (
    BasisError,
    CharacteristicError,
    DegreeOverflowError,
    GenerationError,
    HopfError,
    SubsequenceError,
)
from hopf_adams.grading import MultiDegree, Ordering, graded_compare
from hopf_adams.linalg import (
    ONE,
    ZERO,
    format_scalar,
    inverse,
    matrix_columns,
    pivot_columns,
    rank,
    sparse_matrix,
    to_lists,
)
from hopf_adams.report import Report
from hopf_adams.words import Alphabet, Word, bracket_tree, compare_letters, is_lyndon

logger = logging.getLogger(__name__)

Seq = tuple[int, ...]
Variant = Literal["L", "R"]


@dataclass(frozen=True, eq=False)
class Generator:
    """One generator z_xi of a PBW family."""

    label: str
    degree: MultiDegree
    element: Element
    height: int | None = None
    word: Word | None = None


class GeneratorFamily:
    """Generators listed in ascending order; index i is the i-th generator."""

    def __init__(self: GeneratorFamily, generators: Sequence[Generator], rank: int = 1) -> None:
        """Validate and store the generators.

        Parameters
        ----------
        generators: Sequence[Generator]
            Generators in ascending order.
        rank: int
            Grading rank.

        Raises
        ------
        HopfError
            If a generator has degree 0, a height below 2 or a repeated label.

        """
        self.generators = tuple(generators)
        self.rank = rank
        self._index = {}
        for i, generator in enumerate(self.generators):
            if generator.degree.is_zero():
                msg = f"generator {generator.label} has degree 0"
                raise HopfError(msg)
            if generator.height is not None and generator.height < 2:  # noqa: PLR2004
                msg = f"generator {generator.label} has height {generator.height} < 2"
                raise HopfError(msg)
            if generator.label in self._index:
                msg = f"generator label {generator.label} repeats"
                raise HopfError(msg)
            self._index[generator.label] = i

    def __len__(self: GeneratorFamily) -> int:
        """Number of generators."""
        return len(self.generators)

    def __getitem__(self: GeneratorFamily, i: int) -> Generator:
        """The i-th generator."""
        return self.generators[i]

    def index(self: GeneratorFamily, label: str) -> int:
        """Position of a generator label."""
        return self._index[label]

    def degree(self: GeneratorFamily, seq: Sequence[int]) -> MultiDegree:
        """Total degree of a sequence."""
        total = MultiDegree.zero(self.rank)
        for i in seq:
            total = total + self.generators[i].degree
        return total

    def is_sorted(self: GeneratorFamily, seq: Sequence[int]) -> bool:
        """Whether a sequence lies in the PBW index set."""
        if any(a > b for a, b in itertools.pairwise(seq)):
            return False
        return all(
            self.generators[i].height is None or count < self.generators[i].height
            for i, count in Counter(seq).items()
        )

    def labels(self: GeneratorFamily, seq: Sequence[int]) -> tuple[str, ...]:
        """Generator labels of a sequence."""
        return tuple(self.generators[i].label for i in seq)


def reorder_family(family: GeneratorFamily, key: Callable[[Generator], Any]) -> GeneratorFamily:
    """The same generators sorted by another key."""
    return GeneratorFamily(sorted(family.generators, key=key), family.rank)


def _sequences(family: GeneratorFamily, degree: MultiDegree, start: int, last_count: int) -> Iterator[Seq]:
    if degree.is_zero():
        yield ()
        return
    for i in range(start, len(family)):
        generator = family[i]
        if not generator.degree.divides(degree):
            continue
        count = last_count + 1 if i == start else 1
        if generator.height is not None and count >= generator.height:
            continue
        for rest in _sequences(family, degree - generator.degree, i, count):
            yield (i, *rest)


def seq_compare(variant: Variant, u: Sequence[int], v: Sequence[int], family: GeneratorFamily) -> Ordering:
    """Compare two sequences under the left or right order.

    Parameters
    ----------
    variant: str
        "L" or "R".
    u: Sequence[int]
        Left operand, sorted or not.
    v: Sequence[int]
        Right operand.
    family: GeneratorFamily
        Family giving the generator degrees.

    Returns
    -------
    Ordering
        Degree decides first; at equal degree the first difference from the
        left (L) or the right (R) decides by generator order.

    """
    du, dv = family.degree(u), family.degree(v)
    if du != dv:
        return graded_compare(du, dv)
    pairs = zip(u, v) if variant == "L" else zip(reversed(u), reversed(v))
    for a, b in pairs:
        if a != b:
            return Ordering.of(a, b)
    return Ordering.of(len(u), len(v))


def seq_key(variant: Variant, family: GeneratorFamily) -> Callable:
    """Sort key for the given order."""
    return functools.cmp_to_key(lambda u, v: int(seq_compare(variant, u, v, family)))


def enumerate_sorted(family: GeneratorFamily, degree: MultiDegree) -> list[Seq]:
    """List the sorted sequences of a degree, R-ascending.

    Parameters
    ----------
    family: GeneratorFamily
        The generators.
    degree: MultiDegree
        The degree to enumerate.

    Returns
    -------
    list[tuple[int, ...]]
        Every sorted sequence of exactly that degree.

    """
    found = list(_sequences(family, degree, 0, 0))
    return sorted(found, key=seq_key("R", family))


def seq_rearrange(family: GeneratorFamily, seq: Sequence[int]) -> tuple[Seq, bool]:
    """Sort a raw sequence; report whether the result respects the heights."""
    ordered = tuple(sorted(seq))
    return ordered, family.is_sorted(ordered)


def _runs(seq: Sequence[int]) -> Counter:
    return Counter(seq)


def seq_binomial(v: Sequence[int], w: Sequence[int]) -> tuple[Any, Seq]:
    """Binomial coefficient of a subsequence and the complementary sequence.

    Parameters
    ----------
    v: Sequence[int]
        A sorted sequence.
    w: Sequence[int]
        A sorted subsequence of v.

    Returns
    -------
    tuple
        The product over runs of binom(p_i, q_i), and V/W.

    Raises
    ------
    SubsequenceError
        If some run of w is longer than the run of v.

    """
    outer, inner = _runs(v), _runs(w)
    coefficient = 1
    for label, q in inner.items():
        p = outer.get(label, 0)
        if q > p:
            msg = f"{tuple(w)} is not a subsequence of {tuple(v)}"
            raise SubsequenceError(msg)
        coefficient *= math.comb(p, q)
    rest = outer - inner
    return ONE * coefficient, tuple(sorted(rest.elements()))


def subsequences(v: Sequence[int]) -> Iterator[Seq]:
    """Every sorted subsequence W | V, one per choice of run multiplicities."""
    runs = sorted(_runs(v).items())
    for counts in itertools.product(*(range(p + 1) for _, p in runs)):
        yield tuple(label for (label, _), q in zip(runs, counts) for _ in range(q))


def convolution_diagonal(v: Sequence[int], first: Callable[[Seq], Any], second: Callable[[Seq], Any]) -> Any:
    """Diagonal coefficient of f1 * f2 on z_V from the diagonal profiles of f1 and f2."""
    total = ZERO
    for w in subsequences(v):
        coefficient, rest = seq_binomial(v, w)
        total += coefficient * first(w) * second(rest)
    return total


class PBWBasis:
    """The basis {z_V} of an algebra and its change of basis data.

    ``expansion(degree)`` has one row per basis label of the algebra and one
    column per sorted sequence, in R-ascending order.
    """

    def __init__(
        self: PBWBasis,
        hopf: HopfData,
        family: GeneratorFamily,
        sequences: Mapping[MultiDegree, list[Seq]],
        expansions: Mapping[MultiDegree, DomainMatrix],
        names: Mapping[Seq, str],
    ) -> None:
        """Store the basis data."""
        self.hopf = hopf
        self.family = family
        self.sequences = dict(sequences)
        self.expansions = dict(expansions)
        self.names = dict(names)
        self._inverses: dict[MultiDegree, DomainMatrix] = {}
        self._coordinates: dict[str, dict[Seq, Any]] = {}

    @property
    def degrees(self: PBWBasis) -> list[MultiDegree]:
        """Degrees covered by the basis."""
        return list(self.sequences)

    def expansion(self: PBWBasis, degree: MultiDegree) -> DomainMatrix:
        """Columns are the z_V of a degree in the algebra basis."""
        return self.expansions[degree]

    def inverse(self: PBWBasis, degree: MultiDegree) -> DomainMatrix:
        """Columns are the algebra basis labels in z_V coordinates."""
        if degree not in self._inverses:
            self._inverses[degree] = inverse(self.expansions[degree])
        return self._inverses[degree]

    def element(self: PBWBasis, seq: Sequence[int]) -> Element:
        """z_V in the algebra basis."""
        seq = tuple(seq)
        degree = self.family.degree(seq)
        j = self.sequences[degree].index(seq)
        labels = self.hopf.basis.labels(degree)
        column = matrix_columns(self.expansions[degree]).get(j, {})
        return Element({labels[i]: c for i, c in column.items()})

    def name(self: PBWBasis, seq: Sequence[int]) -> str:
        """Display name of z_V."""
        return self.names[tuple(seq)]

    def label_coordinates(self: PBWBasis, label: str) -> dict[Seq, Any]:
        """A basis label of the algebra in z_V coordinates."""
        if label not in self._coordinates:
            degree = self.hopf.basis.degree_of(label)
            column = matrix_columns(self.inverse(degree)).get(self.hopf.basis.position(label), {})
            seqs = self.sequences[degree]
            self._coordinates[label] = {seqs[i]: c for i, c in column.items()}
        return self._coordinates[label]

    def coordinates(self: PBWBasis, element: Element) -> dict[Seq, Any]:
        """An element in z_V coordinates."""
        result: dict[Seq, Any] = {}
        for label, c in element.items():
            for seq, a in self.label_coordinates(label).items():
                result[seq] = result.get(seq, ZERO) + c * a
        return {seq: c for seq, c in result.items() if c}

    def tensor_coordinates(self: PBWBasis, tensor: Tensor) -> dict[tuple[Seq, Seq], Any]:
        """A tensor in z_V (x) z_W coordinates."""
        result: dict[tuple[Seq, Seq], Any] = {}
        for (left, right), c in tensor.items():
            for u, a in self.label_coordinates(left).items():
                for v, b in self.label_coordinates(right).items():
                    result[(u, v)] = result.get((u, v), ZERO) + c * a * b
        return {pair: c for pair, c in result.items() if c}

    def to_json(self: PBWBasis) -> dict[str, Any]:
        """Generator table, sequences per degree and expansion matrices."""
        generators = []
        for generator in self.family.generators:
            generators.append({
                "label": generator.label,
                "degree": generator.degree.to_json(),
                "word": generator.word.to_json() if generator.word is not None else None,
                "height": generator.height,
                "element": [[label, format_scalar(c)] for label, c in generator.element.items()],
            })
        return {
            "instance": self.hopf.name,
            "generators": generators,
            "sequences": {
                str(degree): [{"entries": list(seq), "name": self.names[seq]} for seq in seqs]
                for degree, seqs in self.sequences.items()
            },
            "expansions": {
                str(degree): [[format_scalar(v) for v in row] for row in to_lists(matrix)]
                for degree, matrix in self.expansions.items()
            },
        }


def _default_name(family: GeneratorFamily, seq: Seq) -> str:
    if not seq:
        return "z[]"
    return "z[" + " ".join(family.labels(seq)) + "]"


def basis_from_family(
    hopf: HopfData,
    family: GeneratorFamily,
    namer: Callable[[Seq], str] | None = None,
) -> PBWBasis:
    """Assemble the z_V of every degree and check they form a basis.

    Parameters
    ----------
    hopf: HopfData
        The ambient algebra.
    family: GeneratorFamily
        The generators.
    namer: Callable, optional
        Display name of a sequence.

    Returns
    -------
    PBWBasis
        The basis with its expansion matrices.

    Raises
    ------
    BasisError
        If some degree has the wrong number of sequences or a singular
        expansion matrix.

    """
    basis = hopf.basis
    products: dict[Seq, Element] = {(): hopf.one()}

    def z(seq: Seq) -> Element:
        if seq not in products:
            products[seq] = multiply(hopf, z(seq[:-1]), family[seq[-1]].element)
        return products[seq]

    sequences = {}
    expansions = {}
    names = {}
    for degree in basis.degrees:
        seqs = enumerate_sorted(family, degree)
        dim = basis.dim(degree)
        if len(seqs) != dim:
            msg = f"degree {degree}: {len(seqs)} sorted sequences for dimension {dim}"
            raise BasisError(msg)
        entries = {}
        for j, seq in enumerate(seqs):
            for label, c in z(seq).items():
                entries[(basis.position(label), j)] = c
        matrix = sparse_matrix(entries, (dim, dim))
        if rank(matrix) != dim:
            msg = f"degree {degree}: the z_V are linearly dependent"
            raise BasisError(msg)
        sequences[degree] = seqs
        expansions[degree] = matrix
        for seq in seqs:
            names[seq] = namer(seq) if namer is not None else _default_name(family, seq)
        logger.debug("degree %s: %d basis elements", degree, dim)
    return PBWBasis(hopf, family, sequences, expansions, names)


@dataclass
class DegreeLog:
    """What the constructor found in one degree."""

    degree: MultiDegree
    words: int
    kernel_dim: int
    reducible: list[str] = field(default_factory=list)
    generators: list[str] = field(default_factory=list)

    def as_dict(self: DegreeLog) -> dict[str, Any]:
        """JSON friendly form."""
        return {
            "degree": self.degree.to_json(),
            "words": self.words,
            "kernel_dim": self.kernel_dim,
            "reducible": self.reducible,
            "generators": self.generators,
        }


@dataclass
class ConstructionLog:
    """Per degree record of a PBW construction."""

    degrees: list[DegreeLog] = field(default_factory=list)
    heights: dict[str, str] = field(default_factory=dict)
    tie_break: str = "generators of equal degree are ordered by their defining words"

    def as_dict(self: ConstructionLog) -> dict[str, Any]:
        """JSON friendly form."""
        return {
            "degrees": [entry.as_dict() for entry in self.degrees],
            "heights": self.heights,
            "tie_break": self.tie_break,
        }


def construct_pbw(
    hopf: HopfData,
    alphabet: Alphabet,
    images: Mapping[int, Element],
    bound: int | None = None,
    namer: Callable[[GeneratorFamily, Seq], str] | None = None,
    labeler: Callable[[Word], str] = str,
) -> tuple[PBWBasis, ConstructionLog]:
    """Build the PBW basis of irreducible Lyndon words on a generating set.

    Parameters
    ----------
    hopf: HopfData
        The ambient algebra.
    alphabet: Alphabet
        Degree compatible alphabet of generators.
    images: Mapping[int, Element]
        Homogeneous image of every letter.
    bound: int, optional
        Part-sum bound, at most the bound of the algebra.
    namer: Callable, optional
        Display name of a sequence given the family.
    labeler: Callable
        Generator label of an irreducible Lyndon word.

    Returns
    -------
    tuple[PBWBasis, ConstructionLog]
        The basis and the per degree log.

    Raises
    ------
    GenerationError
        If the alphabet is not degree compatible or the letters do not
        generate some degree.
    CharacteristicError
        If a power of an irreducible Lyndon word is reducible.
    DegreeOverflowError
        If the bound exceeds the bound of the algebra.

    """
    if bound is None:
        bound = hopf.bound
    if bound > hopf.bound:
        msg = f"bound {bound} exceeds the algebra bound {hopf.bound}"
        raise DegreeOverflowError(msg)
    if bound < hopf.bound:
        hopf = hopf.with_bound(bound)
    log = ConstructionLog()
    if not alphabet.is_degree_compatible():
        msg = f"alphabet {alphabet.name} is not degree compatible"
        raise GenerationError(msg)
    for letter, letter_degree in enumerate(alphabet.degrees):
        if letter_degree.total > bound:
            continue
        image = images.get(letter)
        if image is None or not image or hopf.degree_of(image) != letter_degree:
            msg = f"letter {alphabet.labels[letter]} needs a nonzero image of degree {letter_degree}"
            raise GenerationError(msg)

    basis = hopf.basis
    values: dict[Seq, Element] = {(): hopf.one()}
    irreducible: dict[Seq, bool] = {}
    lyndon: list[Word] = []
    word_key = functools.cmp_to_key(lambda u, v: int(compare_letters(u.letters, v.letters)))

    for degree in basis.positive_degrees():
        words = sorted(alphabet.words_of_degree(degree), key=word_key)
        for word in words:
            if word.letters not in values:
                prefix = values[word.letters[:-1]]
                values[word.letters] = multiply(hopf, prefix, images[word.letters[-1]])
        dim = basis.dim(degree)
        entries = {
            (basis.position(label), j): c
            for j, word in enumerate(words)
            for label, c in values[word.letters].items()
        }
        matrix = sparse_matrix(entries, (dim, len(words)))
        pivots = set(pivot_columns(matrix))
        if len(pivots) != dim:
            msg = f"degree {degree}: words span {len(pivots)} of {dim} dimensions"
            raise GenerationError(msg)
        entry = DegreeLog(degree, len(words), len(words) - dim)
        for j, word in enumerate(words):
            irreducible[word.letters] = j in pivots
            if j not in pivots:
                entry.reducible.append(str(word))
            elif is_lyndon(word):
                lyndon.append(word)
                entry.generators.append(str(word))
        for word in lyndon:
            n = degree.total // word.degree.total
            if n >= 2 and word.degree * n == degree and not irreducible[(word ** n).letters]:  # noqa: PLR2004
                msg = f"{word}^{n} is reducible: positive characteristic behaviour"
                raise CharacteristicError(msg)
        log.degrees.append(entry)
        logger.debug(
            "degree %s: %d words, kernel dimension %d, %d new generators",
            degree, len(words), entry.kernel_dim, len(entry.generators),
        )

    lyndon.sort(key=word_key)
    generators = []
    for word in lyndon:
        element = evaluate_word(hopf, images, bracket_tree(word))
        generators.append(Generator(labeler(word), word.degree, element, None, word))
        log.heights[labeler(word)] = "inf within bound"
    family = GeneratorFamily(generators, basis.rank)
    seq_namer = functools.partial(namer, family) if namer is not None else None
    return basis_from_family(hopf, family, seq_namer), log


def _below(seq: Sequence[int], bound: int) -> bool:
    return all(i < bound for i in seq)


def verify_pbw_conditions(hopf: HopfData, basis: PBWBasis) -> Report:
    """Check the coproduct, height and commutator conditions of a PBW family.

    Parameters
    ----------
    hopf: HopfData
        The ambient algebra.
    basis: PBWBasis
        The basis to check.

    Returns
    -------
    Report
        Children ``coproduct``, ``height`` and ``commutator``; the commutator
        report carries the measured coefficients a_(nu,mu) in ``data``.

    """
    family = basis.family
    report = Report("pbw conditions")
    one = hopf.one()

    coproduct = report.child("coproduct")
    for xi, generator in enumerate(family.generators):
        z = generator.element
        defect = comultiply(hopf, z) - Tensor(
            [((hopf.unit, label), c) for label, c in z.items()]
            + [((label, hopf.unit), c) for label, c in z.items()],
        )
        coproduct.tick()
        for (u, v), c in basis.tensor_coordinates(defect).items():
            if not u or not v or not _below(u, xi) or not _below(v, xi):
                coproduct.fail(
                    "coproduct leaves H[xi]+ (x) H[xi]+",
                    generator=generator.label, left=family.labels(u), right=family.labels(v), coefficient=c,
                )
                break

    height = report.child("height")
    for xi, generator in enumerate(family.generators):
        h = generator.height
        if h is None or not basis.hopf.basis.within(generator.degree * h):
            continue
        height.tick()
        value = one
        for _ in range(h):
            value = multiply(hopf, value, generator.element)
        for seq in basis.coordinates(value):
            if not _below(seq, xi):
                height.fail("z^h(xi) leaves H[xi]", generator=generator.label, sequence=family.labels(seq))
                break

    commutator = report.child("commutator")
    for mu, nu in itertools.combinations(range(len(family)), 2):
        z_mu, z_nu = family[mu].element, family[nu].element
        if not hopf.basis.within(family[mu].degree + family[nu].degree):
            continue
        commutator.tick()
        forward = basis.coordinates(multiply(hopf, z_nu, z_mu))
        measured = forward.get((mu, nu), ZERO)
        commutator.data[f"{family[nu].label},{family[mu].label}"] = format_scalar(measured)
        difference = basis.coordinates(multiply(hopf, z_nu, z_mu) - multiply(hopf, z_mu, z_nu))
        for seq, c in difference.items():
            if not _below(seq, nu):
                commutator.fail(
                    "z_nu z_mu - z_mu z_nu leaves H[nu]",
                    nu=family[nu].label, mu=family[mu].label, sequence=family.labels(seq), coefficient=c,
                )
                break
    return report


@dataclass
class TriangularReport:
    """A map written in a PBW basis, with its triangularity diagnosis."""

    degree: MultiDegree
    sequences: list[Seq]
    names: list[str]
    matrix: DomainMatrix
    diagonal: list[Any]
    expected: list[Any]
    violation: tuple[int, int, Any] | None = None
    diagonal_mismatch: int | None = None

    @property
    def triangular(self: TriangularReport) -> bool:
        """Whether every entry below the diagonal vanishes."""
        return self.violation is None

    @property
    def passed(self: TriangularReport) -> bool:
        """Triangular with the expected diagonal."""
        return self.triangular and self.diagonal_mismatch is None

    def as_dict(self: TriangularReport) -> dict[str, Any]:
        """JSON friendly form."""
        result: dict[str, Any] = {
            "degree": self.degree.to_json(),
            "basis": self.names,
            "triangular": self.triangular,
            "passed": self.passed,
            "diagonal": [format_scalar(v) for v in self.diagonal],
            "expected": [format_scalar(v) for v in self.expected],
        }
        if self.violation is not None:
            i, j, value = self.violation
            result["violation"] = {"row": self.names[i], "column": self.names[j], "value": format_scalar(value)}
        return result


def change_to_pbw(basis: PBWBasis, f: GradedMap, degree: MultiDegree) -> DomainMatrix:
    """The block of f in the z_V basis of a degree, R-ascending."""
    expansion = basis.expansion(degree)
    return basis.inverse(degree) * (f.block(degree) * expansion)


def triangular_check(
    ctx: ConvolutionContext,
    basis: PBWBasis,
    f: GradedMap,
    expected_diagonal: Callable[[Seq], Any],
    degree: MultiDegree,
) -> TriangularReport:
    """Write f in the z_V basis of a degree and test its triangularity.

    Parameters
    ----------
    ctx: ConvolutionContext
        The ambient algebra; its basis must match the basis f is defined on.
    basis: PBWBasis
        The PBW basis.
    f: GradedMap
        The map to test.
    expected_diagonal: Callable
        Expected diagonal coefficient of each sequence.
    degree: MultiDegree
        The degree to test.

    Returns
    -------
    TriangularReport
        The matrix, its diagonal and the first violation.

    Raises
    ------
    HopfError
        If the map and the basis disagree on the degree stratum.

    """
    if ctx.basis.labels(degree) != basis.hopf.basis.labels(degree):
        msg = f"degree {degree}: map and PBW basis use different strata"
        raise HopfError(msg)
    matrix = change_to_pbw(basis, f, degree)
    seqs = basis.sequences[degree]
    dense = to_lists(matrix)
    report = TriangularReport(
        degree=degree,
        sequences=seqs,
        names=[basis.name(seq) for seq in seqs],
        matrix=matrix,
        diagonal=[dense[i][i] for i in range(len(seqs))],
        expected=[expected_diagonal(seq) for seq in seqs],
    )
    for j in range(len(seqs)):
        for i in range(j + 1, len(seqs)):
            if dense[i][j]:
                report.violation = (i, j, dense[i][j])
                break
        if report.violation is not None:
            break
    for i, (value, expected) in enumerate(zip(report.diagonal, report.expected)):
        if value != expected:
            report.diagonal_mismatch = i
            break
    return report


def triangular_reports(
    ctx: ConvolutionContext,
    basis: PBWBasis,
    f: GradedMap,
    expected_diagonal: Callable[[Seq], Any],
) -> list[TriangularReport]:
    """triangular_check for every degree of the context."""
    return [triangular_check(ctx, basis, f, expected_diagonal, degree) for degree in ctx.basis.degrees]


def _product(hopf: HopfData, family: GeneratorFamily, seq: Sequence[int]) -> Element:
    value = hopf.one()
    for i in seq:
        value = multiply(hopf, value, family[i].element)
    return value


def straightening_defect(hopf: HopfData, basis: PBWBasis, seq: Sequence[int]) -> tuple[Any, list[Seq]]:
    """Expand the product of a raw sequence against its sorted rearrangement.

    Returns
    -------
    tuple
        The coefficient of z_(sorted seq), and the sequences in the support
        other than the sorted one that are not R-below it.

    """
    family = basis.family
    target, _ = seq_rearrange(family, seq)
    coordinates = basis.coordinates(_product(hopf, family, seq))
    coefficient = coordinates.pop(target, ZERO)
    offending = [w for w in coordinates if seq_compare("R", w, target, family) is not Ordering.LESS]
    return coefficient, offending


def binomial_coproduct_defect(hopf: HopfData, basis: PBWBasis, seq: Sequence[int]) -> list[tuple[Seq, Seq]]:
    """Terms of Delta(z_V) - sum binom(V,W) z_W (x) z_(V/W) not R-below V.

    A term z_M (x) z_N is allowed when M and N are nonempty and the sorted
    concatenation MN is R-below V.
    """
    family = basis.family
    seq = tuple(seq)
    defect = basis.tensor_coordinates(comultiply(hopf, basis.element(seq)))
    for w in subsequences(seq):
        coefficient, rest = seq_binomial(seq, w)
        defect[(w, rest)] = defect.get((w, rest), ZERO) - coefficient
    offending = []
    for (m, n), c in defect.items():
        if not c:
            continue
        merged, _ = seq_rearrange(family, m + n)
        if not m or not n or seq_compare("R", merged, seq, family) is not Ordering.LESS:
            offending.append((m, n))
    return offending
