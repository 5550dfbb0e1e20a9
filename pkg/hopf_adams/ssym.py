# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

"""The Hopf algebra of permutations in its fundamental basis.

The product of F_s and F_t is the sum of F_w over the shuffles of s with the
shifted copy of t; the coproduct of F_s deconcatenates the one-line word and
standardizes both halves. Basis labels are ``F:<one-line word>``; the empty
permutation is ``F:()``.

Connected permutations form the alphabet used by the PBW constructor. As
letters they are ordered by size first and by the pseudo-lexicographic order
of their one-line words within a size, so 312 precedes 2413 although 2413
comes first in the pseudo-lexicographic order. Lyndon permutations and the
left and right orders compare permutations through their words of connected
factors.
"""

from __future__ import annotations

import functools
import itertools
import logging
import weakref
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any, Literal

from sympy.polys.matrices import DomainMatrix

from hopf_adams.algebra import (
    Element,
    GradedBasis,
    GradedMap,
    HopfData,
    Tensor,
    multiply,
)
from hopf_adams.errors import HopfError, WordError
from hopf_adams.grading import MultiDegree, Ordering
from hopf_adams.linalg import identity, inverse, permute, sparse_matrix
from hopf_adams.pbw import (
    ConstructionLog,
    Generator,
    GeneratorFamily,
    PBWBasis,
    basis_from_family,
    construct_pbw,
)
from hopf_adams.words import (
    Alphabet,
    Word,
    compare_letters,
    letters_are_lyndon,
    lyndon_factorize,
    shirshov_factorize,
)

logger = logging.getLogger(__name__)

PermOrder = Literal["prec", "L", "R"]
WeakOrder = Literal["right", "left"]
BasisName = Literal["F", "M", "T", "pbw"]
Listing = Literal["natural", "precL", "precR"]


@functools.total_ordering
@dataclass(frozen=True)
class Permutation:
    """A permutation in one-line notation; the empty tuple is the empty permutation."""

    entries: tuple[int, ...]

    def __post_init__(self: Permutation) -> None:
        """Check the entries are 1..m."""
        if sorted(self.entries) != list(range(1, len(self.entries) + 1)):
            msg = f"{self.entries} is not a permutation of 1..{len(self.entries)}"
            raise WordError(msg)

    @classmethod
    def of(cls: type[Permutation], *entries: int) -> Permutation:
        """Build from entries."""
        return cls(tuple(entries))

    @classmethod
    def from_string(cls: type[Permutation], text: str) -> Permutation:
        """Parse "231", "1,10,2,..." or "()" for the empty permutation."""
        text = text.strip()
        if text.startswith("F:"):
            text = text[2:]
        if text in {"", "()"}:
            return cls(())
        try:
            if "," in text:
                return cls(tuple(int(part) for part in text.split(",")))
            return cls(tuple(int(char) for char in text))
        except ValueError as err:
            msg = f"cannot read a permutation from {text!r}"
            raise WordError(msg) from err

    def __len__(self: Permutation) -> int:
        """Size m."""
        return len(self.entries)

    def __lt__(self: Permutation, other: Permutation) -> bool:
        """Lexicographic order of the one-line words."""
        return self.entries < other.entries

    def __str__(self: Permutation) -> str:
        """One-line word; comma separated once an entry has two digits."""
        if not self.entries:
            return "()"
        if len(self.entries) < 10:  # noqa: PLR2004
            return "".join(str(e) for e in self.entries)
        return ",".join(str(e) for e in self.entries)

    def inverse(self: Permutation) -> Permutation:
        """The inverse permutation."""
        result = [0] * len(self.entries)
        for position, value in enumerate(self.entries, 1):
            result[value - 1] = position
        return Permutation(tuple(result))

    def to_json(self: Permutation) -> list[int]:
        """Digit array."""
        return list(self.entries)


THETA = Permutation(())


def f_label(sigma: Permutation) -> str:
    """Fundamental basis label."""
    return f"F:{sigma}"


def permutations_of(m: int) -> list[Permutation]:
    """All permutations of size m in lexicographic order."""
    return [Permutation(p) for p in itertools.permutations(range(1, m + 1))]


def standardize(values: Sequence[int]) -> Permutation:
    """Relabel distinct integers by 1..k keeping their relative order."""
    ranks = {value: rank for rank, value in enumerate(sorted(values), 1)}
    return Permutation(tuple(ranks[v] for v in values))


def direct_sum(sigma: Permutation, tau: Permutation) -> Permutation:
    """sigma x tau: sigma followed by tau shifted by len(sigma)."""
    m = len(sigma)
    return Permutation(sigma.entries + tuple(v + m for v in tau.entries))


def _split_points(sigma: Permutation) -> list[int]:
    """Sizes i < m for which sigma preserves {1..i}."""
    points = []
    top = 0
    for i, value in enumerate(sigma.entries[:-1], 1):
        top = max(top, value)
        if top == i:
            points.append(i)
    return points


def is_connected(sigma: Permutation) -> bool:
    """Nonempty and preserving no proper initial segment."""
    return len(sigma) > 0 and not _split_points(sigma)


def connected_factors(sigma: Permutation) -> tuple[Permutation, ...]:
    """The finest x-factorization into connected permutations."""
    cuts = [0, *_split_points(sigma), len(sigma)] if sigma.entries else [0]
    return tuple(
        Permutation(tuple(v - start for v in sigma.entries[start:stop]))
        for start, stop in itertools.pairwise(cuts)
    )


def letter_compare(sigma: Permutation, tau: Permutation) -> Ordering:
    """Order of connected permutations as letters: smaller size first, then prec."""
    if len(sigma) != len(tau):
        return Ordering.of(len(sigma), len(tau))
    return compare_letters(sigma.entries, tau.entries)


@functools.lru_cache(maxsize=None)
def connected_permutations(bound: int) -> tuple[Permutation, ...]:
    """Connected permutations of size 1..bound in the letter order.

    Letters of size up to k keep their positions for every bound of at least
    k, so letter indices agree between the alphabets of different bounds.
    """
    found = [p for m in range(1, bound + 1) for p in permutations_of(m) if is_connected(p)]
    return tuple(sorted(found, key=functools.cmp_to_key(lambda a, b: int(letter_compare(a, b)))))


@functools.lru_cache(maxsize=None)
def connected_alphabet(bound: int) -> Alphabet:
    """The alphabet of connected permutations up to a size."""
    letters = connected_permutations(bound)
    return Alphabet(
        f"connected<={bound}",
        tuple(str(p) for p in letters),
        tuple(MultiDegree.of(len(p)) for p in letters),
    )


def phi(sigma: Permutation) -> Word:
    """The word of connected factors of a permutation."""
    alphabet = connected_alphabet(max(len(sigma), 1))
    return alphabet.parse([str(p) for p in connected_factors(sigma)])


def psi(word: Word) -> Permutation:
    """Inverse of phi: the direct sum of the letters of a word."""
    result = THETA
    for letter in word.letters:
        result = direct_sum(result, Permutation.from_string(word.alphabet.labels[letter]))
    return result


def word_compare(sigma: Permutation, tau: Permutation) -> Ordering:
    """Pseudo-lexicographic comparison of the words of connected factors."""
    return compare_letters(phi(sigma).letters, phi(tau).letters)


def _is_lyndon_permutation(sigma: Permutation) -> bool:
    # rotating the word of connected factors is swapping the halves of sigma = s1 x s2
    return bool(sigma.entries) and letters_are_lyndon(phi(sigma).letters)


@dataclass(frozen=True)
class PermClass:
    """Connectedness, Lyndon property and Lyndon decomposition of a permutation."""

    permutation: Permutation
    connected: bool
    lyndon: bool
    factors: tuple[Permutation, ...]

    @property
    def length(self: PermClass) -> int:
        """Number of Lyndon factors."""
        return len(self.factors)

    def kind(self: PermClass) -> str:
        """One of "connected", "lyndon" or "other"."""
        if self.connected:
            return "connected"
        return "lyndon" if self.lyndon else "other"


@functools.lru_cache(maxsize=None)
def classify(sigma: Permutation) -> PermClass:
    """Classify a permutation and compute its Lyndon decomposition.

    Parameters
    ----------
    sigma: Permutation
        Any permutation, the empty one included.

    Returns
    -------
    PermClass
        Flags and the nondecreasing Lyndon factors whose direct sum is sigma.

    """
    factors = tuple(psi(word) for word in lyndon_factorize(phi(sigma))) if sigma.entries else ()
    return PermClass(sigma, is_connected(sigma), _is_lyndon_permutation(sigma), factors)


def perm_compare(variant: PermOrder, sigma: Permutation, tau: Permutation) -> Ordering:
    """Compare permutations under the pseudo-lexicographic order or its L and R transfers.

    Parameters
    ----------
    variant: str
        "prec", "L" or "R".
    sigma: Permutation
        Left operand.
    tau: Permutation
        Right operand.

    Returns
    -------
    Ordering
        For L and R: smaller size first, then the Lyndon decompositions are
        compared factor by factor from the left or from the right, factors
        in the order of their words of connected factors.

    """
    if variant == "prec":
        return compare_letters(sigma.entries, tau.entries)
    if len(sigma) != len(tau):
        return Ordering.of(len(sigma), len(tau))
    first, second = classify(sigma).factors, classify(tau).factors
    pairs = zip(first, second) if variant == "L" else zip(reversed(first), reversed(second))
    for a, b in pairs:
        if a != b:
            return word_compare(a, b)
    return Ordering.of(len(first), len(second))


def perm_key(variant: PermOrder) -> Any:
    """Sort key for perm_compare."""
    return functools.cmp_to_key(lambda a, b: int(perm_compare(variant, a, b)))


def lyndon_permutations(bound: int) -> list[Permutation]:
    """Lyndon permutations of size 1..bound, ascending in the order of their words."""
    found = [p for m in range(1, bound + 1) for p in permutations_of(m) if classify(p).lyndon]
    return sorted(found, key=functools.cmp_to_key(lambda a, b: int(word_compare(a, b))))


def classification_table(bound: int) -> dict[int, dict[str, list[str]]]:
    """Connected, Lyndon-not-connected and other permutations per size."""
    table = {}
    for m in range(1, bound + 1):
        row: dict[str, list[str]] = {"connected": [], "lyndon": [], "other": []}
        for sigma in permutations_of(m):
            row[classify(sigma).kind()].append(str(sigma))
        table[m] = row
    return table


def f_product(sigma: Permutation, tau: Permutation) -> Element:
    """Sum of F_w over the shuffles of sigma with tau shifted by len(sigma)."""
    m, n = len(sigma), len(tau)
    shifted = tuple(v + m for v in tau.entries)
    terms = []
    for positions in itertools.combinations(range(m + n), m):
        chosen = set(positions)
        left, right = iter(sigma.entries), iter(shifted)
        word = tuple(next(left) if k in chosen else next(right) for k in range(m + n))
        terms.append((f_label(Permutation(word)), 1))
    return Element(terms)


def f_coproduct(sigma: Permutation) -> Tensor:
    """Sum over cuts of F_std(prefix) (x) F_std(suffix)."""
    u = sigma.entries
    return Tensor(
        ((f_label(standardize(u[:i])), f_label(standardize(u[i:]))), 1)
        for i in range(len(u) + 1)
    )


def build_ssym(bound: int) -> HopfData:
    """The algebra of permutations in the fundamental basis up to a size.

    Parameters
    ----------
    bound: int
        Largest permutation size, at least 1.

    Returns
    -------
    HopfData
        Structure constants on the labels ``F:sigma``.

    Raises
    ------
    HopfError
        If the bound is below 1.

    """
    if bound < 1:
        msg = f"bound must be at least 1, got {bound}"
        raise HopfError(msg)
    perms = {m: permutations_of(m) for m in range(bound + 1)}
    basis = GradedBasis(
        {MultiDegree.of(m): [f_label(p) for p in ps] for m, ps in perms.items()}, bound,
    )
    product = {}
    for m, n in itertools.product(range(bound + 1), repeat=2):
        if m + n > bound:
            continue
        for sigma in perms[m]:
            for tau in perms[n]:
                product[(f_label(sigma), f_label(tau))] = f_product(sigma, tau)
    coproduct = {f_label(p): f_coproduct(p) for ps in perms.values() for p in ps}
    logger.debug("built the permutation algebra up to size %d", bound)
    return HopfData(f"ssym<={bound}", basis, product, coproduct)


def position_inversions(sigma: Permutation) -> frozenset[tuple[int, int]]:
    """Pairs of positions i < j with sigma_i > sigma_j."""
    u = sigma.entries
    return frozenset(
        (i, j) for i, j in itertools.combinations(range(len(u)), 2) if u[i] > u[j]
    )


def weak_order_leq(variant: WeakOrder, sigma: Permutation, tau: Permutation) -> bool:
    """sigma <= tau in the right (positions) or left (values) weak order."""
    if variant == "left":
        sigma, tau = sigma.inverse(), tau.inverse()
    elif variant != "right":
        msg = f"unknown weak order {variant!r}"
        raise HopfError(msg)
    return position_inversions(sigma) <= position_inversions(tau)


@functools.lru_cache(maxsize=None)
def m_block(m: int, weak_order: WeakOrder = "right") -> DomainMatrix:
    """Columns are the monomial basis elements M_sigma of size m in the fundamental basis.

    F_s is the sum of M_t over t >= s in the weak order, so the matrix is the
    inverse of the zeta matrix of the order.
    """
    perms = permutations_of(m)
    zeta = {
        (i, j): 1
        for j, sigma in enumerate(perms)
        for i, tau in enumerate(perms)
        if weak_order_leq(weak_order, sigma, tau)
    }
    return inverse(sparse_matrix(zeta, (len(perms), len(perms))))


def m_to_f(bound: int, weak_order: WeakOrder = "right") -> dict[MultiDegree, DomainMatrix]:
    """The monomial to fundamental change of basis for every size up to bound."""
    return {MultiDegree.of(m): m_block(m, weak_order) for m in range(bound + 1)}


_T_ELEMENTS: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def t_element(hopf: HopfData, sigma: Permutation) -> Element:
    """T_sigma in the fundamental basis.

    Connected permutations give F_sigma; other Lyndon permutations give the
    commutator of the two halves of the Shirshov factorization of their
    connected word; the rest multiply along their Lyndon decomposition.
    """
    memo = _T_ELEMENTS.setdefault(hopf, {})
    if sigma in memo:
        return memo[sigma]
    kind = classify(sigma)
    if not sigma.entries:
        value = hopf.one()
    elif kind.connected:
        value = hopf.element(f_label(sigma))
    elif kind.lyndon:
        left, right = shirshov_factorize(phi(sigma))
        a, b = t_element(hopf, psi(left)), t_element(hopf, psi(right))
        value = multiply(hopf, a, b) - multiply(hopf, b, a)
    else:
        value = hopf.one()
        for factor in kind.factors:
            value = multiply(hopf, value, t_element(hopf, factor))
    memo[sigma] = value
    return value


def _name(prefix: str, family: GeneratorFamily, seq: Sequence[int]) -> str:
    sigma = THETA
    for i in seq:
        sigma = direct_sum(sigma, Permutation.from_string(family[i].label))
    return f"{prefix}:{sigma}"


_T_BASES: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def lyndon_family(hopf: HopfData) -> GeneratorFamily:
    """T_sigma for the Lyndon permutations within the bound, ascending."""
    return GeneratorFamily(
        [
            Generator(str(sigma), MultiDegree.of(len(sigma)), t_element(hopf, sigma))
            for sigma in lyndon_permutations(hopf.bound)
        ],
    )


def t_basis(hopf: HopfData) -> PBWBasis:
    """The basis {T_sigma}, named ``T:sigma``."""
    if hopf not in _T_BASES:
        family = lyndon_family(hopf)
        _T_BASES[hopf] = basis_from_family(hopf, family, functools.partial(_name, "T", family))
    return _T_BASES[hopf]


_PBW_BASES: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def ssym_pbw(hopf: HopfData, bound: int | None = None) -> tuple[PBWBasis, ConstructionLog]:
    """Run the PBW constructor on the fundamental elements of connected permutations.

    Generators are labeled by their permutation, basis elements ``z:sigma``.
    Full-bound constructions are memoized per algebra.
    """
    if bound is None and hopf in _PBW_BASES:
        return _PBW_BASES[hopf]
    alphabet = connected_alphabet(hopf.bound)
    images = {i: hopf.element(f_label(Permutation.from_string(label))) for i, label in enumerate(alphabet.labels)}
    built = construct_pbw(
        hopf,
        alphabet,
        images,
        bound,
        namer=functools.partial(_name, "z"),
        labeler=lambda word: str(psi(word)),
    )
    if bound is None:
        _PBW_BASES[hopf] = built
    return built


def sequence_permutation(basis: PBWBasis, seq: Sequence[int]) -> Permutation:
    """The permutation indexing z_V, the direct sum of its generators."""
    sigma = THETA
    for i in seq:
        sigma = direct_sum(sigma, Permutation.from_string(basis.family[i].label))
    return sigma


def basis_change(
    hopf: HopfData,
    degree: MultiDegree,
    basis: BasisName = "F",
    weak_order: WeakOrder = "right",
) -> tuple[list[Permutation], str, DomainMatrix]:
    """Permutations indexing a basis of one degree, their label prefix and the change matrix.

    Column j of the matrix is the j-th basis element in the fundamental basis.
    """
    m = degree.total
    if basis in {"F", "M"}:
        perms = permutations_of(m)
        if basis == "F":
            return perms, "F", identity(len(perms))
        return perms, "M", m_block(m, weak_order)
    if basis == "T":
        pbw = t_basis(hopf)
        prefix = "T"
    elif basis == "pbw":
        pbw, _ = ssym_pbw(hopf)
        prefix = "z"
    else:
        msg = f"unknown basis {basis!r}"
        raise HopfError(msg)
    perms = [sequence_permutation(pbw, seq) for seq in pbw.sequences[degree]]
    return perms, prefix, pbw.expansion(degree)


def listing_order(perms: Sequence[Permutation], order: Listing) -> list[int]:
    """Positions of perms sorted by the requested order."""
    if order == "natural":
        return sorted(range(len(perms)), key=perms.__getitem__)
    if order not in {"precL", "precR"}:
        msg = f"unknown order {order!r}"
        raise HopfError(msg)
    by = perm_key(order[-1])  # type: ignore[arg-type]
    return sorted(range(len(perms)), key=lambda k: by(perms[k]))


def represent(
    hopf: HopfData,
    f: GradedMap,
    degree: MultiDegree,
    basis: BasisName = "F",
    order: Listing = "natural",
    weak_order: WeakOrder = "right",
) -> tuple[list[str], DomainMatrix]:
    """The block of a graded map in a named basis and listing order.

    Parameters
    ----------
    hopf: HopfData
        The permutation algebra the bases are built in.
    f: GradedMap
        A map on the fundamental basis.
    degree: MultiDegree
        The size to represent.
    basis: str
        "F", "M", "T" or "pbw".
    order: str
        "natural" (lexicographic), "precL" or "precR".
    weak_order: str
        Weak order behind the monomial basis.

    Returns
    -------
    tuple[list[str], DomainMatrix]
        Basis labels in listing order and the matrix whose column j is the
        image of the j-th label.

    """
    perms, prefix, change = basis_change(hopf, degree, basis, weak_order)
    matrix = inverse(change) * (f.block(degree) * change)
    positions = listing_order(perms, order)
    return [f"{prefix}:{perms[k]}" for k in positions], permute(matrix, positions)


def lyndon_counts(bound: int) -> dict[int, int]:
    """Number of Lyndon permutations of each size."""
    counts = dict.fromkeys(range(1, bound + 1), 0)
    for sigma in lyndon_permutations(bound):
        counts[len(sigma)] += 1
    return counts
