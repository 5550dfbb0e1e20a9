# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

"""Exact rational scalars, sparse matrices and polynomials.

Matrices are sympy ``DomainMatrix`` objects over ``QQ`` in the sparse format;
their ``rep`` is a dict of rows, each row a dict of nonzero entries.
Polynomials are sympy ``Poly`` objects in the symbol ``x`` over ``QQ``.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Mapping, Sequence
from typing import Any

from sympy import QQ, Poly, Symbol
from sympy.polys.matrices import DomainMatrix

from hopf_adams.errors import NonSquareMatrixError

logger = logging.getLogger(__name__)

X = Symbol("x")

Scalar = Any  # an element of QQ
ZERO = QQ(0)
ONE = QQ(1)

Entries = Mapping[tuple[int, int], Any]


def scalar(value: int | str | Any) -> Any:
    """Convert an int, a "p/q" string or a rational to an element of QQ."""
    if isinstance(value, str):
        return parse_scalar(value)[0]
    return QQ.convert(value)


def parse_scalar(text: str) -> tuple[Any, bool]:
    """Parse "p" or "p/q".

    Returns
    -------
    tuple
        The scalar and whether the text was already in lowest terms with a
        positive denominator.

    Raises
    ------
    ValueError
        If the text is not an integer fraction or the denominator is 0.

    """
    num, _, den = text.strip().partition("/")
    numerator = int(num)
    denominator = int(den) if den else 1
    if denominator == 0:
        msg = f"zero denominator in {text!r}"
        raise ValueError(msg)
    canonical = denominator > 0 and math.gcd(numerator, denominator) == 1
    if den and denominator == 1:
        canonical = False
    return QQ(numerator, denominator), canonical


def format_scalar(value: Any) -> str:
    """Canonical text form: "p" for integers, "p/q" otherwise."""
    value = QQ.convert(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def power(base: int | Any, exponent: int) -> Any:
    """Exact power with 0**0 == 1."""
    if exponent == 0:
        return ONE
    return QQ.convert(base) ** exponent


def sparse_matrix(entries: Entries, shape: tuple[int, int]) -> DomainMatrix:
    """Build a sparse matrix from a {(row, col): value} mapping, dropping zeros."""
    rows: dict[int, dict[int, Any]] = {}
    for (i, j), value in entries.items():
        value = QQ.convert(value)
        if value:
            rows.setdefault(i, {})[j] = value
    return DomainMatrix(rows, shape, QQ)


def from_rows(rows: Sequence[Sequence[int | str | Any]]) -> DomainMatrix:
    """Build a sparse matrix from a dense list of rows."""
    n = len(rows)
    m = len(rows[0]) if rows else 0
    entries = {(i, j): scalar(v) for i, row in enumerate(rows) for j, v in enumerate(row)}
    return sparse_matrix(entries, (n, m))


def identity(n: int) -> DomainMatrix:
    """The n x n identity."""
    return sparse_matrix({(i, i): ONE for i in range(n)}, (n, n))


def zeros(n: int, m: int | None = None) -> DomainMatrix:
    """The zero matrix."""
    return sparse_matrix({}, (n, n if m is None else m))


def matrix_rows(matrix: DomainMatrix) -> dict[int, dict[int, Any]]:
    """Nonzero entries as a dict of rows."""
    return {i: dict(row) for i, row in matrix.to_sparse().rep.items() if row}


def matrix_columns(matrix: DomainMatrix) -> dict[int, dict[int, Any]]:
    """Nonzero entries as a dict of columns."""
    return matrix_rows(matrix.transpose())


def entry(matrix: DomainMatrix, i: int, j: int) -> Any:
    """A single entry."""
    return matrix.to_sparse().rep.get(i, {}).get(j, ZERO)


def to_lists(matrix: DomainMatrix) -> list[list[Any]]:
    """Dense list of rows."""
    n, m = matrix.shape
    dense = [[ZERO] * m for _ in range(n)]
    for i, row in matrix_rows(matrix).items():
        for j, value in row.items():
            dense[i][j] = value
    return dense


def matrices_equal(first: DomainMatrix, second: DomainMatrix) -> bool:
    """Exact equality of two matrices of the same shape."""
    return first.shape == second.shape and matrix_rows(first) == matrix_rows(second)


def permute(matrix: DomainMatrix, order: Sequence[int]) -> DomainMatrix:
    """Reindex rows and columns so that new index k is old index order[k]."""
    position = {old: new for new, old in enumerate(order)}
    entries = {
        (position[i], position[j]): value
        for i, row in matrix_rows(matrix).items()
        for j, value in row.items()
    }
    return sparse_matrix(entries, matrix.shape)


def rank(matrix: DomainMatrix) -> int:
    """Exact rank."""
    if 0 in matrix.shape:
        return 0
    return matrix.rank()


def pivot_columns(matrix: DomainMatrix) -> tuple[int, ...]:
    """Pivot columns of the reduced row echelon form."""
    if 0 in matrix.shape:
        return ()
    _, pivots = matrix.rref()
    return tuple(pivots)


def inverse(matrix: DomainMatrix) -> DomainMatrix:
    """Exact inverse of an invertible square matrix."""
    n, m = matrix.shape
    if n != m:
        msg = f"cannot invert a {n}x{m} matrix"
        raise NonSquareMatrixError(msg)
    if n == 0:
        return matrix
    return matrix.inv().to_sparse()


def poly(coefficients: Iterable[Any]) -> Poly:
    """Polynomial in x from coefficients, highest degree first."""
    return Poly([QQ.convert(c) for c in coefficients], X, domain=QQ)


def linear_factor(root: Any) -> Poly:
    """The polynomial x - root."""
    return poly([ONE, -QQ.convert(root)])


def _check_square(matrix: DomainMatrix) -> int:
    n, m = matrix.shape
    if n != m:
        msg = f"expected a square matrix, got {n}x{m}"
        raise NonSquareMatrixError(msg)
    return n


def char_poly(matrix: DomainMatrix) -> Poly:
    """Return det(xI - M) exactly.

    Parameters
    ----------
    matrix: DomainMatrix
        A square matrix over QQ.

    Returns
    -------
    Poly
        The monic characteristic polynomial.

    Raises
    ------
    NonSquareMatrixError
        If the matrix is not square.

    """
    if not _check_square(matrix):
        return poly([ONE])
    return poly(matrix.convert_to(QQ).charpoly())


class _Echelon:
    """Incremental row echelon basis of a subspace of QQ^n.

    Each stored vector remembers the combination of inserted vectors that
    produced it.
    """

    def __init__(self: _Echelon) -> None:
        self.rows: list[tuple[int, dict[int, Any], dict[int, Any]]] = []

    def reduce(
        self: _Echelon, vector: dict[int, Any], combo: dict[int, Any],
    ) -> tuple[dict[int, Any], dict[int, Any]]:
        vector = dict(vector)
        combo = dict(combo)
        for pivot, row, row_combo in self.rows:
            c = vector.get(pivot)
            if not c:
                continue
            for j, value in row.items():
                updated = vector.get(j, ZERO) - c * value
                if updated:
                    vector[j] = updated
                else:
                    vector.pop(j, None)
            for k, value in row_combo.items():
                updated = combo.get(k, ZERO) - c * value
                if updated:
                    combo[k] = updated
                else:
                    combo.pop(k, None)
        return vector, combo

    def insert(self: _Echelon, vector: dict[int, Any], combo: dict[int, Any]) -> bool:
        """Add a vector; return False when it is already in the span."""
        vector, combo = self.reduce(vector, combo)
        if not vector:
            return False
        pivot = min(vector)
        scale = ONE / vector[pivot]
        vector = {j: v * scale for j, v in vector.items()}
        combo = {k: v * scale for k, v in combo.items()}
        self.rows.append((pivot, vector, combo))
        return True


def _apply(columns: dict[int, dict[int, Any]], vector: dict[int, Any]) -> dict[int, Any]:
    image: dict[int, Any] = {}
    for j, vj in vector.items():
        for i, mij in columns.get(j, {}).items():
            updated = image.get(i, ZERO) + mij * vj
            if updated:
                image[i] = updated
            else:
                image.pop(i, None)
    return image


def min_poly(matrix: DomainMatrix) -> Poly:
    """Return the monic minimal polynomial of a square matrix.

    The local minimal polynomial of each standard basis vector not already
    inside an explored Krylov space is found by incremental linear dependence;
    the result is their least common multiple.

    Parameters
    ----------
    matrix: DomainMatrix
        A square matrix over QQ.

    Returns
    -------
    Poly
        The least degree monic annihilating polynomial.

    """
    n = _check_square(matrix)
    columns = matrix_columns(matrix)
    explored = _Echelon()
    result = poly([ONE])
    for start in range(n):
        if not explored.reduce({start: ONE}, {})[0]:
            continue
        local = _Echelon()
        krylov = [{start: ONE}]
        while True:
            d = len(krylov) - 1
            residual, combo = local.reduce(krylov[d], {d: ONE})
            if not residual:
                break
            local.rows.append(_normalized(residual, combo))
            krylov.append(_apply(columns, krylov[d]))
        # combo expresses 0 = sum combo[i] K_i with combo[d] = 1
        coefficients = [combo.get(i, ZERO) for i in range(d, -1, -1)]
        local_poly = poly(coefficients).monic()
        logger.debug("Krylov vector e_%d has local minimal polynomial of degree %d", start, d)
        result = result.lcm(local_poly)
        for vector in krylov[:d]:
            explored.insert(vector, {})
    return result.monic()


def _normalized(vector: dict[int, Any], combo: dict[int, Any]) -> tuple[int, dict, dict]:
    pivot = min(vector)
    scale = ONE / vector[pivot]
    return (
        pivot,
        {j: v * scale for j, v in vector.items()},
        {k: v * scale for k, v in combo.items()},
    )


def is_squarefree(polynomial: Poly) -> bool:
    """Whether no irreducible factor repeats."""
    return all(exponent == 1 for _, exponent in polynomial.factor_list()[1])


def divides(divisor: Poly, dividend: Poly) -> bool:
    """Exact polynomial divisibility."""
    return dividend.rem(divisor).is_zero


def format_factored(polynomial: Poly) -> str:
    """Render a polynomial as a product of factors, e.g. "(x-2)^4 (x-4) (x-8)".

    Linear factors are sorted by root; others follow in sympy's order. Factors
    are monic and a leading coefficient other than 1 is printed first.
    """
    content, factors = polynomial.factor_list()
    linear = []
    other = []
    for factor, exponent in factors:
        content *= factor.LC() ** exponent
        factor = factor.monic()
        if factor.degree() == 1:
            linear.append((-factor.all_coeffs()[1], exponent))
        else:
            other.append((factor, exponent))
    pieces = []
    for root, exponent in sorted(linear):
        if root:
            sign = "-" if root > 0 else "+"
            text = f"(x{sign}{format_scalar(abs(root))})"
        else:
            text = "x"
        pieces.append(text if exponent == 1 else f"{text}^{exponent}")
    for factor, exponent in other:
        text = "(" + str(factor.as_expr()).replace(" ", "").replace("**", "^") + ")"
        pieces.append(text if exponent == 1 else f"{text}^{exponent}")
    if content != 1:
        pieces.insert(0, format_scalar(content))
    return " ".join(pieces) or "1"
