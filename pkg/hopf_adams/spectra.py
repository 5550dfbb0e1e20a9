# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

"""Hilbert series, primitive dimensions and predicted Adams spectra.

A connected graded algebra with a PBW basis of infinite heights has the
Hilbert series of a free commutative algebra on generators with dimensions
p_gamma, namely the product of (1 - t^gamma)^(-p_gamma). Inverting this
product recovers p from the dimensions, and counting sorted sequences by
length gives the multiplicity of each eigenvalue n^s of the Adams operator.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Mapping
from typing import Any

from sympy import Poly

from hopf_adams.algebra import HopfData
from hopf_adams.convolution import ConvolutionContext, adams
from hopf_adams.errors import HilbertInversionError, HopfError
from hopf_adams.grading import MultiDegree, max_parts
from hopf_adams.linalg import ONE, char_poly, format_factored, linear_factor, poly, power
from hopf_adams.pbw import PBWBasis
from hopf_adams.report import Report

logger = logging.getLogger(__name__)

HilbertSeries = dict[MultiDegree, int]
PrimitiveDims = dict[MultiDegree, int]


def hilbert_series(hopf: HopfData) -> HilbertSeries:
    """Dimension of every degree within the bound."""
    return {degree: hopf.basis.dim(degree) for degree in hopf.basis.degrees}


def _bound(series: Mapping[MultiDegree, int]) -> int:
    return max((degree.total for degree in series), default=0)


def _times_power(series: dict[MultiDegree, int], degree: MultiDegree, count: int, bound: int) -> dict[MultiDegree, int]:
    """Multiply a truncated series by (1 - t^degree)^(-count)."""
    if not count:
        return series
    result: dict[MultiDegree, int] = {}
    for base, value in series.items():
        k = 0
        shifted = base
        while shifted.total <= bound:
            result[shifted] = result.get(shifted, 0) + value * math.comb(count + k - 1, k)
            k += 1
            shifted = shifted + degree
    return result


def series_from_primitives(p: Mapping[MultiDegree, int], bound: int, rank: int = 1) -> HilbertSeries:
    """Expand the product of (1 - t^gamma)^(-p_gamma) up to a part-sum bound."""
    series = {MultiDegree.zero(rank): 1}
    for degree in sorted(p):
        if not degree.is_zero():
            series = _times_power(series, degree, p[degree], bound)
    return dict(sorted(series.items()))


def primitive_dims(series: Mapping[MultiDegree, int]) -> PrimitiveDims:
    """Invert the product formula degree by degree.

    Parameters
    ----------
    series: Mapping[MultiDegree, int]
        Dimensions per degree, including degree 0.

    Returns
    -------
    dict[MultiDegree, int]
        p_gamma for every positive degree of the series.

    Raises
    ------
    HilbertInversionError
        If the series does not start with 1 or some p_gamma is negative.

    """
    if not series:
        msg = "empty Hilbert series"
        raise HilbertInversionError(msg)
    rank = next(iter(series)).rank
    zero = MultiDegree.zero(rank)
    if series.get(zero) != 1:
        msg = f"the Hilbert series starts with {series.get(zero)}, expected 1"
        raise HilbertInversionError(msg)
    bound = _bound(series)
    product: dict[MultiDegree, int] = {zero: 1}
    result: PrimitiveDims = {}
    for degree in sorted(series):
        if degree.is_zero():
            continue
        count = series[degree] - product.get(degree, 0)
        if count < 0:
            msg = (
                f"degree {degree}: dimension {series[degree]} is below the "
                f"{product.get(degree, 0)} products of lower primitives"
            )
            raise HilbertInversionError(msg)
        result[degree] = count
        product = _times_power(product, degree, count, bound)
        logger.debug("degree %s: %d primitives", degree, count)
    return result


def multiplicity(p: Mapping[MultiDegree, int], n: int, degree: MultiDegree) -> int:
    """Number of ways to write degree as a sum of n primitive degrees, with repetition.

    Parameters
    ----------
    p: Mapping[MultiDegree, int]
        Primitive dimensions.
    n: int
        Number of summands.
    degree: MultiDegree
        Target degree.

    Returns
    -------
    int
        Sum over families (d_alpha) with sum d_alpha = n and
        sum d_alpha * alpha = degree of prod binom(p_alpha + d_alpha - 1, d_alpha).

    """
    if n > max_parts(degree):
        return 0
    support = sorted(alpha for alpha, count in p.items() if count > 0 and not alpha.is_zero() and alpha.divides(degree))

    def count(index: int, remaining: MultiDegree, left: int) -> int:
        if remaining.is_zero():
            return 1 if left == 0 else 0
        if index == len(support) or left == 0:
            return 0
        alpha = support[index]
        total = 0
        d = 0
        rest = remaining
        while d <= left:
            total += math.comb(p[alpha] + d - 1, d) * count(index + 1, rest, left - d)
            if not alpha.divides(rest):
                break
            rest = rest - alpha
            d += 1
        return total

    return count(0, degree, n)


def multiplicity_table(p: Mapping[MultiDegree, int], degrees: Iterable[MultiDegree]) -> dict[MultiDegree, list[int]]:
    """mul(s, degree) for s = 0..N(degree)."""
    return {degree: [multiplicity(p, s, degree) for s in range(max_parts(degree) + 1)] for degree in degrees}


def predicted_char_poly(p: Mapping[MultiDegree, int], n: int, degree: MultiDegree) -> Poly:
    """Product of (x - n^s)^mul(s, degree) over s = 0..N(degree).

    Eigenvalues n^s that coincide for different s (n = -1, 0, 1) simply
    multiply their factors together.
    """
    result = poly([ONE])
    for s in range(max_parts(degree) + 1):
        m = multiplicity(p, s, degree)
        if m:
            result *= linear_factor(power(n, s)) ** m
    return result


def check_char_polys(ctx: ConvolutionContext, n_values: Iterable[int], p: Mapping[MultiDegree, int] | None = None) -> Report:
    """Compare the exact characteristic polynomial of each Adams block with the prediction.

    Parameters
    ----------
    ctx: ConvolutionContext
        The algebra.
    n_values: Iterable[int]
        Adams indices.
    p: Mapping[MultiDegree, int], optional
        Primitive dimensions; inverted from the Hilbert series when absent.

    Returns
    -------
    Report
        One child per n; ``data`` maps each degree to the factored
        polynomial.

    """
    if p is None:
        p = primitive_dims(hilbert_series(ctx.hopf))
    report = Report(f"characteristic polynomials of {ctx.hopf.name}")
    for n in n_values:
        child = report.child(f"adams {n}")
        psi_n = adams(ctx, n)
        for degree in ctx.basis.degrees:
            child.tick()
            exact = char_poly(psi_n.block(degree))
            predicted = predicted_char_poly(p, n, degree)
            child.data[str(degree)] = format_factored(exact)
            if exact != predicted:
                child.fail(
                    "characteristic polynomial differs from the prediction",
                    degree=degree, exact=format_factored(exact), predicted=format_factored(predicted),
                )
    return report


def count_sequences_check(basis: PBWBasis, p: Mapping[MultiDegree, int]) -> Report:
    """Count sorted sequences by length and compare with the multiplicities.

    Raises
    ------
    HopfError
        If some generator has a finite height.

    """
    family = basis.family
    if any(generator.height is not None for generator in family.generators):
        msg = "sequence counting needs infinite heights"
        raise HopfError(msg)
    report = Report("sorted sequence counts")
    for degree, seqs in basis.sequences.items():
        lengths: dict[int, int] = {}
        for seq in seqs:
            lengths[len(seq)] = lengths.get(len(seq), 0) + 1
        for n in range(max_parts(degree) + 1):
            report.tick()
            expected = multiplicity(p, n, degree)
            if lengths.get(n, 0) != expected:
                report.fail(
                    "sequence count differs from the multiplicity",
                    degree=degree, length=n, sequences=lengths.get(n, 0), multiplicity=expected,
                )
    return report


def row_sums(p: Mapping[MultiDegree, int], series: Mapping[MultiDegree, int]) -> dict[MultiDegree, tuple[int, Any]]:
    """Sum of mul(s, degree) over s next to the dimension, per degree."""
    return {
        degree: (sum(multiplicity(p, s, degree) for s in range(max_parts(degree) + 1)), dim)
        for degree, dim in series.items()
    }
