# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

"""The convolution algebra of graded endomorphisms.

For graded maps f and g, ``f * g = mu o (f (x) g) o Delta``. Its unit is the
projection onto degree 0. Convolution powers of the identity are the Adams
operators; negative powers go through the antipode.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from typing import Any

from hopf_adams.algebra import Element, GradedBasis, GradedMap, HopfData
from hopf_adams.errors import BoundMismatchError, ConnectednessError
from hopf_adams.grading import max_parts
from hopf_adams.linalg import (
    ONE,
    ZERO,
    identity,
    is_squarefree,
    matrices_equal,
    min_poly,
    power,
    sparse_matrix,
)
from hopf_adams.report import Report

logger = logging.getLogger(__name__)

_EMPTY = Element()


class ConvolutionContext:
    """A Hopf algebra together with the bound up to which maps are computed.

    Computed Adams operators, the antipode and the Eulerian idempotents are
    memoized on the context.
    """

    def __init__(self: ConvolutionContext, hopf: HopfData, bound: int | None = None) -> None:
        """Bind the algebra, truncating it when a smaller bound is given.

        Parameters
        ----------
        hopf: HopfData
            The ambient connected graded Hopf algebra.
        bound: int, optional
            Part-sum bound; defaults to the bound of the algebra.

        Raises
        ------
        BoundMismatchError
            If the bound exceeds the bound of the algebra.

        """
        if bound is None:
            bound = hopf.bound
        if bound > hopf.bound:
            msg = f"context bound {bound} exceeds the algebra bound {hopf.bound}"
            raise BoundMismatchError(msg)
        self.hopf = hopf if bound == hopf.bound else hopf.with_bound(bound)
        self.bound = bound
        self._adams: dict[int, GradedMap] = {}
        self._eulerian: dict[int, GradedMap] = {}
        self._antipode: GradedMap | None = None
        self._log: GradedMap | None = None

    @property
    def basis(self: ConvolutionContext) -> GradedBasis:
        """The basis of the truncated algebra."""
        return self.hopf.basis

    def identity(self: ConvolutionContext) -> GradedMap:
        """The identity map."""
        return GradedMap.identity(self.basis)

    def unit(self: ConvolutionContext) -> GradedMap:
        """The convolution unit."""
        return GradedMap.unit(self.basis)


def _truncate(f: GradedMap, terms: int) -> GradedMap:
    """Zero the blocks of degrees that cannot see the given series term."""
    return GradedMap(
        f.basis,
        {d: b for d, b in f.blocks.items() if max_parts(d) >= terms},
    )


def convolve(ctx: ConvolutionContext, f: GradedMap, g: GradedMap) -> GradedMap:
    """Convolution product of two graded maps.

    Parameters
    ----------
    ctx: ConvolutionContext
        The ambient algebra.
    f: GradedMap
        Left factor.
    g: GradedMap
        Right factor.

    Returns
    -------
    GradedMap
        The map mu o (f (x) g) o Delta.

    Raises
    ------
    BoundMismatchError
        If a map is defined over a different basis or bound.

    """
    basis = ctx.basis
    if f.basis != basis or g.basis != basis:
        msg = "convolution factors must share the context basis and bound"
        raise BoundMismatchError(msg)
    hopf = ctx.hopf
    product = hopf.product
    blocks = {}
    for degree in basis.degrees:
        labels = basis.labels(degree)
        entries: dict[tuple[int, int], Any] = {}
        for j, label in enumerate(labels):
            for (left, right), c in hopf.coproduct[label].items():
                f_left = f.column(left)
                if not f_left:
                    continue
                g_right = g.column(right)
                for p, a in f_left:
                    ca = c * a
                    for q, b in g_right:
                        cab = ca * b
                        for target, e in product.get((p, q), _EMPTY).items():
                            key = (basis.position(target), j)
                            entries[key] = entries.get(key, ZERO) + cab * e
        blocks[degree] = sparse_matrix(entries, (len(labels), len(labels)))
    return GradedMap(basis, blocks)


def convolution_power(ctx: ConvolutionContext, f: GradedMap, n: int) -> GradedMap:
    """The n-th convolution power of f for n >= 0, by binary powering."""
    if n < 0:
        msg = f"negative convolution power {n}"
        raise ValueError(msg)
    result = ctx.unit()
    square = f
    while n:
        if n & 1:
            result = convolve(ctx, result, square)
        n >>= 1
        if n:
            square = convolve(ctx, square, square)
    return result


def adams(ctx: ConvolutionContext, n: int) -> GradedMap:
    """Return the Adams operator of index n.

    Parameters
    ----------
    ctx: ConvolutionContext
        The ambient algebra.
    n: int
        Any integer; 0 gives the convolution unit, negative values use
        powers of the antipode.

    Returns
    -------
    GradedMap
        The n-th convolution power of the identity.

    """
    if n not in ctx._adams:  # noqa: SLF001
        if n >= 0:
            value = convolution_power(ctx, ctx.identity(), n)
        else:
            value = convolution_power(ctx, antipode(ctx), -n)
        logger.debug("computed Adams operator %d on %s", n, ctx.hopf.name)
        ctx._adams[n] = value  # noqa: SLF001
    return ctx._adams[n]  # noqa: SLF001


def antipode(ctx: ConvolutionContext) -> GradedMap:
    """Return the antipode as the truncated geometric series in (unit - id).

    Parameters
    ----------
    ctx: ConvolutionContext
        The ambient algebra.

    Returns
    -------
    GradedMap
        The sum over k of (unit - id)^k, the k-th term kept only in degrees
        with N(degree) >= k.

    Raises
    ------
    ConnectednessError
        If degree 0 is not one dimensional.

    """
    if ctx._antipode is None:  # noqa: SLF001
        if ctx.basis.dim(ctx.basis.zero_degree) != 1:
            msg = "the antipode series needs a connected algebra"
            raise ConnectednessError(msg)
        step = ctx.unit() - ctx.identity()
        term = ctx.unit()
        total = ctx.unit()
        for k in range(1, ctx.bound + 1):
            term = _truncate(convolve(ctx, term, step), k)
            total = total + term
        ctx._antipode = total  # noqa: SLF001
    return ctx._antipode  # noqa: SLF001


def log_identity(ctx: ConvolutionContext) -> GradedMap:
    """The series sum of (-1)^(r-1)/r (id - unit)^r, truncated per degree."""
    if ctx._log is None:  # noqa: SLF001
        step = ctx.identity() - ctx.unit()
        term = ctx.unit()
        total = GradedMap.zero(ctx.basis)
        for r in range(1, ctx.bound + 1):
            term = _truncate(convolve(ctx, term, step), r)
            sign = ONE if r % 2 else -ONE
            total = total + term.scale(sign / r)
        ctx._log = total  # noqa: SLF001
    return ctx._log  # noqa: SLF001


def eulerian_idempotent(ctx: ConvolutionContext, n: int) -> GradedMap:
    """Return the n-th Eulerian idempotent (1/n!) log(id)^n.

    Parameters
    ----------
    ctx: ConvolutionContext
        The ambient algebra.
    n: int
        A natural number.

    Returns
    -------
    GradedMap
        The idempotent; it vanishes on degrees with N(degree) < n.

    """
    if n not in ctx._eulerian:  # noqa: SLF001
        if n == 0:
            value = ctx.unit()
        else:
            previous = eulerian_idempotent(ctx, n - 1)
            value = convolve(ctx, previous, log_identity(ctx)).scale(ONE / n)
            value = _truncate(value, n)
        ctx._eulerian[n] = value  # noqa: SLF001
    return ctx._eulerian[n]  # noqa: SLF001


def eulerian_expansion(ctx: ConvolutionContext, n: int) -> GradedMap:
    """The sum over r of n^r e^(r), truncated per degree at N(degree)."""
    total = GradedMap.zero(ctx.basis)
    for r in range(ctx.bound + 1):
        total = total + eulerian_idempotent(ctx, r).scale(power(n, r))
    return total


def check_eulerian_expansion(ctx: ConvolutionContext, n_values: Iterable[int]) -> Report:
    """Compare each Adams operator with its Eulerian expansion.

    Parameters
    ----------
    ctx: ConvolutionContext
        The ambient algebra.
    n_values: Iterable[int]
        Indices to check.

    Returns
    -------
    Report
        The first index and degree where the two differ, if any.

    """
    report = Report("eulerian expansion")
    for n in n_values:
        report.tick()
        degree = adams(ctx, n).first_difference(eulerian_expansion(ctx, n))
        if degree is not None:
            report.fail("Adams operator differs from sum of n^r e^(r)", n=n, degree=degree)
            break
    return report


def check_idempotent_system(ctx: ConvolutionContext) -> Report:
    """Check that the Eulerian idempotents are complete, idempotent and orthogonal.

    Only expected to pass on commutative or cocommutative algebras.

    Parameters
    ----------
    ctx: ConvolutionContext
        The ambient algebra.

    Returns
    -------
    Report
        Children for completeness, idempotence and orthogonality.

    """
    report = Report("eulerian idempotent system")
    indices = range(ctx.bound + 1)
    idempotents = {n: eulerian_idempotent(ctx, n) for n in indices}

    completeness = report.child("completeness")
    completeness.tick()
    total = GradedMap.zero(ctx.basis)
    for value in idempotents.values():
        total = total + value
    degree = total.first_difference(ctx.identity())
    if degree is not None:
        completeness.fail("sum of e^(n) is not the identity", degree=degree)

    idempotence = report.child("idempotence")
    orthogonality = report.child("orthogonality")
    zero = GradedMap.zero(ctx.basis)
    for m in indices:
        for n in indices:
            composite = idempotents[m] @ idempotents[n]
            if m == n:
                idempotence.tick()
                degree = composite.first_difference(idempotents[n])
                if degree is not None:
                    idempotence.fail("e^(n) o e^(n) != e^(n)", n=n, degree=degree)
            else:
                orthogonality.tick()
                degree = composite.first_difference(zero)
                if degree is not None:
                    orthogonality.fail("e^(m) o e^(n) != 0", m=m, n=n, degree=degree)
    return report


def check_antipode_identity(ctx: ConvolutionContext) -> Report:
    """Check S * id = id * S = unit."""
    report = Report("antipode identity")
    s = antipode(ctx)
    for name, value in (
        ("S*id", convolve(ctx, s, ctx.identity())),
        ("id*S", convolve(ctx, ctx.identity(), s)),
    ):
        report.tick()
        degree = value.first_difference(ctx.unit())
        if degree is not None:
            report.fail(f"{name} is not the convolution unit", degree=degree)
    return report


def check_power_law(ctx: ConvolutionContext, values: Iterable[int]) -> Report:
    """Check Psi_a * Psi_b = Psi_(a+b) for all pairs of the given indices."""
    report = Report("convolution power law")
    values = list(values)
    for a in values:
        for b in values:
            report.tick()
            value = convolve(ctx, adams(ctx, a), adams(ctx, b))
            degree = value.first_difference(adams(ctx, a + b))
            if degree is not None:
                report.fail("Psi_a * Psi_b != Psi_(a+b)", a=a, b=b, degree=degree)
                return report
    return report


def check_composition_rule(ctx: ConvolutionContext, values: Iterable[int]) -> Report:
    """Check Psi_a o Psi_b = Psi_(ab) for all pairs of the given indices."""
    report = Report("composition rule")
    values = list(values)
    for a in values:
        for b in values:
            report.tick()
            degree = (adams(ctx, a) @ adams(ctx, b)).first_difference(adams(ctx, a * b))
            if degree is not None:
                report.fail("Psi_a o Psi_b != Psi_(ab)", a=a, b=b, degree=degree)
                return report
    return report


def check_antipode_involution(ctx: ConvolutionContext) -> Report:
    """Check per degree that S o S = id exactly when S is diagonalizable."""
    report = Report("antipode involution")
    s = antipode(ctx)
    square = s @ s
    for degree in ctx.basis.degrees:
        report.tick()
        involutive = matrices_equal(square.block(degree), identity(ctx.basis.dim(degree)))
        diagonalizable = is_squarefree(min_poly(s.block(degree))) if ctx.basis.dim(degree) else True
        if involutive != diagonalizable:
            report.fail(
                "S^2 = id does not match diagonalizability of S",
                degree=degree, involutive=involutive, diagonalizable=diagonalizable,
            )
    return report
