# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

"""Multidegrees over the free abelian monoid N^k.

Degrees are ordered graded-lexicographically: total part-sum first, then
lexicographically on the parts. This order is total, a well order and
compatible with addition.
"""

from __future__ import annotations

import functools
import itertools
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import IntEnum

from hopf_adams.errors import RankMismatchError


class Ordering(IntEnum):
    """Result of a three-way comparison."""

    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls: type[Ordering], a: object, b: object) -> Ordering:
        """Compare two natively ordered values."""
        if a < b:  # type: ignore[operator]
            return cls.LESS
        if b < a:  # type: ignore[operator]
            return cls.GREATER
        return cls.EQUAL


@functools.total_ordering
@dataclass(frozen=True)
class MultiDegree:
    """An element of N^k."""

    parts: tuple[int, ...]

    def __post_init__(self: MultiDegree) -> None:
        """Validate the parts."""
        if not self.parts:
            msg = "a multidegree needs at least one part"
            raise RankMismatchError(msg)
        if any(p < 0 for p in self.parts):
            msg = f"negative part in degree {self.parts}"
            raise ValueError(msg)

    @classmethod
    def of(cls: type[MultiDegree], *parts: int) -> MultiDegree:
        """Build a degree from its parts."""
        return cls(tuple(parts))

    @classmethod
    def zero(cls: type[MultiDegree], rank: int = 1) -> MultiDegree:
        """Return the zero degree of the given rank."""
        return cls((0,) * rank)

    @classmethod
    def coerce(cls: type[MultiDegree], value: MultiDegree | int | Iterable[int]) -> MultiDegree:
        """Accept a degree, a natural number (rank 1) or a sequence of parts."""
        if isinstance(value, MultiDegree):
            return value
        if isinstance(value, int):
            return cls((value,))
        return cls(tuple(int(p) for p in value))

    @property
    def rank(self: MultiDegree) -> int:
        """Number of parts."""
        return len(self.parts)

    @property
    def total(self: MultiDegree) -> int:
        """Sum of the parts."""
        return sum(self.parts)

    def is_zero(self: MultiDegree) -> bool:
        """Whether every part vanishes."""
        return self.total == 0

    def _check_rank(self: MultiDegree, other: MultiDegree) -> None:
        if self.rank != other.rank:
            msg = f"rank mismatch: {self.parts} vs {other.parts}"
            raise RankMismatchError(msg)

    def __add__(self: MultiDegree, other: MultiDegree) -> MultiDegree:
        """Componentwise sum."""
        self._check_rank(other)
        return MultiDegree(tuple(a + b for a, b in zip(self.parts, other.parts)))

    def __sub__(self: MultiDegree, other: MultiDegree) -> MultiDegree:
        """Componentwise difference; fails when a part would become negative."""
        self._check_rank(other)
        return MultiDegree(tuple(a - b for a, b in zip(self.parts, other.parts)))

    def __mul__(self: MultiDegree, n: int) -> MultiDegree:
        """Scale every part by a natural number."""
        return MultiDegree(tuple(n * p for p in self.parts))

    __rmul__ = __mul__

    def divides(self: MultiDegree, other: MultiDegree) -> bool:
        """Whether other - self lies in N^k (componentwise order)."""
        self._check_rank(other)
        return all(a <= b for a, b in zip(self.parts, other.parts))

    def __lt__(self: MultiDegree, other: object) -> bool:
        """Graded-lexicographic order."""
        if not isinstance(other, MultiDegree):
            return NotImplemented
        return graded_compare(self, other) is Ordering.LESS

    def __str__(self: MultiDegree) -> str:
        """Plain natural for rank 1, comma separated parts otherwise."""
        if self.rank == 1:
            return str(self.parts[0])
        return ",".join(str(p) for p in self.parts)

    def to_json(self: MultiDegree) -> list[int]:
        """Serialize as a JSON array of naturals."""
        return list(self.parts)


def max_parts(degree: MultiDegree) -> int:
    """Return N(degree), the largest number of nonzero summands of a degree.

    Parameters
    ----------
    degree: MultiDegree
        The degree to decompose.

    Returns
    -------
    int
        The part-sum of the degree (0 for the zero degree).

    """
    return degree.total


def graded_compare(first: MultiDegree, second: MultiDegree) -> Ordering:
    """Compare two degrees graded-lexicographically.

    Parameters
    ----------
    first: MultiDegree
        Left operand.
    second: MultiDegree
        Right operand.

    Returns
    -------
    Ordering
        LESS, EQUAL or GREATER.

    Raises
    ------
    RankMismatchError
        If the degrees have different ranks.

    """
    if first.rank != second.rank:
        msg = f"cannot compare degrees {first.parts} and {second.parts}"
        raise RankMismatchError(msg)
    return Ordering.of((first.total, first.parts), (second.total, second.parts))


def degrees_up_to(rank: int, bound: int) -> list[MultiDegree]:
    """List every degree of the given rank with part-sum at most bound, ascending."""
    found = [
        MultiDegree(parts)
        for parts in itertools.product(range(bound + 1), repeat=rank)
        if sum(parts) <= bound
    ]
    return sorted(found)


def decompositions(degree: MultiDegree) -> Iterator[tuple[MultiDegree, ...]]:
    """Yield every ordered decomposition of a degree into nonzero summands."""
    if degree.is_zero():
        yield ()
        return
    for first in degrees_up_to(degree.rank, degree.total):
        if first.is_zero() or not first.divides(degree):
            continue
        for rest in decompositions(degree - first):
            yield (first, *rest)
