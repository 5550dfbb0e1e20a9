# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import pytest
from hypothesis import given
from strategies import deg, degrees

from hopf_adams.errors import RankMismatchError
from hopf_adams.grading import (
    MultiDegree,
    Ordering,
    decompositions,
    degrees_up_to,
    graded_compare,
    max_parts,
)


class TestMultiDegree:
    def test_arithmetic(self):
        assert deg(1, 2) + deg(2, 0) == deg(3, 2)
        assert deg(3, 2) - deg(1, 2) == deg(2, 0)
        assert deg(1, 2) * 3 == deg(3, 6)
        assert 2 * deg(1) == deg(2)

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatchError):
            deg(1) + deg(1, 0)
        with pytest.raises(RankMismatchError):
            graded_compare(deg(1), deg(0, 1))

    def test_invalid_parts(self):
        with pytest.raises(ValueError, match="negative"):
            deg(1) - deg(2)
        with pytest.raises(RankMismatchError):
            MultiDegree(())

    def test_coerce(self):
        assert MultiDegree.coerce(3) == deg(3)
        assert MultiDegree.coerce([1, 0]) == deg(1, 0)
        assert MultiDegree.coerce(deg(2)) == deg(2)

    def test_str_and_json(self):
        assert str(deg(4)) == "4"
        assert str(deg(1, 2)) == "1,2"
        assert deg(1, 2).to_json() == [1, 2]

    def test_divides(self):
        assert deg(1, 0).divides(deg(2, 1))
        assert not deg(0, 2).divides(deg(2, 1))

    def test_max_parts(self):
        assert max_parts(deg(0, 0)) == 0
        assert max_parts(deg(2, 1)) == 3


class TestGradedOrder:
    def test_total_first(self):
        assert graded_compare(deg(0, 3), deg(2, 0)) is Ordering.GREATER
        assert graded_compare(deg(1, 2), deg(2, 1)) is Ordering.LESS
        assert graded_compare(deg(1, 1), deg(1, 1)) is Ordering.EQUAL

    def test_degrees_up_to(self):
        assert degrees_up_to(2, 2) == [deg(0, 0), deg(0, 1), deg(1, 0), deg(0, 2), deg(1, 1), deg(2, 0)]
        assert degrees_up_to(1, 3) == [deg(0), deg(1), deg(2), deg(3)]

    @given(degrees(), degrees())
    def test_antisymmetric(self, a, b):
        assert graded_compare(a, b) == -graded_compare(b, a)

    @given(degrees(), degrees())
    def test_addition_commutes(self, a, b):
        assert a + b == b + a
        assert (a + b).total == a.total + b.total


class TestDecompositions:
    def test_compositions_of_three(self):
        found = set(decompositions(deg(3)))
        assert found == {
            (deg(1), deg(1), deg(1)),
            (deg(1), deg(2)),
            (deg(2), deg(1)),
            (deg(3),),
        }

    def test_zero(self):
        assert list(decompositions(deg(0, 0))) == [()]

    @given(degrees(rank=2, max_part=2))
    def test_sums(self, degree):
        for parts in decompositions(degree):
            total = MultiDegree.zero(2)
            for part in parts:
                assert not part.is_zero()
                total = total + part
            assert total == degree

    def test_count_rank_one(self):
        for n in range(1, 6):
            assert len(list(decompositions(deg(n)))) == 2 ** (n - 1)

    def test_count_rank_two(self):
        # ordered compositions of (1, 1): (1,1) itself and the two orders of its parts
        assert len(list(decompositions(deg(1, 1)))) == 3
