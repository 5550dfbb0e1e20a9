# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from strategies import PSI2_T_PREC_R, rationals
from sympy import QQ, Poly

from hopf_adams.errors import NonSquareMatrixError
from hopf_adams.linalg import (
    X,
    char_poly,
    divides,
    format_factored,
    format_scalar,
    from_rows,
    identity,
    inverse,
    is_squarefree,
    linear_factor,
    matrices_equal,
    min_poly,
    parse_scalar,
    permute,
    pivot_columns,
    poly,
    power,
    rank,
    to_lists,
)


def small_matrices(size=4):
    return st.lists(
        st.lists(st.integers(-3, 3), min_size=size, max_size=size), min_size=size, max_size=size,
    ).map(from_rows)


class TestScalars:
    @pytest.mark.parametrize(
        ("text", "value", "canonical"),
        [
            ("3", QQ(3), True),
            ("-1/2", QQ(-1, 2), True),
            ("2/4", QQ(1, 2), False),
            ("3/1", QQ(3), False),
            ("1/-2", QQ(-1, 2), False),
        ],
    )
    def test_parse(self, text, value, canonical):
        assert parse_scalar(text) == (value, canonical)

    def test_parse_errors(self):
        with pytest.raises(ValueError, match="zero denominator"):
            parse_scalar("1/0")
        with pytest.raises(ValueError):
            parse_scalar("x")

    def test_format(self):
        assert format_scalar(QQ(-3, 6)) == "-1/2"
        assert format_scalar(4) == "4"
        assert format_scalar(QQ(0)) == "0"

    @given(rationals())
    def test_format_is_canonical(self, value):
        assert parse_scalar(format_scalar(value)) == (value, True)

    def test_power(self):
        assert power(0, 0) == 1
        assert power(0, 3) == 0
        assert power(-1, 3) == -1
        assert power(2, 10) == 1024


class TestMatrices:
    def test_identity_and_lists(self):
        assert to_lists(identity(2)) == [[1, 0], [0, 1]]
        assert rank(from_rows([[1, 2], [2, 4]])) == 1
        assert pivot_columns(from_rows([[0, 1, 2], [0, 0, 0]])) == (1,)

    def test_inverse(self):
        m = from_rows([[1, 1], [0, 2]])
        assert matrices_equal(inverse(m) * m, identity(2))
        with pytest.raises(NonSquareMatrixError):
            inverse(from_rows([[1, 2]]))

    def test_permute(self):
        m = from_rows([[1, 2], [3, 4]])
        assert to_lists(permute(m, [1, 0])) == [[4, 3], [2, 1]]


class TestCharPoly:
    def test_small_cases(self):
        assert char_poly(identity(2)) == linear_factor(1) ** 2
        assert char_poly(from_rows([[2, 1], [0, 2]])) == linear_factor(2) ** 2
        assert char_poly(from_rows([[2, 1], [0, 3]])) == poly([1, -5, 6])
        assert char_poly(from_rows([[0, 1], [1, 0]])) == poly([1, 0, -1])

    def test_empty_matrix(self):
        assert char_poly(from_rows([])) == poly([1])

    def test_adams_block(self):
        exact = char_poly(from_rows(PSI2_T_PREC_R))
        assert format_factored(exact) == "(x-2)^4 (x-4) (x-8)"

    def test_non_square(self):
        with pytest.raises(NonSquareMatrixError):
            char_poly(from_rows([[1, 2]]))

    @settings(max_examples=40, deadline=None)
    @given(small_matrices())
    def test_agrees_with_sympy_matrix(self, m):
        assert char_poly(m) == Poly(m.to_Matrix().charpoly(X).as_expr(), X, domain=QQ)


class TestMinPoly:
    def test_small_cases(self):
        assert min_poly(identity(3)) == linear_factor(1)
        assert min_poly(from_rows([[2, 0], [0, 3]])) == linear_factor(2) * linear_factor(3)
        assert min_poly(from_rows([[2, 1], [0, 2]])) == linear_factor(2) ** 2

    def test_adams_block(self):
        minimal = min_poly(from_rows(PSI2_T_PREC_R))
        assert format_factored(minimal) == "(x-2)^2 (x-4) (x-8)"
        assert not is_squarefree(minimal)

    def test_non_square(self):
        with pytest.raises(NonSquareMatrixError):
            min_poly(from_rows([[1, 2]]))

    @settings(max_examples=40, deadline=None)
    @given(small_matrices())
    def test_divides_char_poly(self, m):
        minimal = min_poly(m)
        assert divides(minimal, char_poly(m))
        assert minimal.LC() == 1

    @settings(max_examples=40, deadline=None)
    @given(small_matrices(3))
    def test_annihilates(self, m):
        coefficients = min_poly(m).all_coeffs()
        n = m.shape[0]
        value = from_rows([[0] * n] * n)
        for c in coefficients:
            value = value * m + identity(n) * QQ.convert(c)
        assert matrices_equal(value, from_rows([[0] * n] * n))


class TestFactored:
    def test_signs_and_irreducibles(self):
        assert format_factored(linear_factor(-1) * linear_factor(0) ** 2) == "(x+1) x^2"
        assert format_factored(poly([1, 0, 1])) == "(x^2+1)"
        assert format_factored(poly([1])) == "1"
        assert format_factored(linear_factor(QQ(1, 2))) == "(x-1/2)"

    def test_content_is_folded(self):
        assert format_factored(linear_factor(QQ(1, 2)) * linear_factor(QQ(-2, 3))) == "(x+2/3) (x-1/2)"
        assert format_factored(poly([2, -1])) == "2 (x-1/2)"
        assert format_factored(poly([QQ(1, 2), 0, QQ(1, 2)])) == "1/2 (x^2+1)"
        assert format_factored(poly([-3])) == "-3"
