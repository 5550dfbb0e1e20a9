# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from strategies import deg

from hopf_adams.algebra import Element
from hopf_adams.errors import HilbertInversionError, HopfError
from hopf_adams.linalg import format_factored
from hopf_adams.pbw import Generator, GeneratorFamily, PBWBasis
from hopf_adams.spectra import (
    check_char_polys,
    count_sequences_check,
    hilbert_series,
    multiplicity,
    multiplicity_table,
    predicted_char_poly,
    primitive_dims,
    row_sums,
    series_from_primitives,
)
from hopf_adams.ssym import lyndon_counts, t_basis

SSYM_PRIMITIVES = {deg(1): 1, deg(2): 1, deg(3): 4, deg(4): 17}


def primitive_counts():
    return st.dictionaries(st.integers(1, 4).map(deg), st.integers(0, 3), max_size=4)


class TestHilbertSeries:
    def test_ssym(self, ssym4):
        assert hilbert_series(ssym4) == {deg(0): 1, deg(1): 1, deg(2): 2, deg(3): 6, deg(4): 24}

    def test_ssym_primitives(self, ssym4):
        assert primitive_dims(hilbert_series(ssym4)) == SSYM_PRIMITIVES

    def test_primitives_match_lyndon_counts(self, ssym4):
        assert {d.total: c for d, c in primitive_dims(hilbert_series(ssym4)).items()} == lyndon_counts(4)

    def test_two_primitive_letters(self):
        series = {deg(0): 1, deg(1): 2, deg(2): 3, deg(3): 4}
        assert primitive_dims(series) == {deg(1): 2, deg(2): 0, deg(3): 0}

    def test_tensor_words(self, tensor_ab):
        assert primitive_dims(hilbert_series(tensor_ab)) == {deg(1): 2, deg(2): 1, deg(3): 2, deg(4): 3}

    def test_rejects_invalid_series(self):
        with pytest.raises(HilbertInversionError, match="below"):
            primitive_dims({deg(0): 1, deg(1): 2, deg(2): 1})
        with pytest.raises(HilbertInversionError, match="starts with"):
            primitive_dims({deg(0): 2})
        with pytest.raises(HilbertInversionError):
            primitive_dims({})

    @settings(max_examples=50)
    @given(primitive_counts())
    def test_round_trip(self, p):
        series = series_from_primitives(p, 4)
        recovered = primitive_dims(series)
        assert {d: c for d, c in recovered.items() if c} == {d: c for d, c in p.items() if c}

    def test_two_gradings(self):
        p = {deg(1, 0): 1, deg(0, 1): 1}
        series = series_from_primitives(p, 3, rank=2)
        assert set(series.values()) == {1}
        assert len(series) == 10
        assert primitive_dims(series) == {d: (1 if d.total == 1 else 0) for d in series if not d.is_zero()}


class TestMultiplicities:
    def test_ssym(self):
        table = multiplicity_table(SSYM_PRIMITIVES, [deg(0), deg(3), deg(4)])
        assert table[deg(0)] == [1]
        assert table[deg(3)] == [0, 4, 1, 1]
        assert table[deg(4)] == [0, 17, 5, 1, 1]

    def test_out_of_range(self):
        assert multiplicity(SSYM_PRIMITIVES, 5, deg(4)) == 0
        assert multiplicity({}, 1, deg(2)) == 0

    def test_two_gradings(self):
        assert multiplicity({deg(1, 0): 1, deg(0, 1): 1}, 2, deg(1, 1)) == 1
        assert multiplicity({deg(1, 0): 2, deg(0, 1): 1}, 3, deg(2, 1)) == 3

    @settings(max_examples=50)
    @given(primitive_counts())
    def test_rows_sum_to_dimensions(self, p):
        series = series_from_primitives(p, 4)
        for degree, (total, dim) in row_sums(p, series).items():
            assert total == dim, degree

    def test_row_sums(self, ssym4):
        assert row_sums(SSYM_PRIMITIVES, hilbert_series(ssym4))[deg(4)] == (24, 24)


class TestCharPolys:
    @pytest.mark.parametrize(
        ("n", "expected"),
        [
            (2, "(x-2)^4 (x-4) (x-8)"),
            (1, "(x-1)^6"),
            (0, "x^6"),
            (-1, "(x+1)^5 (x-1)"),
            (3, "(x-3)^4 (x-9) (x-27)"),
        ],
    )
    def test_predicted(self, n, expected):
        assert format_factored(predicted_char_poly(SSYM_PRIMITIVES, n, deg(3))) == expected

    def test_ssym_matches(self, ctx4):
        report = check_char_polys(ctx4, [-2, -1, 0, 1, 2, 3])
        assert report.passed
        adams_2 = report.children[4]
        assert adams_2.name == "adams 2"
        assert adams_2.data["3"] == "(x-2)^4 (x-4) (x-8)"
        assert adams_2.data["0"] == "(x-1)"

    def test_instances_match(self, tensor_ctx, shuffle_ctx):
        assert check_char_polys(tensor_ctx, [-1, 2, 3]).passed
        assert check_char_polys(shuffle_ctx, [-1, 2, 3]).passed

    def test_wrong_primitives_fail(self, ctx3):
        report = check_char_polys(ctx3, [2], {deg(1): 1, deg(2): 1, deg(3): 3})
        assert not report.passed
        assert report.first_failure().witness["degree"] == deg(3)


class TestSequenceCounts:
    def test_t_basis(self, ssym3):
        assert count_sequences_check(t_basis(ssym3), SSYM_PRIMITIVES).passed

    def test_wrong_counts(self, ssym3):
        report = count_sequences_check(t_basis(ssym3), {deg(1): 1, deg(2): 2})
        assert not report.passed

    def test_needs_infinite_heights(self, ssym3):
        family = GeneratorFamily([Generator("g", deg(1), Element.monomial("F:1"), 2)])
        with pytest.raises(HopfError, match="infinite heights"):
            count_sequences_check(PBWBasis(ssym3, family, {}, {}, {}), SSYM_PRIMITIVES)


@pytest.mark.slow
class TestSizeFive:
    def test_ssym_matches(self, ctx5):
        report = check_char_polys(ctx5, [-2, -1, 0, 1, 2, 3])
        assert report.passed, report.as_dict()
        assert [child.checked for child in report.children] == [6] * 6

    def test_sequence_counts(self, ssym5):
        primitives = primitive_dims(hilbert_series(ssym5))
        assert primitives[deg(5)] == 92
        assert count_sequences_check(t_basis(ssym5), primitives).passed
