# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import pytest
from strategies import deg

from hopf_adams.algebra import Element, Tensor, comultiply, is_cocommutative, is_commutative, multiply, verify_bialgebra
from hopf_adams.errors import HopfError
from hopf_adams.instances import (
    InstanceSpec,
    build_instance,
    build_shuffle_hopf,
    build_tensor_hopf,
    check_duality,
    cocommutative_family,
    commutative_family,
    shuffles,
)


class TestInstanceSpec:
    def test_name_and_rank(self, tensor_spec):
        assert tensor_spec.name == "tensor[1;1]<=4"
        assert tensor_spec.rank == 1
        two = InstanceSpec.of("shuffle", [(1, 0), (0, 1)], 2)
        assert two.name == "shuffle[1,0;0,1]<=2"
        assert two.rank == 2

    @pytest.mark.parametrize(
        ("kind", "degrees", "bound", "match"),
        [
            ("free", [1], 2, "unknown instance kind"),
            ("tensor", [], 2, "at least one generator"),
            ("tensor", [0], 2, "nonzero"),
            ("tensor", [1, (1, 0)], 2, "different ranks"),
            ("tensor", [1], -1, "negative bound"),
        ],
    )
    def test_rejects(self, kind, degrees, bound, match):
        with pytest.raises(HopfError, match=match):
            InstanceSpec.of(kind, degrees, bound)

    def test_builders_check_kind(self, tensor_spec, shuffle_spec):
        with pytest.raises(HopfError):
            build_tensor_hopf(shuffle_spec)
        with pytest.raises(HopfError):
            build_shuffle_hopf(tensor_spec)


class TestTensorInstance:
    def test_dimensions(self, tensor_ab):
        assert [tensor_ab.basis.dim(d) for d in tensor_ab.basis.degrees] == [1, 2, 4, 8, 16]
        assert tensor_ab.unit == "1"

    def test_mixed_degrees(self):
        hopf = build_instance(InstanceSpec.of("tensor", [1, 2], 3))
        assert [hopf.basis.dim(d) for d in hopf.basis.degrees] == [1, 1, 2, 3]
        assert set(hopf.basis.labels(deg(3))) == {"aaa", "ab", "ba"}

    def test_two_gradings(self):
        hopf = build_instance(InstanceSpec.of("tensor", [(1, 0), (0, 1)], 2))
        assert set(hopf.basis.labels(deg(1, 1))) == {"ab", "ba"}
        assert hopf.basis.dim(deg(2, 0)) == 1
        assert verify_bialgebra(hopf).passed

    def test_concatenation(self, tensor_ab):
        a, b = tensor_ab.element("a"), tensor_ab.element("b")
        assert multiply(tensor_ab, a, tensor_ab.element("ab")) == Element.monomial("aab")
        assert multiply(tensor_ab, b, a) == Element.monomial("ba")

    def test_unshuffle_coproduct(self, tensor_ab):
        assert comultiply(tensor_ab, tensor_ab.element("ab")) == Tensor({
            ("1", "ab"): 1, ("a", "b"): 1, ("b", "a"): 1, ("ab", "1"): 1,
        })
        assert comultiply(tensor_ab, tensor_ab.element("aa")) == Tensor({
            ("1", "aa"): 1, ("a", "a"): 2, ("aa", "1"): 1,
        })

    def test_commutativity(self, tensor_ab):
        assert is_cocommutative(tensor_ab) == (True, None)
        assert not is_commutative(tensor_ab)[0]


class TestShuffleInstance:
    def test_shuffles(self):
        assert sorted(shuffles((0,), (0, 1))) == [(0, 0, 1), (0, 0, 1), (0, 1, 0)]
        assert shuffles((), (1,)) == [(1,)]

    def test_shuffle_product(self, shuffle_ab):
        product = multiply(shuffle_ab, shuffle_ab.element("a"), shuffle_ab.element("ab"))
        assert product == Element({"aab": 2, "aba": 1})

    def test_deconcatenation(self, shuffle_ab):
        assert comultiply(shuffle_ab, shuffle_ab.element("ab")) == Tensor({
            ("1", "ab"): 1, ("a", "b"): 1, ("ab", "1"): 1,
        })

    def test_axioms(self):
        hopf = build_instance(InstanceSpec.of("shuffle", [1, 1], 3))
        assert verify_bialgebra(hopf).passed
        assert is_commutative(hopf) == (True, None)
        assert not is_cocommutative(hopf)[0]


class TestDuality:
    def test_dual_pair(self, tensor_ab, shuffle_ab):
        report = check_duality(tensor_ab, shuffle_ab)
        assert report.passed
        assert [child.name for child in report.children] == ["strata", "product", "coproduct"]
        assert report.children[1].checked > 0

    def test_different_words(self, tensor_ab):
        other = build_instance(InstanceSpec.of("shuffle", [1], 4))
        report = check_duality(tensor_ab, other)
        assert report.first_failure().name == "strata"

    def test_tensor_is_not_self_dual(self, tensor_ab):
        assert not check_duality(tensor_ab, tensor_ab).passed


class TestFamilies:
    def test_cocommutative(self, tensor_spec, tensor_ab):
        family = cocommutative_family(tensor_ab, tensor_spec)
        labels = [g.label for g in family.generators]
        assert labels == ["[baaa]", "[bbaa]", "[bbba]", "[baa]", "[bba]", "[ba]", "[a]", "[b]"]
        assert family[family.index("[ba]")].element == Element({"ba": 1, "ab": -1})

    def test_commutative(self, shuffle_spec, shuffle_ab):
        family = commutative_family(shuffle_ab, shuffle_spec)
        assert [g.label for g in family.generators] == ["a", "b", "ba", "baa", "bba", "baaa", "bbaa", "bbba"]
        assert family[2].element == Element.monomial("ba")
