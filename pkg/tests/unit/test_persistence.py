# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import copy
import json
import logging

import pytest

from hopf_adams.algebra import verify_bialgebra
from hopf_adams.convolution import adams
from hopf_adams.errors import CacheError, ConnectednessError, SchemaError
from hopf_adams.persistence import (
    cache_key,
    cached_hopf,
    graded_map_from_json,
    hopf_from_json,
    hopf_to_json,
    load_graded_map,
    load_hopf,
    load_pbw,
    save_graded_map,
    save_hopf,
    save_pbw,
)
from hopf_adams.ssym import build_ssym, t_basis


@pytest.fixture
def document(ssym3):
    return copy.deepcopy(hopf_to_json(ssym3))


def without_words(document):
    for generator in document["generators"]:
        generator.pop("word")
    return document


class TestHopfDocuments:
    def test_round_trip(self, ssym3, tmp_path):
        path = tmp_path / "ssym.json"
        save_hopf(ssym3, path)
        loaded = load_hopf(path)
        assert loaded.name == "ssym<=3"
        assert hopf_to_json(loaded) == hopf_to_json(ssym3)
        assert verify_bialgebra(loaded).passed

    def test_canonical_text(self, ssym3, tmp_path):
        first, second = tmp_path / "a.json", tmp_path / "b.json"
        save_hopf(ssym3, first)
        save_hopf(load_hopf(first), second)
        assert first.read_text() == second.read_text()

    def test_header(self, document):
        assert document["unit"] == "F:()"
        assert document["basis"]["2"] == ["F:12", "F:21"]
        assert document["grading_rank"] == 1

    @pytest.mark.parametrize(
        ("edit", "pointer"),
        [
            (lambda d: d.pop("product"), "/product"),
            (lambda d: d["basis"].update({"x": []}), "/basis/x"),
            (lambda d: d["product"][0].__setitem__(0, "F:999"), "/product/0/0"),
            (lambda d: d["product"][0][2][0].__setitem__(1, 1), "/product/0/2/0/1"),
            (lambda d: d.update(unit="F:1"), "/unit"),
            (lambda d: d["coproduct"][0].__setitem__(1, "terms"), "/coproduct/0/1"),
        ],
    )
    def test_schema_pointer(self, document, edit, pointer):
        edit(document)
        with pytest.raises(SchemaError) as info:
            hopf_from_json(document)
        assert info.value.pointer == pointer

    def test_not_connected(self):
        document = {"grading_rank": 1, "bound": 1, "basis": {"0": ["1", "e"], "1": ["x"]}, "product": [], "coproduct": []}
        with pytest.raises(ConnectednessError):
            hopf_from_json(document)

    def test_normalizes_scalars(self, document, ssym3, caplog):
        document["product"][0][2][0][1] = "2/2"
        with caplog.at_level(logging.WARNING):
            loaded = hopf_from_json(document)
        assert "normalized" in caplog.text
        assert hopf_to_json(loaded) == hopf_to_json(ssym3)

    def test_malformed_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{", encoding="utf-8")
        with pytest.raises(SchemaError, match="malformed JSON"):
            load_hopf(path)


class TestMapDocuments:
    def test_round_trip(self, ssym3, ctx3, tmp_path):
        path = tmp_path / "psi2.json"
        psi2 = adams(ctx3, 2)
        save_graded_map(psi2, path)
        assert load_graded_map(ssym3.basis, path) == psi2
        assert json.loads(path.read_text())["2"] == [["3", "1"], ["1", "3"]]

    def test_wrong_shape(self, ssym3):
        with pytest.raises(SchemaError):
            graded_map_from_json(ssym3.basis, {"2": [["1"]]})

    def test_bad_scalar(self, ssym3):
        with pytest.raises(SchemaError) as info:
            graded_map_from_json(ssym3.basis, {"1": [["x"]]})
        assert info.value.pointer == "/1/0/0"


class TestPBWDocuments:
    def test_round_trip(self, ssym3, tmp_path):
        path = tmp_path / "t.json"
        basis = t_basis(ssym3)
        save_pbw(basis, path)
        loaded = load_pbw(ssym3, path)
        assert without_words(loaded.to_json()) == without_words(basis.to_json())


class TestCache:
    def test_builds_once(self, tmp_path):
        calls = []

        def build():
            calls.append(1)
            return build_ssym(2)

        first = cached_hopf(tmp_path, "ssym", 2, build)
        second = cached_hopf(tmp_path, "ssym", 2, build)
        assert len(calls) == 1
        assert hopf_to_json(first) == hopf_to_json(second)
        assert (tmp_path / f"{cache_key('ssym', 2)}.json").is_file()

    def test_disabled(self):
        calls = []

        def build():
            calls.append(1)
            return build_ssym(1)

        cached_hopf(None, "ssym", 1, build)
        cached_hopf(None, "ssym", 1, build)
        assert len(calls) == 2

    def test_corrupt_entry(self, tmp_path):
        (tmp_path / f"{cache_key('ssym', 2)}.json").write_text("not json", encoding="utf-8")
        with pytest.raises(CacheError):
            cached_hopf(tmp_path, "ssym", 2, lambda: build_ssym(2))

    def test_key(self):
        assert cache_key("ssym", 3) == cache_key("ssym", 3)
        assert cache_key("ssym", 3) != cache_key("ssym", 4)
        assert len(cache_key("tensor[1;1]<=3", 3)) == 64
