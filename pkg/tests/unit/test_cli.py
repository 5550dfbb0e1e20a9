# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import json

import pytest
from strategies import PSI2_T_PREC_R, T_ORDER_R

from hopf_adams.cli import main
from hopf_adams.persistence import load_hopf


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("HOPF_ADAMS_CACHE_DIR", str(tmp_path / "cache"))


def run(capsys, *argv):
    with pytest.raises(SystemExit) as info:
        main(list(argv))
    captured = capsys.readouterr()
    return info.value.code, captured.out, captured.err


def run_json(capsys, *argv):
    rc, out, err = run(capsys, *argv, "--format", "json")
    return rc, json.loads(out), err


class TestMatrices:
    def test_adams_in_t_basis(self, capsys):
        rc, result, _ = run_json(capsys, "adams", "--n", "2", "--degree", "3", "--basis", "T", "--order", "precR")
        assert rc == 0
        assert result["command"] == "adams"
        assert result["instance"] == "ssym<=3"
        (matrix,) = result["matrices"]
        assert matrix["title"] == "Psi_2 on degree 3 in basis T"
        assert matrix["rows"] == T_ORDER_R
        assert matrix["entries"] == [[str(v) for v in row] for row in PSI2_T_PREC_R]

    def test_adams_text(self, capsys):
        rc, out, _ = run(capsys, "adams", "--n", "-1", "2", "--degree", "2")
        assert rc == 0
        assert "Psi_-1 on degree 2 in basis F" in out
        assert "Psi_2 on degree 2 in basis F" in out

    def test_adams_csv(self, capsys):
        rc, out, _ = run(capsys, "adams", "--degree", "1", "--format", "csv")
        assert rc == 0
        assert out.splitlines() == ["matrix,row,column,value", "Psi_2 on degree 1 in basis F,F:1,F:1,2"]

    def test_antipode(self, capsys):
        rc, result, _ = run_json(capsys, "antipode", "--degree", "2")
        assert rc == 0
        assert result["matrices"][0]["entries"] == [["0", "1"], ["1", "0"]]
        assert all(report["passed"] for report in result["reports"])

    def test_eulerian_on_tensor(self, capsys):
        rc, result, _ = run_json(
            capsys, "eulerian", "--instance", "tensor", "--generators", "1", "1", "--degree", "2", "--idempotents",
        )
        assert rc == 0
        assert [m["title"] for m in result["matrices"]] == [f"e^({r}) on degree 2 in basis F" for r in range(3)]
        assert len(result["reports"]) == 2


class TestChecks:
    def test_charpoly_matches(self, capsys):
        rc, out, _ = run(capsys, "charpoly", "--n", "2", "--degree", "3")
        assert rc == 0
        assert "(x-2)^4 (x-4) (x-8)" in out
        assert out.strip().splitlines()[-1] == "MATCH"

    def test_verify_ssym(self, capsys):
        rc, result, _ = run_json(capsys, "verify")
        assert rc == 0
        assert all(report["passed"] for report in result["reports"])
        assert len(result["reports"]) == 5

    def test_verify_tensor(self, capsys):
        rc, result, _ = run_json(capsys, "verify", "--instance", "tensor", "--generators", "1", "1", "--degree", "3")
        assert rc == 0
        assert len(result["reports"]) == 6

    def test_verify_file_instance(self, capsys, tmp_path):
        path = tmp_path / "ssym2.json"
        assert run(capsys, "build", "--degree", "2", "--output", str(path))[0] == 0
        rc, result, _ = run_json(capsys, "verify", "--instance", str(path), "--degree", "2", "--n", "2")
        assert rc == 0
        assert len(result["reports"]) == 3

    def test_hilbert(self, capsys):
        rc, result, _ = run_json(capsys, "hilbert", "--degree", "4")
        assert rc == 0
        assert result["series"] == {"0": 1, "1": 1, "2": 2, "3": 6, "4": 24}
        assert result["primitives"] == {"1": 1, "2": 1, "3": 4, "4": 17}


class TestConstruction:
    def test_build_writes_document(self, capsys, tmp_path):
        path = tmp_path / "out.json"
        rc, result, _ = run_json(capsys, "build", "--degree", "2", "--output", str(path))
        assert rc == 0
        assert result["changed"] is True
        assert result["path"] == str(path)
        assert load_hopf(path).name == "ssym<=2"

    def test_build_caches(self, capsys, tmp_path):
        run(capsys, "build", "--degree", "2")
        run(capsys, "build", "--degree", "2")
        assert len(list((tmp_path / "cache").iterdir())) == 1

    def test_no_cache(self, capsys, tmp_path):
        assert run(capsys, "build", "--degree", "2", "--no-cache")[0] == 0
        assert not (tmp_path / "cache").exists()

    def test_pbw_on_ssym(self, capsys):
        rc, result, _ = run_json(capsys, "pbw", "--degree", "3", "--check")
        assert rc == 0
        assert result["generators"] == ["1", "213", "21", "231", "312", "321"]
        assert result["reports"][0]["passed"]

    def test_pbw_fails_on_shuffle_letters(self, capsys):
        rc, _, err = run(capsys, "pbw", "--instance", "shuffle", "--generators", "1", "1", "--degree", "2")
        assert rc == 1
        assert "pbw: FAILED:" in err
        assert "span 3 of 4" in err

    def test_classify(self, capsys):
        rc, result, _ = run_json(capsys, "classify", "--degree", "3")
        assert rc == 0
        assert result["classes"]["3"] == {"connected": ["231", "312", "321"], "lyndon": ["213"], "other": ["123", "132"]}
        assert len(result["chains"]["R"]) == 9


class TestUsageErrors:
    def test_order_needs_permutations(self, capsys):
        rc, _, err = run(capsys, "adams", "--instance", "tensor", "--generators", "1", "1", "--order", "precL")
        assert rc == 2
        assert "order precL needs the permutation algebra" in err

    def test_invalid_choice(self, capsys):
        rc, _, err = run(capsys, "adams", "--basis", "Q")
        assert rc == 2
        assert "invalid choice" in err

    def test_degree_zero(self, capsys):
        rc, _, err = run(capsys, "adams", "--degree", "0")
        assert rc == 2
        assert "adams: FAILED:" in err

    def test_bad_generator(self, capsys):
        rc, _, err = run(capsys, "adams", "--instance", "tensor", "--generators", "x")
        assert rc == 2
        assert "invalid generator degree" in err

    def test_unknown_instance(self, capsys):
        rc, _, _ = run(capsys, "build", "--instance", "free")
        assert rc == 2

    def test_file_bound_too_small(self, capsys, tmp_path):
        path = tmp_path / "ssym1.json"
        run(capsys, "build", "--degree", "1", "--output", str(path))
        rc, _, err = run(capsys, "build", "--instance", str(path), "--degree", "2")
        assert rc == 2
        assert "below the requested 2" in err

    def test_version(self, capsys):
        rc, out, _ = run(capsys, "--version")
        assert rc == 0
        assert out.startswith("hopf-adams ")
