# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import io
import json
import os
from pathlib import Path

import pytest
from ansible.module_utils.basic import env_fallback
from strategies import deg

from hopf_adams.cli.command import CommandModule, documentation
from hopf_adams.cli.commands import COMMANDS
from hopf_adams.cli.common_args import INSTANCE_ARG_SPEC, instance_arg_spec
from hopf_adams.cli.instance_utils import RunConfig, parse_generator
from hopf_adams.cli.tables import emit
from hopf_adams.errors import ConfigError

RESULT = dict(
    matrices=[dict(title="Psi_2", rows=["F:12", "F:21"], columns=["F:12", "F:21"], entries=[["3", "1"], ["1", "3"]])],
    tables=[dict(title="dims", header=["degree", "dim"], rows=[["0", 1], ["1", 1]])],
    reports=[dict(name="outer", passed=False, checked=2, children=[
        dict(name="inner", passed=False, checked=1, msg="broken", witness={"degree": "2"}),
    ])],
    lines=["MISMATCH"],
)


class TestFallback:
    def test_cache_dir_reads_environment(self):
        assert INSTANCE_ARG_SPEC["cache_dir"]["fallback"] == (env_fallback, ["HOPF_ADAMS_CACHE_DIR"])

    def test_unset_variable_keeps_default(self, monkeypatch):
        monkeypatch.delenv("HOPF_ADAMS_CACHE_DIR", raising=False)
        module = CommandModule("build", instance_arg_spec(), {"cache_dir": None})
        assert module.params["cache_dir"].endswith(".cache/hopf-adams")


class TestCommandModule:
    def test_defaults(self, monkeypatch):
        monkeypatch.delenv("HOPF_ADAMS_CACHE_DIR", raising=False)
        module = CommandModule("build", instance_arg_spec(), {})
        assert module.params["instance"] == "ssym"
        assert module.params["degree"] == 3
        assert module.params["no_cache"] is False
        assert module.params["cache_dir"] == os.path.expanduser("~/.cache/hopf-adams")

    def test_environment_fallback(self, monkeypatch, tmp_path):
        monkeypatch.setenv("HOPF_ADAMS_CACHE_DIR", str(tmp_path))
        module = CommandModule("build", instance_arg_spec(), {})
        assert module.config.cache_dir == tmp_path

    def test_command_line_wins(self, monkeypatch, tmp_path):
        monkeypatch.setenv("HOPF_ADAMS_CACHE_DIR", "/elsewhere")
        module = CommandModule("build", instance_arg_spec(), {"cache_dir": str(tmp_path), "degree": "4"})
        assert module.params["cache_dir"] == str(tmp_path)
        assert module.params["degree"] == 4

    def test_no_cache(self):
        module = CommandModule("build", instance_arg_spec(), {"no_cache": True})
        assert module.config.cache_dir is None

    def test_choices(self):
        with pytest.raises(ConfigError, match="format"):
            CommandModule("build", instance_arg_spec(), {"format": "xml"})

    def test_required(self):
        with pytest.raises(ConfigError, match="missing required arguments: x"):
            CommandModule("x", {"x": dict(type="str", required=True)}, {})

    def test_type_errors(self):
        with pytest.raises(ConfigError, match="degree"):
            CommandModule("build", instance_arg_spec(), {"degree": "four"})

    def test_exit_json(self):
        stream = io.StringIO()
        module = CommandModule("build", instance_arg_spec(), {"format": "json"}, stdout=stream)
        with pytest.raises(SystemExit) as info:
            module.exit_json(instance="ssym<=1")
        assert info.value.code == 0
        assert json.loads(stream.getvalue()) == {"changed": False, "command": "build", "instance": "ssym<=1"}

    def test_fail_json(self, capsys):
        stream = io.StringIO()
        module = CommandModule("verify", instance_arg_spec(), {"format": "json"}, stdout=stream)
        with pytest.raises(SystemExit) as info:
            module.fail_json(msg="broken", rc=2)
        assert info.value.code == 2
        assert json.loads(stream.getvalue())["failed"] is True
        assert capsys.readouterr().err == "verify: FAILED: broken\n"


class TestRunConfig:
    def test_from_params(self):
        config = RunConfig.from_params("adams", {"instance": "tensor", "generators": ["1", "2"], "degree": 2, "n": [3]})
        assert config.generators == (deg(1), deg(2))
        assert config.n_values == (3,)
        assert config.spec().name == "tensor[1;2]<=2"

    def test_generator_degrees(self):
        assert parse_generator("1,0") == deg(1, 0)
        with pytest.raises(ConfigError):
            parse_generator("a")

    def test_rejects(self, tmp_path):
        with pytest.raises(ConfigError, match="neither"):
            RunConfig("adams", instance=str(tmp_path / "missing.json"))
        with pytest.raises(ConfigError, match="nonnegative"):
            RunConfig("adams", bound=-1)

    def test_instance_errors_are_usage_errors(self):
        config = RunConfig.from_params("adams", {"instance": "tensor", "generators": ["0"]})
        with pytest.raises(ConfigError, match="nonzero"):
            config.spec()

    def test_file_instance(self, tmp_path):
        path = tmp_path / "a.json"
        path.write_text("{}")
        assert RunConfig("build", instance=str(path)).spec() is None


class TestDocumentation:
    @pytest.mark.parametrize("name", sorted(COMMANDS))
    def test_options_match_argspec(self, name):
        command = COMMANDS[name]
        doc = documentation(command)
        assert doc["module"] == name
        assert set(doc["options"]) == set(command.argspec())

    def test_unknown_fragment(self):
        class Fake:
            DOCUMENTATION = "module: fake\nextends_documentation_fragment: [other.common]\n"

        with pytest.raises(ConfigError, match="fragment"):
            documentation(Fake)


class TestTables:
    def test_text(self):
        stream = io.StringIO()
        emit(RESULT, "text", stream)
        blocks = stream.getvalue().split("\n\n")
        assert blocks[0].splitlines() == ["Psi_2", "      F:12  F:21", "F:12     3     1", "F:21     1     3"]
        assert blocks[1].splitlines() == ["dims", "degree  dim", "     0    1", "     1    1"]
        assert blocks[2].splitlines() == [
            "FAIL outer (2 checked)",
            "  FAIL inner (1 checked)",
            "    broken: degree=2",
        ]
        assert blocks[3] == "MISMATCH\n"

    def test_csv(self):
        stream = io.StringIO()
        emit(RESULT, "csv", stream)
        assert stream.getvalue().splitlines() == [
            "matrix,row,column,value",
            "Psi_2,F:12,F:12,3",
            "Psi_2,F:12,F:21,1",
            "Psi_2,F:21,F:12,1",
            "Psi_2,F:21,F:21,3",
            "degree,dim",
            "0,1",
            "1,1",
            "report,status,checked,msg",
            "outer,fail,2,",
            "outer/inner,fail,1,broken",
            "MISMATCH",
        ]

    def test_json_is_canonical(self):
        stream = io.StringIO()
        emit({"b": 1, "a": [1]}, "json", stream)
        assert stream.getvalue() == '{\n "a": [\n  1\n ],\n "b": 1\n}\n'

    def test_empty_text(self):
        stream = io.StringIO()
        emit({"changed": False}, "text", stream)
        assert stream.getvalue() == ""


def test_path_expansion(monkeypatch):
    monkeypatch.setenv("HOME", "/home/someone")
    module = CommandModule("build", {"output": dict(type="path")}, {"output": "~/x.json"})
    assert Path(module.params["output"]) == Path("/home/someone/x.json")
