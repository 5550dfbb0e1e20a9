# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

"""The command runtime: argument specs to argparse, results to the terminal.

Every command module declares ``DOCUMENTATION``, ``EXAMPLES`` and ``RETURN``
YAML blocks, an ``argspec()`` and a ``run(module)``. The options documented in
doc fragments are merged through ``extends_documentation_fragment``.
Parameters go through ansible-core's ``ArgumentSpecValidator``, which applies
fallbacks, defaults, types and choices in the same way as for modules.
"""

from __future__ import annotations

import argparse
import logging
import sys
from types import ModuleType
from typing import Any, NoReturn, TextIO

import yaml
from ansible.module_utils.common.arg_spec import ArgumentSpecValidator

from hopf_adams.cli import doc_fragments
from hopf_adams.cli.instance_utils import RunConfig
from hopf_adams.cli.tables import emit
from hopf_adams.errors import ConfigError

logger = logging.getLogger(__name__)

FRAGMENT_PREFIX = "hopf_adams.common"

_TYPES = {"int": int, "str": str, "path": str}


def _fragment(name: str) -> dict[str, Any]:
    if not name.startswith(FRAGMENT_PREFIX):
        msg = f"unknown documentation fragment {name!r}"
        raise ConfigError(msg)
    part = name[len(FRAGMENT_PREFIX):].lstrip(".") or "documentation"
    return yaml.safe_load(getattr(doc_fragments.ModuleDocFragment, part.upper()))


def documentation(command: ModuleType) -> dict[str, Any]:
    """Parse the DOCUMENTATION of a command, fragments merged in."""
    doc = yaml.safe_load(command.DOCUMENTATION)
    options: dict[str, Any] = {}
    for name in doc.get("extends_documentation_fragment", []):
        options.update(_fragment(name).get("options", {}))
    options.update(doc.get("options") or {})
    doc["options"] = options
    return doc


def _help(option_doc: dict[str, Any] | None) -> str | None:
    if not option_doc:
        return None
    description = option_doc.get("description", [])
    if isinstance(description, str):
        description = [description]
    return " ".join(description).replace("%", "%%")


def add_options(parser: argparse.ArgumentParser, argument_spec: dict[str, dict[str, Any]], doc: dict[str, Any]) -> None:
    """Declare one flag per argument spec entry.

    Defaults are not given to argparse; they are applied after the fallbacks
    by ``CommandModule``.
    """
    for name, spec in argument_spec.items():
        flags = [f"--{name.replace('_', '-')}"]
        flags.extend(f"--{alias.replace('_', '-')}" for alias in spec.get("aliases", []))
        kwargs: dict[str, Any] = dict(dest=name, default=None, help=_help(doc["options"].get(name)))
        kind = spec.get("type", "str")
        if kind == "bool":
            kwargs["action"] = "store_true"
        elif kind == "list":
            kwargs["nargs"] = "+"
            kwargs["type"] = _TYPES[spec.get("elements", "str")]
        else:
            kwargs["type"] = _TYPES[kind]
        if "choices" in spec:
            kwargs["choices"] = spec["choices"]
        parser.add_argument(*flags, **kwargs)


class CommandModule:
    """Resolved parameters of one command and its exit paths.

    Parameters
    ----------
    name: str
        Command name.
    argument_spec: dict
        Argument specification of the command.
    raw: dict
        Values given on the command line, None when absent.
    stdout: TextIO, optional
        Where results go; defaults to ``sys.stdout``.

    """

    def __init__(
        self: CommandModule,
        name: str,
        argument_spec: dict[str, dict[str, Any]],
        raw: dict[str, Any],
        stdout: TextIO | None = None,
    ) -> None:
        """Apply fallbacks and defaults, then validate types and choices."""
        self.name = name
        self.argument_spec = argument_spec
        self.stdout = stdout if stdout is not None else sys.stdout
        self.params = self._resolve(raw)
        self.output_format = self.params.get("format") or "text"
        self._config: RunConfig | None = None

    def _resolve(self: CommandModule, raw: dict[str, Any]) -> dict[str, Any]:
        given = {name: value for name, value in raw.items() if value is not None}
        result = ArgumentSpecValidator(self.argument_spec).validate(given)
        if result.error_messages:
            msg = "; ".join(result.error_messages)
            raise ConfigError(msg)
        return result.validated_parameters

    @property
    def config(self: CommandModule) -> RunConfig:
        """Typed view of the parameters."""
        if self._config is None:
            self._config = RunConfig.from_params(self.name, self.params)
        return self._config

    def exit_json(self: CommandModule, **result: Any) -> NoReturn:
        """Emit the result and exit with status 0."""
        result.setdefault("changed", False)
        result["command"] = self.name
        emit(result, self.output_format, self.stdout)
        sys.exit(0)

    def fail_json(self: CommandModule, msg: str, rc: int = 1, **result: Any) -> NoReturn:
        """Emit the result with the failure message and exit with rc.

        Status 1 is a failed verification or construction, 2 a usage error.
        """
        result.setdefault("changed", False)
        result.update(command=self.name, failed=True, msg=msg)
        logger.debug("%s failed: %s", self.name, msg)
        if any(key in result for key in ("matrices", "tables", "reports", "lines")) or self.output_format == "json":
            emit(result, self.output_format, self.stdout)
        sys.stderr.write(f"{self.name}: FAILED: {msg}\n")
        sys.exit(rc)
