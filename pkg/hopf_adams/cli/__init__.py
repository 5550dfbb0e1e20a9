# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

"""Command line interface of hopf-adams.

Exit status is 0 when every check passed, 1 when a verification or a
construction failed and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from typing import NoReturn

from hopf_adams.cli.command import CommandModule, add_options, documentation
from hopf_adams.cli.commands import COMMANDS
from hopf_adams.errors import (
    BoundMismatchError,
    CacheError,
    ConfigError,
    ConnectednessError,
    DegreeOverflowError,
    HopfError,
    RankMismatchError,
    SchemaError,
)
from hopf_adams.version import __version__

logger = logging.getLogger(__name__)

USAGE_ERRORS = (
    ConfigError,
    SchemaError,
    ConnectednessError,
    DegreeOverflowError,
    BoundMismatchError,
    CacheError,
    RankMismatchError,
)

VERBOSITY = {0: logging.WARNING, 1: logging.INFO, 2: logging.DEBUG}


def build_parser() -> argparse.ArgumentParser:
    """One sub-parser per command, options and help taken from its documentation."""
    parser = argparse.ArgumentParser(
        prog="hopf-adams",
        description="Adams operators, PBW bases and spectra of connected graded Hopf algebras.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="Increase verbosity; repeat for debug output.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    for name, command in COMMANDS.items():
        doc = documentation(command)
        sub = subparsers.add_parser(
            name,
            help=doc["short_description"],
            description="\n".join(doc.get("description", [])),
            epilog="examples:\n" + command.EXAMPLES.strip("\n"),
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )
        add_options(sub, command.argspec(), doc)
    return parser


def configure_logging(verbosity: int) -> None:
    """Map the -v counter to the level of the package logger."""
    logging.basicConfig(format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("hopf_adams").setLevel(VERBOSITY[min(verbosity, 2)])


def main(argv: Sequence[str] | None = None) -> NoReturn:
    """Parse the command line, run the command and exit with its status."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    command = COMMANDS[args.command]
    argument_spec = command.argspec()
    raw = {name: getattr(args, name) for name in argument_spec}
    try:
        module = CommandModule(args.command, argument_spec, raw)
        module.config  # noqa: B018
    except HopfError as err:
        parser.exit(2, f"{args.command}: FAILED: {err}\n")
    try:
        command.run(module)
    except USAGE_ERRORS as err:
        module.fail_json(msg=str(err), rc=2)
    except HopfError as err:
        module.fail_json(msg=str(err), rc=1)
    sys.exit(0)
