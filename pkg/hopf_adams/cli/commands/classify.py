# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import annotations

DOCUMENTATION = r"""
---
module: classify

short_description: Classify permutations as connected, Lyndon or other

version_added: "1.0.0"

description:
  - Prints, for every size up to I(degree), the connected permutations, the
    Lyndon permutations that are not connected and the others.
  - Prints the chains of all permutations of size 1 up to I(degree) under the
    order on permutations and its left and right degree-first refinements.

options:
  degree:
    description:
      - Largest permutation size.
    type: int
    default: 3

extends_documentation_fragment:
  - hopf_adams.common.output

author:
  - hopf-adams contributors
"""

EXAMPLES = r"""
hopf-adams classify --degree 3
hopf-adams classify --degree 4 --format json
"""

RETURN = r"""
classes:
  description: Permutations of each size by class.
  returned: always
  type: dict
  sample: {"3": {"connected": ["231", "312", "321"], "lyndon": ["213"], "other": ["123", "132"]}}
chains:
  description: Permutations sorted by each order.
  returned: always
  type: dict
"""

from typing import Any, NoReturn

from hopf_adams.cli.command import CommandModule
from hopf_adams.cli.common_args import OUTPUT_ARG_SPEC
from hopf_adams.errors import ConfigError
from hopf_adams.ssym import classification_table, perm_key, permutations_of

ORDERS = {"prec": "<", "L": "<L", "R": "<R"}


def argspec() -> dict[str, dict[str, Any]]:
    """Define the command's argument spec."""
    args = OUTPUT_ARG_SPEC.copy()

    args.update(
        degree=dict(type="int", default=3, required=False),
    )

    return args


def run(module: CommandModule) -> NoReturn:
    """Tabulate the classes and the chains."""
    bound = module.params["degree"]
    if bound < 1:
        msg = f"the degree must be at least 1, got {bound}"
        raise ConfigError(msg)
    table = classification_table(bound)
    perms = [p for m in range(1, bound + 1) for p in permutations_of(m)]
    chains = {variant: [str(p) for p in sorted(perms, key=perm_key(variant))] for variant in ORDERS}
    result = dict(
        classes={str(m): row for m, row in table.items()},
        chains=chains,
        tables=[
            dict(
                title="permutations",
                header=["size", "connected", "lyndon", "other"],
                rows=[[m, " ".join(row["connected"]), " ".join(row["lyndon"]), " ".join(row["other"])]
                      for m, row in table.items()],
            ),
        ],
        lines=[f"{variant}: " + f" {symbol} ".join(chains[variant]) for variant, symbol in ORDERS.items()],
    )

    module.exit_json(**result)
