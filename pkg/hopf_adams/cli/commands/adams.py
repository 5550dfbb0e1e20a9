# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import annotations

DOCUMENTATION = r"""
---
module: adams

short_description: Print the matrices of Adams operators

version_added: "1.0.0"

description:
  - Computes the Adams operators Psi_n, the convolution powers of the identity,
    and prints their blocks on the strata of total degree I(degree).
  - Column j of a matrix holds the coordinates of the image of the j-th basis element.
  - Entries are exact rationals.

extends_documentation_fragment:
  - hopf_adams.common
  - hopf_adams.common.output
  - hopf_adams.common.adams
  - hopf_adams.common.basis

author:
  - hopf-adams contributors
"""

EXAMPLES = r"""
hopf-adams adams --instance ssym --n 2 --degree 3
hopf-adams adams --instance ssym --n 2 --degree 3 --basis T --order precR
hopf-adams adams --instance tensor --generators 1 1 --n -1 3 --degree 2 --format csv
"""

RETURN = r"""
matrices:
  description: One matrix per Adams index and stratum.
  returned: success
  type: list
  elements: dict
  contains:
    title:
      description: Operator, stratum and basis.
      type: str
      sample: Psi_2 on degree 3 in basis T
    rows:
      description: Basis labels in listing order.
      type: list
      elements: str
    columns:
      description: Basis labels in listing order.
      type: list
      elements: str
    entries:
      description: Matrix rows as exact rationals.
      type: list
      elements: list
"""

from typing import Any, NoReturn

from hopf_adams.cli.command import CommandModule
from hopf_adams.cli.common_args import ADAMS_ARG_SPEC, BASIS_ARG_SPEC, instance_arg_spec
from hopf_adams.cli.instance_utils import context, in_basis, matrix_result, strata
from hopf_adams.convolution import adams


def argspec() -> dict[str, dict[str, Any]]:
    """Define the command's argument spec."""
    args = instance_arg_spec()
    args.update(ADAMS_ARG_SPEC)
    args.update(BASIS_ARG_SPEC)

    return args


def run(module: CommandModule) -> NoReturn:
    """Print Psi_n for every requested n."""
    config = module.config
    ctx = context(config)
    matrices = []
    for n in config.n_values:
        psi = adams(ctx, n)
        for degree in strata(config, ctx.hopf):
            labels, matrix = in_basis(config, ctx.hopf, psi, degree)
            matrices.append(matrix_result(f"Psi_{n} on degree {degree} in basis {config.basis}", labels, matrix))

    module.exit_json(instance=ctx.hopf.name, matrices=matrices)
