# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import annotations

DOCUMENTATION = r"""
---
module: antipode

short_description: Print the antipode and check its identities

version_added: "1.0.0"

description:
  - Computes the antipode S as the geometric series in (unit - id) and prints
    its blocks on the strata of total degree I(degree).
  - Checks S * id = id * S = unit, and that S o S = id holds exactly in the
    degrees where S is diagonalizable.

extends_documentation_fragment:
  - hopf_adams.common
  - hopf_adams.common.output
  - hopf_adams.common.basis

author:
  - hopf-adams contributors
"""

EXAMPLES = r"""
hopf-adams antipode --instance ssym --degree 3 --basis T --order precR
hopf-adams antipode --instance shuffle --generators 1 1 --degree 3 --format json
"""

RETURN = r"""
matrices:
  description: The antipode on each stratum.
  returned: always
  type: list
  elements: dict
reports:
  description: The antipode identity and involution checks.
  returned: always
  type: list
  elements: dict
"""

from typing import Any, NoReturn

from hopf_adams.cli.command import CommandModule
from hopf_adams.cli.common_args import BASIS_ARG_SPEC, instance_arg_spec
from hopf_adams.cli.instance_utils import context, in_basis, matrix_result, strata
from hopf_adams.convolution import antipode, check_antipode_identity, check_antipode_involution


def argspec() -> dict[str, dict[str, Any]]:
    """Define the command's argument spec."""
    args = instance_arg_spec()
    args.update(BASIS_ARG_SPEC)

    return args


def run(module: CommandModule) -> NoReturn:
    """Print S and its checks."""
    config = module.config
    ctx = context(config)
    s = antipode(ctx)
    matrices = []
    for degree in strata(config, ctx.hopf):
        labels, matrix = in_basis(config, ctx.hopf, s, degree)
        matrices.append(matrix_result(f"S on degree {degree} in basis {config.basis}", labels, matrix))
    reports = [check_antipode_identity(ctx), check_antipode_involution(ctx)]
    result = dict(instance=ctx.hopf.name, matrices=matrices, reports=[r.as_dict() for r in reports])

    if not all(r.passed for r in reports):
        module.fail_json(msg="antipode check failed", **result)
    module.exit_json(**result)
