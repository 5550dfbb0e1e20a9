# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import annotations

DOCUMENTATION = r"""
---
module: eulerian

short_description: Print the Eulerian idempotents and check the Adams expansion

version_added: "1.0.0"

description:
  - Computes the Eulerian idempotents e^(r) = (1/r!) log(id)^r and prints them
    on the strata of total degree I(degree), for r = 0 up to the degree.
  - Checks that every Psi_n with n in I(n) equals the sum of n^r e^(r).
  - With I(idempotents), also checks that the e^(r) form a complete system of
    orthogonal idempotents. This holds on commutative or cocommutative
    algebras and fails on the permutation algebra from degree 3.

options:
  idempotents:
    description:
      - Also check completeness, idempotence and orthogonality.
    type: bool
    default: false

extends_documentation_fragment:
  - hopf_adams.common
  - hopf_adams.common.output
  - hopf_adams.common.adams
  - hopf_adams.common.basis

author:
  - hopf-adams contributors
"""

EXAMPLES = r"""
hopf-adams eulerian --instance ssym --degree 3 --n -1 2 3
hopf-adams eulerian --instance tensor --generators 1 1 --degree 4 --idempotents
"""

RETURN = r"""
matrices:
  description: The idempotents on each stratum.
  returned: always
  type: list
  elements: dict
reports:
  description: The expansion check, and the idempotent system check when asked for.
  returned: always
  type: list
  elements: dict
"""

from typing import Any, NoReturn

from hopf_adams.cli.command import CommandModule
from hopf_adams.cli.common_args import ADAMS_ARG_SPEC, BASIS_ARG_SPEC, instance_arg_spec
from hopf_adams.cli.instance_utils import context, in_basis, matrix_result, strata
from hopf_adams.convolution import check_eulerian_expansion, check_idempotent_system, eulerian_idempotent


def argspec() -> dict[str, dict[str, Any]]:
    """Define the command's argument spec."""
    args = instance_arg_spec()
    args.update(ADAMS_ARG_SPEC)
    args.update(BASIS_ARG_SPEC)
    args.update(
        idempotents=dict(type="bool", default=False, required=False),
    )

    return args


def run(module: CommandModule) -> NoReturn:
    """Print e^(r) and run the checks."""
    config = module.config
    ctx = context(config)
    matrices = []
    for r in range(config.bound + 1):
        e = eulerian_idempotent(ctx, r)
        for degree in strata(config, ctx.hopf):
            labels, matrix = in_basis(config, ctx.hopf, e, degree)
            matrices.append(matrix_result(f"e^({r}) on degree {degree} in basis {config.basis}", labels, matrix))
    reports = [check_eulerian_expansion(ctx, config.n_values)]
    if module.params["idempotents"]:
        reports.append(check_idempotent_system(ctx))
    result = dict(instance=ctx.hopf.name, matrices=matrices, reports=[r.as_dict() for r in reports])

    if not all(r.passed for r in reports):
        module.fail_json(msg="Eulerian check failed", **result)
    module.exit_json(**result)
