# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import annotations

DOCUMENTATION = r"""
---
module: verify

short_description: Verify the bialgebra axioms, the PBW conditions and the triangularity of Adams operators

version_added: "1.0.0"

description:
  - Checks the bialgebra axioms of the structure constants, the antipode
    identity and the convolution power law on the indices I(n).
  - For the built-in algebras, also checks the coproduct, height and
    commutator conditions of the PBW basis, and that every Psi_n and the
    antipode are upper triangular in it with diagonal n^l(V) and (-1)^l(V).
  - For the tensor and shuffle instances, also checks their graded duality.
  - Exits with status 1 when any check fails.

options:
  n:
    description:
      - Indices of the Adams operators to check.
    type: list
    elements: int
    default: [-2, -1, 0, 1, 2, 3]

extends_documentation_fragment:
  - hopf_adams.common
  - hopf_adams.common.output

author:
  - hopf-adams contributors
"""

EXAMPLES = r"""
hopf-adams verify --instance ssym --degree 4
hopf-adams verify --instance tensor --generators 1 2 --degree 4 --n 2 3
hopf-adams verify --instance ./ssym3.json --degree 3 --format json
"""

RETURN = r"""
reports:
  description: One report tree per group of checks.
  returned: always
  type: list
  elements: dict
  contains:
    name:
      description: Name of the check.
      type: str
    passed:
      description: Whether the check and all its children passed.
      type: bool
    checked:
      description: Number of identities checked.
      type: int
    msg:
      description: The first violation.
      type: str
      returned: failure
    witness:
      description: Values exhibiting the first violation.
      type: dict
      returned: failure
"""

from typing import Any, NoReturn

from hopf_adams.algebra import verify_bialgebra
from hopf_adams.cli.command import CommandModule
from hopf_adams.cli.common_args import instance_arg_spec
from hopf_adams.cli.instance_utils import adams_diagonal, context, pbw_basis
from hopf_adams.convolution import ConvolutionContext, adams, antipode, check_antipode_identity, check_power_law
from hopf_adams.instances import InstanceSpec, build_instance, check_duality
from hopf_adams.pbw import PBWBasis, triangular_reports, verify_pbw_conditions
from hopf_adams.report import Report


def argspec() -> dict[str, dict[str, Any]]:
    """Define the command's argument spec."""
    args = instance_arg_spec()

    args.update(
        n=dict(type="list", elements="int", default=[-2, -1, 0, 1, 2, 3], required=False),
    )

    return args


def triangularity(ctx: ConvolutionContext, basis: PBWBasis, n_values: tuple[int, ...]) -> Report:
    """Diagonal laws of Psi_n and S in a PBW basis, as one report."""
    report = Report("triangularity")
    maps = [(f"Psi_{n}", adams(ctx, n), adams_diagonal(n)) for n in n_values]
    maps.append(("S", antipode(ctx), adams_diagonal(-1)))
    for name, f, diagonal in maps:
        child = report.child(name)
        for triangular in triangular_reports(ctx, basis, f, diagonal):
            child.tick()
            if not triangular.triangular:
                i, j, value = triangular.violation
                child.fail(
                    "nonzero entry below the diagonal",
                    degree=triangular.degree, row=triangular.names[i], column=triangular.names[j], value=value,
                )
            elif not triangular.passed:
                k = triangular.diagonal_mismatch
                child.fail(
                    "unexpected diagonal entry",
                    degree=triangular.degree, element=triangular.names[k],
                    value=triangular.diagonal[k], expected=triangular.expected[k],
                )
    return report


def run(module: CommandModule) -> NoReturn:
    """Run every applicable check."""
    config = module.config
    ctx = context(config)
    reports = [
        verify_bialgebra(ctx.hopf),
        check_antipode_identity(ctx),
        check_power_law(ctx, config.n_values),
    ]
    spec = config.spec()
    if config.is_ssym or spec is not None:
        basis = pbw_basis(config, ctx.hopf)
        reports.append(verify_pbw_conditions(ctx.hopf, basis))
        reports.append(triangularity(ctx, basis, config.n_values))
    if spec is not None:
        dual = InstanceSpec(
            "shuffle" if spec.kind == "tensor" else "tensor", spec.degrees, spec.bound,
        )
        pair = (ctx.hopf, build_instance(dual))
        reports.append(check_duality(*(pair if spec.kind == "tensor" else pair[::-1])))
    result = dict(instance=ctx.hopf.name, reports=[r.as_dict() for r in reports])

    failed = next((r.first_failure() for r in reports if not r.passed), None)
    if failed is not None:
        module.fail_json(msg=f"{failed.name}: {failed.msg}", **result)
    module.exit_json(**result)
