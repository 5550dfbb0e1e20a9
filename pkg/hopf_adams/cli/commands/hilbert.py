# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import annotations

DOCUMENTATION = r"""
---
module: hilbert

short_description: Print the Hilbert series, primitive dimensions and eigenvalue multiplicities

version_added: "1.0.0"

description:
  - Prints the dimension of every degree up to I(degree), the primitive
    dimensions p obtained by inverting the product formula, and the
    multiplicities mul(s, degree) of the eigenvalues n^s of the Adams operators.
  - Checks that the multiplicities of every degree add up to its dimension.

extends_documentation_fragment:
  - hopf_adams.common
  - hopf_adams.common.output

author:
  - hopf-adams contributors
"""

EXAMPLES = r"""
hopf-adams hilbert --instance ssym --degree 5
hopf-adams hilbert --instance tensor --generators 1,0 0,1 --degree 4 --format csv
"""

RETURN = r"""
tables:
  description: One row per degree with dimension, primitives and multiplicities.
  returned: always
  type: list
  elements: dict
reports:
  description: The row sum check.
  returned: always
  type: list
  elements: dict
"""

from typing import Any, NoReturn

from hopf_adams.cli.command import CommandModule
from hopf_adams.cli.common_args import instance_arg_spec
from hopf_adams.cli.instance_utils import load_algebra
from hopf_adams.report import Report
from hopf_adams.spectra import hilbert_series, multiplicity_table, primitive_dims, row_sums


def argspec() -> dict[str, dict[str, Any]]:
    """Define the command's argument spec."""
    return instance_arg_spec()


def run(module: CommandModule) -> NoReturn:
    """Tabulate the series."""
    config = module.config
    hopf = load_algebra(config)
    series = {d: n for d, n in hilbert_series(hopf).items() if d.total <= config.bound}
    p = primitive_dims(series)
    table = multiplicity_table(p, series)
    report = Report("multiplicities add up to the dimensions")
    for degree, (total, dim) in row_sums(p, series).items():
        report.tick()
        if total != dim:
            report.fail("multiplicities do not add up to the dimension", degree=degree, total=total, dim=dim)
    rows = [
        [str(degree), dim, p.get(degree, 0), " ".join(str(m) for m in table[degree])]
        for degree, dim in series.items()
    ]
    result = dict(
        instance=hopf.name,
        series={str(d): n for d, n in series.items()},
        primitives={str(d): n for d, n in p.items()},
        tables=[dict(title=f"Hilbert series of {hopf.name}", header=["degree", "dim", "primitives", "mul"], rows=rows)],
        reports=[report.as_dict()],
    )

    if not report.passed:
        module.fail_json(msg="Hilbert series check failed", **result)
    module.exit_json(**result)
