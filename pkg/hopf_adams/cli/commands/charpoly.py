# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import annotations

DOCUMENTATION = r"""
---
module: charpoly

short_description: Compare the characteristic polynomials of Adams operators with their prediction

version_added: "1.0.0"

description:
  - Computes the exact characteristic and minimal polynomials of Psi_n on the
    strata of total degree I(degree).
  - Predicts the characteristic polynomial from the primitive dimensions
    obtained by inverting the Hilbert series, as the product over s of
    (x - n^s) raised to the number of ways to write the degree as a sum of
    s primitive degrees.
  - Prints C(MATCH) when both agree and C(MISMATCH) otherwise.

extends_documentation_fragment:
  - hopf_adams.common
  - hopf_adams.common.output
  - hopf_adams.common.adams

author:
  - hopf-adams contributors
"""

EXAMPLES = r"""
hopf-adams charpoly --instance ssym --n 2 --degree 3
hopf-adams charpoly --instance shuffle --generators 1 2 --n -2 -1 0 1 2 3 --degree 5 --format json
"""

RETURN = r"""
tables:
  description: One row per Adams index and stratum.
  returned: always
  type: list
  elements: dict
  contains:
    header:
      description: Column names.
      type: list
      sample: [n, degree, exact, predicted, minimal, diagonalizable, verdict]
lines:
  description: The overall verdict.
  returned: always
  type: list
  sample: [MATCH]
"""

from typing import Any, NoReturn

from hopf_adams.cli.command import CommandModule
from hopf_adams.cli.common_args import ADAMS_ARG_SPEC, instance_arg_spec
from hopf_adams.cli.instance_utils import context, strata
from hopf_adams.convolution import adams
from hopf_adams.linalg import char_poly, format_factored, is_squarefree, min_poly
from hopf_adams.spectra import hilbert_series, predicted_char_poly, primitive_dims


def argspec() -> dict[str, dict[str, Any]]:
    """Define the command's argument spec."""
    args = instance_arg_spec()
    args.update(ADAMS_ARG_SPEC)

    return args


def run(module: CommandModule) -> NoReturn:
    """Tabulate exact and predicted polynomials."""
    config = module.config
    ctx = context(config)
    p = primitive_dims(hilbert_series(ctx.hopf))
    rows = []
    matched = True
    for n in config.n_values:
        psi = adams(ctx, n)
        for degree in strata(config, ctx.hopf):
            block = psi.block(degree)
            exact = char_poly(block)
            minimal = min_poly(block)
            predicted = predicted_char_poly(p, n, degree)
            verdict = "MATCH" if exact == predicted else "MISMATCH"
            matched = matched and exact == predicted
            rows.append([
                n,
                str(degree),
                format_factored(exact),
                format_factored(predicted),
                format_factored(minimal),
                "yes" if is_squarefree(minimal) else "no",
                verdict,
            ])
    result = dict(
        instance=ctx.hopf.name,
        tables=[
            dict(
                title=f"characteristic polynomials of {ctx.hopf.name}",
                header=["n", "degree", "exact", "predicted", "minimal", "diagonalizable", "verdict"],
                rows=rows,
            ),
        ],
        lines=["MATCH" if matched else "MISMATCH"],
    )

    if not matched:
        module.fail_json(msg="characteristic polynomial differs from the prediction", **result)
    module.exit_json(**result)
