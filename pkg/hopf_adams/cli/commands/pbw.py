# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import annotations

DOCUMENTATION = r"""
---
module: pbw

short_description: Construct a PBW basis from generators

version_added: "1.0.0"

description:
  - Evaluates all words in the generators, extracts the reducible words of
    every degree by exact elimination and brackets the irreducible Lyndon
    words into the generators of a PBW basis.
  - The permutation algebra is generated by the fundamental elements of the
    connected permutations; the tensor and shuffle instances by their letters.
  - The shuffle algebra on more than one letter is not generated by its
    letters, so the construction fails there.

options:
  output:
    description:
      - Path of a PBW basis JSON file to write.
    type: path
    required: false
  check:
    description:
      - Also verify the coproduct, height and commutator conditions.
    type: bool
    default: false

extends_documentation_fragment:
  - hopf_adams.common
  - hopf_adams.common.output

author:
  - hopf-adams contributors
"""

EXAMPLES = r"""
hopf-adams pbw --instance ssym --degree 4 --check
hopf-adams pbw --instance tensor --generators 1 1 --degree 4 --output tensor-pbw.json
"""

RETURN = r"""
log:
  description: Construction log with words, kernel dimension, reducible words
    and new generators per degree.
  returned: success
  type: dict
generators:
  description: Generator labels in their order.
  returned: success
  type: list
  elements: str
path:
  description: The written file, when I(output) is given.
  returned: success
  type: str
"""

from typing import Any, NoReturn

from hopf_adams.cli.command import CommandModule
from hopf_adams.cli.common_args import instance_arg_spec
from hopf_adams.cli.instance_utils import context
from hopf_adams.errors import ConfigError
from hopf_adams.instances import instance_alphabet, word_label
from hopf_adams.pbw import construct_pbw, verify_pbw_conditions
from hopf_adams.persistence import save_pbw
from hopf_adams.ssym import ssym_pbw


def argspec() -> dict[str, dict[str, Any]]:
    """Define the command's argument spec."""
    args = instance_arg_spec()

    args.update(
        output=dict(type="path", required=False),
        check=dict(type="bool", default=False, required=False),
    )

    return args


def run(module: CommandModule) -> NoReturn:
    """Construct, report and optionally write the basis."""
    config = module.config
    ctx = context(config)
    hopf = ctx.hopf
    spec = config.spec()
    if config.is_ssym:
        basis, log = ssym_pbw(hopf)
    elif spec is not None:
        alphabet = instance_alphabet(spec)
        images = {i: hopf.element(label) for i, label in enumerate(alphabet.labels)}
        basis, log = construct_pbw(hopf, alphabet, images, labeler=word_label)
    else:
        msg = "the PBW constructor needs a built-in instance"
        raise ConfigError(msg)

    rows = [
        [str(entry.degree), entry.words, entry.kernel_dim, " ".join(entry.reducible), " ".join(entry.generators)]
        for entry in log.degrees
    ]
    result = dict(
        changed=False,
        instance=hopf.name,
        log=log.as_dict(),
        generators=[g.label for g in basis.family.generators],
        tables=[
            dict(
                title=f"PBW construction on {hopf.name}",
                header=["degree", "words", "kernel", "reducible", "generators"],
                rows=rows,
            ),
            dict(
                title="basis",
                header=["degree", "elements"],
                rows=[[str(d), " ".join(basis.name(seq) for seq in seqs)] for d, seqs in basis.sequences.items()],
            ),
        ],
    )
    output = module.params["output"]
    if output:
        save_pbw(basis, output)
        result.update(changed=True, path=output)
    if module.params["check"]:
        report = verify_pbw_conditions(hopf, basis)
        result["reports"] = [report.as_dict()]
        if not report.passed:
            module.fail_json(msg="PBW conditions failed", **result)

    module.exit_json(**result)
