# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import annotations

DOCUMENTATION = r"""
---
module: build

short_description: Build an instance and store its structure constants

version_added: "1.0.0"

description:
  - Builds the selected Hopf algebra up to the degree bound, or fetches it
    from the cache, and stores it in the cache.
  - With I(output), the structure constants are also written as canonical JSON.

options:
  output:
    description:
      - Path of a HopfData JSON file to write.
    type: path
    required: false

extends_documentation_fragment:
  - hopf_adams.common
  - hopf_adams.common.output

author:
  - hopf-adams contributors
"""

EXAMPLES = r"""
hopf-adams build --instance ssym --degree 5
hopf-adams build --instance tensor --generators 1 2 --degree 4 --output tensor.json
"""

RETURN = r"""
instance:
  description: Name of the built instance.
  returned: success
  type: str
  sample: ssym<=5
bound:
  description: Degree bound of the built instance.
  returned: success
  type: int
  sample: 5
cache_key:
  description: Content address of the instance in the cache.
  returned: success
  type: str
path:
  description: The written file, when I(output) is given.
  returned: success
  type: str
"""

from typing import Any, NoReturn

from hopf_adams.cli.command import CommandModule
from hopf_adams.cli.common_args import instance_arg_spec
from hopf_adams.cli.instance_utils import instance_key, load_algebra
from hopf_adams.persistence import cache_key, save_hopf


def argspec() -> dict[str, dict[str, Any]]:
    """Define the command's argument spec."""
    args = instance_arg_spec()

    args.update(
        output=dict(type="path", required=False),
    )

    return args


def run(module: CommandModule) -> NoReturn:
    """Build, cache and optionally write the instance."""
    config = module.config
    hopf = load_algebra(config)
    result = dict(
        changed=False,
        instance=hopf.name,
        bound=hopf.bound,
        cache_key=cache_key(instance_key(config), config.bound),
        tables=[
            dict(
                title=f"dimensions of {hopf.name}",
                header=["degree", "dim"],
                rows=[[str(degree), hopf.basis.dim(degree)] for degree in hopf.basis.degrees],
            ),
        ],
    )
    output = module.params["output"]
    if output:
        save_hopf(hopf, output)
        result.update(changed=True, path=output)

    module.exit_json(**result)
