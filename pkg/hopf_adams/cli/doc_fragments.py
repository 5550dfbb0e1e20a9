# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)


class ModuleDocFragment:
    """Command doc fragment for the instance selection options"""

    # Options selecting the Hopf algebra and the output
    DOCUMENTATION = r"""
options:
  instance:
    description:
      - The Hopf algebra to work in.
      - C(ssym) is the algebra of permutations in its fundamental basis.
      - C(tensor) and C(shuffle) are the free and the shuffle algebra on the
        generators given by I(generators).
      - Any other value is read as the path of a HopfData JSON file written by
        the C(build) command.
    type: str
    default: ssym
  generators:
    description:
      - Degrees of the generators of the C(tensor) and C(shuffle) instances.
      - A multidegree is written with commas, for example C(1,0).
    type: list
    elements: str
    default: ["1"]
  degree:
    description:
      - Degree bound of the computation.
      - Commands that print one stratum print the strata of this total degree.
    type: int
    default: 3
  cache_dir:
    description:
      - Directory of the content-addressed cache of built instances.
      - The C(HOPF_ADAMS_CACHE_DIR) environment variable can also be used.
    type: path
    default: ~/.cache/hopf-adams
  no_cache:
    description:
      - Build instances from scratch and do not store them.
    type: bool
    default: false
"""

    OUTPUT = r"""
options:
  format:
    description:
      - Output format.
      - C(csv) emits one row per matrix entry or table cell.
    choices:
      - text
      - json
      - csv
    default: text
    type: str
"""

    ADAMS = r"""
options:
  n:
    description:
      - Indices of the Adams operators. Negative indices use powers of the antipode.
    type: list
    elements: int
    default: [2]
"""

    BASIS = r"""
options:
  basis:
    description:
      - Basis to write matrices in.
      - C(F) is the basis of the instance. C(M) and C(T) are the monomial and
        PBW bases of C(ssym); C(pbw) is the basis built from the generators.
    choices: [F, M, T, pbw]
    default: F
    type: str
  order:
    description:
      - Listing order of the basis of C(ssym).
    choices: [natural, precL, precR]
    default: natural
    type: str
  weak_order:
    description:
      - Weak order on permutations behind the monomial basis.
    choices: [right, left]
    default: right
    type: str
"""
