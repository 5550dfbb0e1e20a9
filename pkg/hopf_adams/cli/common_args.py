# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

"""Argument specifications shared by the hopf-adams commands."""

from __future__ import annotations

from typing import Any

from ansible.module_utils.basic import env_fallback

DEFAULT_CACHE_DIR = "~/.cache/hopf-adams"

INSTANCE_ARG_SPEC = dict(
    instance=dict(
        type="str",
        default="ssym",
        required=False,
    ),
    generators=dict(
        type="list",
        elements="str",
        default=["1"],
        required=False,
    ),
    degree=dict(
        type="int",
        default=3,
        required=False,
    ),
    cache_dir=dict(
        fallback=(env_fallback, ["HOPF_ADAMS_CACHE_DIR"]),
        type="path",
        default=DEFAULT_CACHE_DIR,
        required=False,
    ),
    no_cache=dict(
        type="bool",
        default=False,
        required=False,
    ),
)

OUTPUT_ARG_SPEC = dict(
    format=dict(
        type="str",
        choices=["text", "json", "csv"],
        default="text",
        required=False,
    ),
)

ADAMS_ARG_SPEC = dict(
    n=dict(
        type="list",
        elements="int",
        default=[2],
        required=False,
    ),
)

BASIS_ARG_SPEC = dict(
    basis=dict(
        type="str",
        choices=["F", "M", "T", "pbw"],
        default="F",
        required=False,
    ),
    order=dict(
        type="str",
        choices=["natural", "precL", "precR"],
        default="natural",
        required=False,
    ),
    weak_order=dict(
        type="str",
        choices=["right", "left"],
        default="right",
        required=False,
    ),
)


def instance_arg_spec() -> dict[str, dict[str, Any]]:
    """Returns the instance and output argument specification dictionary."""
    arg_spec = INSTANCE_ARG_SPEC.copy()
    arg_spec.update(OUTPUT_ARG_SPEC)
    return arg_spec
