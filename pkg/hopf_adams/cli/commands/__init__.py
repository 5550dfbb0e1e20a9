# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

"""The hopf-adams commands, by name."""

from hopf_adams.cli.commands import (
    adams,
    antipode,
    build,
    charpoly,
    classify,
    eulerian,
    hilbert,
    pbw,
    verify,
)

COMMANDS = {
    "build": build,
    "verify": verify,
    "adams": adams,
    "antipode": antipode,
    "eulerian": eulerian,
    "charpoly": charpoly,
    "hilbert": hilbert,
    "pbw": pbw,
    "classify": classify,
}
