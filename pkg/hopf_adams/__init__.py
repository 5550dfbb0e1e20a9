# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

"""Adams operators, PBW bases and spectra of connected graded Hopf algebras."""

from hopf_adams.version import __version__

__all__ = ["__version__"]
