# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

# Make sure to keep this file in sync with the version in pyproject.toml
__version__ = "1.0.0"
__author__ = "hopf-adams contributors"
__email__ = "hopf-adams@users.noreply.github.com"
