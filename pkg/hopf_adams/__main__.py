# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

from hopf_adams.cli import main

main()
