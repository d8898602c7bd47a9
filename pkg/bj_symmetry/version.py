# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Version information for BJ-Symmetry.

This file is imported by ``bj_symmetry.__init__``,
and parsed by ``setup.py``.
"""

__version__ = "1.0.0a1"
