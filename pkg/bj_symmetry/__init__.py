# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Birkhoff-James orthogonality and symmetry in finite-dimensional spaces.

The library works on lp spaces of finite dimension and on their l1 direct
sums. It decides orthogonality of vectors and of operators, searches
witnesses against left and right symmetry, classifies left symmetric
operators and runs seeded verification suites.

Functions are usable as they are:

>>> from bj_symmetry import SpaceDescriptor, bj_orthogonal
>>> l2 = SpaceDescriptor.lp(2, 2)
>>> bool(bj_orthogonal(l2, [1, 0], [0, 1]))
True

Inside a Flask application, the extension registers the verification suites
and the library reads its ``BJ_SYMMETRY_*`` configuration from the
application:

>>> from flask import Flask
>>> from bj_symmetry import BJSymmetry, verify_theorem
>>> app = Flask('myapp')
>>> ext = BJSymmetry(app)
>>> with app.app_context():
...     report = verify_theorem('lemma-2.5', {'trials': 5})
>>> report.passed
True
"""

from .errors import BJSymmetryError
from .ext import BJSymmetry
from .operators import LinearOperator, norm_attainment_set, \
    op_bj_orthogonal_numeric, op_bj_orthogonal_via_MT, operator_norm
from .orthogonality import bj_orthogonal, in_cone, point_left_symmetric, \
    point_right_symmetric
from .proxies import current_bj_symmetry
from .schemas import RunConfig
from .spaces import SpaceDescriptor, VectorInSpace
from .suites import verify_theorem
from .symmetry import falsify_left_symmetric_op, falsify_right_symmetric_op
from .version import __version__

__all__ = (
    '__version__',
    'bj_orthogonal',
    'BJSymmetry',
    'BJSymmetryError',
    'current_bj_symmetry',
    'falsify_left_symmetric_op',
    'falsify_right_symmetric_op',
    'in_cone',
    'LinearOperator',
    'norm_attainment_set',
    'op_bj_orthogonal_numeric',
    'op_bj_orthogonal_via_MT',
    'operator_norm',
    'point_left_symmetric',
    'point_right_symmetric',
    'RunConfig',
    'SpaceDescriptor',
    'VectorInSpace',
    'verify_theorem',
)
