# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Grid oracle tests."""

import numpy as np
import pytest

from bj_symmetry.operators import LinearOperator
from bj_symmetry.oracles import confirms_not_orthogonal, \
    confirms_operator_not_orthogonal, confirms_operator_orthogonal, \
    confirms_orthogonal, grid_minimum, operator_grid_minimum, \
    operator_profile, vector_profile


def test_grid_minimum(l2):
    """The grid finds the foot of the perpendicular."""
    result = grid_minimum(l2, [1, 0], [1, 1])
    assert result.base == pytest.approx(1.0)
    assert result.minimizer == pytest.approx(-0.5, abs=1e-4)
    assert result.min_value == pytest.approx(np.sqrt(0.5), abs=1e-6)
    assert result.margin == pytest.approx(1 - np.sqrt(0.5), abs=1e-6)


def test_confirmations(l1):
    """Confirmations agree with the l1 example."""
    assert confirms_orthogonal(l1, [1, 0], [0.5, 1])
    assert not confirms_not_orthogonal(l1, [1, 0], [0.5, 1])
    assert confirms_not_orthogonal(l1, [0.5, 1], [1, 0])
    assert not confirms_orthogonal(l1, [0.5, 1], [1, 0])


def test_operator_confirmations(diagonal, l2):
    """Test the operator grid on diagonal operators."""
    other = LinearOperator(np.diag([0.0, 1.0]), l2, l2)
    assert confirms_operator_orthogonal(diagonal, other)
    assert confirms_operator_not_orthogonal(other, diagonal)
    result = operator_grid_minimum(other, diagonal)
    assert result.margin == pytest.approx(1 / 3.0, abs=1e-3)


def test_profiles(app, l2, diagonal):
    """Profiles have the configured number of rows."""
    grid, values = vector_profile(l2, [1, 0], [0, 1])
    assert 1001 == len(grid) == len(values)
    assert -2.0 == grid[0]
    assert 2.0 == grid[-1]
    assert values.min() == pytest.approx(1.0)

    grid, values = operator_profile(diagonal, diagonal, points=11)
    assert 11 == len(values)
    assert values[5] == pytest.approx(1.0)
    assert values[0] == pytest.approx(1.0)
