# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Grid oracles.

They share nothing with the decision procedures beyond norm evaluation and
re-check witnesses by brute force: a uniform grid over the search bracket,
refined twice around its minimum.
"""

from typing import NamedTuple

import numpy as np

from .operators import PencilNorm, norm_with_point, operator_norm
from .orthogonality import WITNESS_FACTOR
from .proxies import current_config, tolerance
from .spaces import as_coords, norms


class GridMinimum(NamedTuple):
    """Smallest grid value of a profile and how far it drops below the base."""

    minimizer: float
    min_value: float
    base: float
    margin: float


def _refine(evaluate, bound, points, rounds=2):
    """Grid-minimize ``evaluate`` on ``[-bound, bound]`` with zooming."""
    low, high = -bound, bound
    best_t, best_value = 0.0, evaluate(np.zeros(1))[0]
    for _ in range(rounds + 1):
        grid = np.linspace(low, high, points)
        values = evaluate(grid)
        i = int(np.argmin(values))
        if values[i] < best_value:
            best_t, best_value = float(grid[i]), float(values[i])
        step = (high - low) / (points - 1)
        low, high = grid[i] - step, grid[i] + step
    return best_t, best_value


def vector_profile(space, x, y, points=None, bracket=None):
    """Return ``(t, ||x + t y||)`` sampled uniformly on the search bracket."""
    x = as_coords(space, x)
    y = as_coords(space, y)
    points = points or current_config['BJ_SYMMETRY_PROFILE_POINTS']
    bound = bracket or _bracket(float(norms(space, x)),
                                float(norms(space, y)))
    grid = np.linspace(-bound, bound, points)
    return grid, norms(space, x[:, None] + y[:, None] * grid[None, :])


def operator_profile(first, second, points=None, bracket=None):
    """Return ``(t, ||T + t A||)`` sampled uniformly on the search bracket."""
    points = points or current_config['BJ_SYMMETRY_PROFILE_POINTS']
    bound = bracket or _bracket(operator_norm(first).value,
                                operator_norm(second).value)
    pencil = PencilNorm(first, second)
    grid = np.linspace(-bound, bound, points)
    return grid, np.array([pencil(t) for t in grid])


def _bracket(base, direction):
    if direction == 0:
        return 1.0
    return 2.0 * max(base, direction) / direction


def grid_minimum(space, x, y, points=None):
    """Grid-minimize ``t -> ||x + t y||``."""
    x = as_coords(space, x)
    y = as_coords(space, y)
    base = float(norms(space, x))
    points = points or current_config['BJ_SYMMETRY_GRID_POINTS']
    bound = _bracket(base, float(norms(space, y)))

    def evaluate(grid):
        return norms(space, x[:, None] + y[:, None] * grid[None, :])

    t, value = _refine(evaluate, bound, points)
    return GridMinimum(t, value, base, base - value)


def operator_grid_minimum(first, second, points=None):
    """Grid-minimize ``t -> ||T + t A||``."""
    base, point, _ = norm_with_point(first)
    points = points or current_config['BJ_SYMMETRY_OPERATOR_GRID_POINTS']
    bound = _bracket(base, operator_norm(second).value)
    pencil = PencilNorm(first, second, hints=[point])

    def evaluate(grid):
        return np.array([pencil(float(t)) for t in grid])

    t, value = _refine(evaluate, bound, points)
    return GridMinimum(t, value, base, base - value)


def _allowance(base):
    return tolerance('numeric') * max(1.0, base)


def confirms_orthogonal(space, x, y):
    """Whether the grid finds no drop below ``||x||``."""
    result = grid_minimum(space, x, y)
    return result.margin <= _allowance(result.base)


def confirms_not_orthogonal(space, x, y):
    """Whether the grid finds a drop larger than the witness margin."""
    result = grid_minimum(space, x, y)
    return result.margin > WITNESS_FACTOR * _allowance(result.base)


def confirms_operator_orthogonal(first, second):
    """Whether the grid finds no drop below ``||T||``."""
    result = operator_grid_minimum(first, second)
    return result.margin <= _allowance(result.base)


def confirms_operator_not_orthogonal(first, second):
    """Whether the grid finds a drop larger than the witness margin."""
    result = operator_grid_minimum(first, second)
    return result.margin > WITNESS_FACTOR * _allowance(result.base)
