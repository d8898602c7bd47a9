# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""One-dimensional searches over convex maps and monotone predicates."""

import math
from typing import NamedTuple

from .errors import NumericFailureError

INVPHI = (math.sqrt(5.0) - 1.0) / 2.0

RELATIVE_WIDTH = 1e-12
"""Golden-section stops once the bracket shrank by this factor."""


class Minimum(NamedTuple):
    """Result of a one-dimensional minimization."""

    argmin: float
    value: float
    evaluations: int


def golden_section(func, low, high, include=(0.0,), max_evaluations=None):
    """Minimize a convex ``func`` on ``[low, high]``.

    Golden-section steps shrink the bracket to ``1e-12`` of its width, then a
    three-point parabolic step polishes the result. The points in ``include``
    (which must lie in the bracket) and both endpoints are always evaluated so
    the returned value never exceeds theirs.

    :param func: Convex function of one real variable.
    :param low: Left end of the bracket.
    :param high: Right end of the bracket.
    :param include: Extra points that are always evaluated.
    :param max_evaluations: Raise :class:`NumericFailureError` past this.
    """
    if high < low:
        raise NumericFailureError(
            'Empty bracket [{0}, {1}].'.format(low, high))
    count = [0]
    cache = {}

    def evaluate(t):
        if t not in cache:
            count[0] += 1
            if max_evaluations is not None and count[0] > max_evaluations:
                raise NumericFailureError(
                    'Evaluation budget of {0} exhausted.'.format(
                        max_evaluations))
            cache[t] = func(t)
        return cache[t]

    a, b = float(low), float(high)
    width = (b - a) * RELATIVE_WIDTH
    c = b - INVPHI * (b - a)
    d = a + INVPHI * (b - a)
    fc, fd = evaluate(c), evaluate(d)
    while b - a > width:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - INVPHI * (b - a)
            fc = evaluate(c)
        else:
            a, c, fc = c, d, fd
            d = a + INVPHI * (b - a)
            fd = evaluate(d)
        if b - a <= 0 or not (a < c < d < b):
            break

    # Parabola through both bracket ends and the incumbent.
    m = c if fc <= fd else d
    fa, fm, fb = evaluate(a), evaluate(m), evaluate(b)
    denominator = (m - a) * (fm - fb) - (m - b) * (fm - fa)
    if denominator != 0:
        vertex = m - 0.5 * ((m - a) ** 2 * (fm - fb) -
                            (m - b) ** 2 * (fm - fa)) / denominator
        if a <= vertex <= b:
            evaluate(vertex)

    for t in include:
        if low <= t <= high:
            evaluate(float(t))
    evaluate(float(low))
    evaluate(float(high))

    best = min(cache, key=lambda t: (cache[t], abs(t)))
    return Minimum(best, cache[best], count[0])


def bisect_boundary(predicate, low, high, iterations=200, width=None):
    """Locate where a monotone predicate switches from false to true.

    :param predicate: Function with ``predicate(low)`` false or undecided and
        ``predicate(high)`` true, monotone in between.
    :returns: The smallest point of the bracket known to satisfy it.
    """
    a, b = float(low), float(high)
    if predicate(a):
        return a
    if not predicate(b):
        raise NumericFailureError(
            'Predicate does not hold at the bracket end {0}.'.format(b))
    if width is None:
        width = (b - a) * RELATIVE_WIDTH
    for _ in range(iterations):
        if b - a <= width:
            break
        m = 0.5 * (a + b)
        if m <= a or m >= b:
            break
        if predicate(m):
            b = m
        else:
            a = m
    return b
