# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Birkhoff-James orthogonality of vectors.

``x`` is orthogonal to ``y`` when ``||x + t y|| >= ||x||`` for every real
``t``. Since ``t -> ||x + t y||`` is convex, this holds exactly when its
one-sided derivatives at zero straddle zero. The derivatives are the extreme
values of ``f(y)`` over the norming functionals ``f`` of ``x``, which gives
the analytic test; the numeric test minimizes the map directly.

>>> from bj_symmetry.spaces import SpaceDescriptor
>>> l1 = SpaceDescriptor.lp(1, 2)
>>> bool(bj_orthogonal(l1, [1, 0], [0.5, 1]))
True
>>> bool(bj_orthogonal(l1, [0.5, 1], [1, 0]))
False
"""

import itertools
import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import null_space

from .errors import InputError, InternalInconsistencyError, NotFoundError
from .proxies import current_config, current_logger, tolerance
from .search import bisect_boundary, golden_section
from .spaces import VectorInSpace, as_coords, norming_functionals, norms

ANALYTIC = 'analytic'
NUMERIC = 'numeric'
BOTH = 'both'
METHODS = (ANALYTIC, NUMERIC, BOTH)

PLUS = 'plus'
MINUS = 'minus'

LEFT = 'left'
RIGHT = 'right'

SYMMETRIC = 'symmetric-within-budget'
NOT_SYMMETRIC = 'not-symmetric'

WITNESS_FACTOR = 10
"""A witness must violate orthogonality by this many tolerances."""


@dataclass(frozen=True)
class OrthogonalityVerdict(object):
    """Outcome of an orthogonality test with its numeric evidence.

    ``minimizer`` and ``min_value`` describe ``t -> ||x + t y||``. The verdict
    is orthogonal exactly when ``margin <= tolerance * max(1, ||x||)``.

    For the numeric method ``margin`` is ``||x|| - min_value``. The analytic
    and combined methods decide by the derivative test, so their ``margin`` is
    the relative derivative violation ``max(d_minus, -d_plus, 0) / ||y||``
    scaled by ``max(1, ||x||)``; ``minimizer`` and ``min_value`` stay search
    evidence.
    """

    orthogonal: bool
    minimizer: float
    min_value: float
    margin: float
    method: str
    tolerance: float

    def __bool__(self):
        """Return the verdict."""
        return self.orthogonal

    def to_json(self):
        """Return the JSON-compatible representation."""
        return {
            'orthogonal': self.orthogonal,
            'minimizer': self.minimizer,
            'min_value': self.min_value,
            'margin': self.margin,
            'method': self.method,
            'tolerance': self.tolerance,
        }


@dataclass(frozen=True, eq=False)
class SymmetryReport(object):
    """Outcome of a budget-bounded symmetry search.

    ``witness`` is absent unless the verdict is ``not-symmetric``.
    """

    subject: object
    direction: str
    verdict: str
    witness: object = None
    trials_used: int = 0
    seed: int = 0
    strategy: str = None

    @property
    def symmetric(self):
        """Whether no witness was found."""
        return self.verdict == SYMMETRIC

    def to_json(self):
        """Return the JSON-compatible representation."""
        witness = self.witness
        if witness is not None and not isinstance(witness, str):
            witness = witness.to_json()
        return {
            'subject': self.subject.to_json(),
            'direction': self.direction,
            'verdict': self.verdict,
            'witness': witness,
            'strategy': self.strategy,
            'trials_used': self.trials_used,
            'seed': self.seed,
        }


def _norm(space, x):
    return float(norms(space, x))


def _derivatives(space, x, y):
    """Derivatives of ``t -> ||x + t y||`` at zero; ``x`` may vanish."""
    if _norm(space, x) == 0:
        value = _norm(space, y)
        return -value, value
    functionals = norming_functionals(space, x)
    return functionals.support_min(y), functionals.support_max(y)


def _line_minimum(space, x, y, low, high):
    return golden_section(lambda t: _norm(space, x + t * y), low, high)


def one_sided_derivatives(space, x, y):
    """Return ``(d_minus, d_plus)`` of ``t -> ||x + t y||`` at zero.

    ``d_plus`` is the largest and ``d_minus`` the smallest value of ``f(y)``
    over the norming functionals ``f`` of ``x``.

    :param space: A :class:`~bj_symmetry.spaces.SpaceDescriptor`.
    :param x: Non-zero base vector.
    :param y: Direction.
    """
    x = as_coords(space, x)
    y = as_coords(space, y)
    if _norm(space, x) == 0:
        raise InputError('One-sided derivatives need a non-zero base vector.')
    return _derivatives(space, x, y)


def bj_orthogonal(space, x, y, method=ANALYTIC):
    """Decide whether ``x`` is Birkhoff-James orthogonal to ``y``.

    :param method: ``analytic`` (derivative test), ``numeric`` (golden-section
        minimization over ``|t| <= 2||x||/||y||``) or ``both``. ``both``
        reports the derivative test and raises
        :class:`InternalInconsistencyError` when the norm decrease seen by
        either search exceeds ``10`` numeric tolerances against the other
        verdict.
    :returns: An :class:`OrthogonalityVerdict`.
    """
    if method not in METHODS:
        raise InputError('Unknown method {0!r}.'.format(method))
    x = as_coords(space, x)
    y = as_coords(space, y)
    nx, ny = _norm(space, x), _norm(space, y)
    if nx == 0 or ny == 0:
        name = NUMERIC if method == NUMERIC else ANALYTIC
        return OrthogonalityVerdict(True, 0.0, nx, 0.0, method,
                                    tolerance(name))
    if method == ANALYTIC:
        return _analytic(space, x, y, nx, ny)
    numeric = _numeric(space, x, y, nx, ny)
    if method == NUMERIC:
        return numeric
    analytic = _analytic(space, x, y, nx, ny)
    limit = WITNESS_FACTOR * numeric.tolerance * max(1.0, nx)
    if analytic.orthogonal and numeric.margin > limit:
        raise InternalInconsistencyError(analytic, numeric)
    if not analytic.orthogonal and numeric.orthogonal and \
            nx - analytic.min_value > limit:
        raise InternalInconsistencyError(analytic, numeric)
    return OrthogonalityVerdict(
        analytic.orthogonal, numeric.minimizer, numeric.min_value,
        analytic.margin, BOTH, analytic.tolerance)


def _analytic(space, x, y, nx, ny):
    d_minus, d_plus = _derivatives(space, x, y)
    tol = tolerance('analytic')
    scale = max(1.0, nx)
    margin = max(d_minus, -d_plus, 0.0) / ny * scale
    if margin <= tol * scale:
        return OrthogonalityVerdict(True, 0.0, nx, margin, ANALYTIC, tol)
    bound = 2.0 * nx / ny
    low, high = (0.0, bound) if -d_plus > d_minus else (-bound, 0.0)
    best = _line_minimum(space, x, y, low, high)
    return OrthogonalityVerdict(False, best.argmin, min(best.value, nx),
                                margin, ANALYTIC, tol)


def _numeric(space, x, y, nx, ny):
    tol = tolerance('numeric')
    bound = 2.0 * nx / ny
    best = _line_minimum(space, x, y, -bound, bound)
    margin = max(nx - best.value, 0.0)
    return OrthogonalityVerdict(margin <= tol * max(1.0, nx), best.argmin,
                                best.value, margin, NUMERIC, tol)


def in_cone(space, x, y, sign, eps=0.0, method=NUMERIC, slack=None):
    """Decide whether ``y`` lies in the cone ``x^{+eps}`` or ``x^{-eps}``.

    ``y`` is in ``x^{+eps}`` when ``||x + t y|| >= sqrt(1 - eps^2) ||x||`` for
    all ``t >= 0``; the minus cone uses ``t <= 0``.

    :param sign: ``plus`` or ``minus``.
    :param eps: Real in ``[0, 1)``.
    :param method: ``numeric`` half-line search, or ``analytic`` derivative
        test (``eps = 0`` only).
    :param slack: Relative tolerance overriding the method default.
    """
    if not 0 <= eps < 1:
        raise InputError('eps must lie in [0, 1).')
    if sign not in (PLUS, MINUS):
        raise InputError('Unknown cone sign {0!r}.'.format(sign))
    x = as_coords(space, x)
    y = as_coords(space, y)
    nx, ny = _norm(space, x), _norm(space, y)
    if nx == 0 or ny == 0:
        return True
    if method == ANALYTIC:
        if eps != 0:
            raise InputError('The analytic cone test needs eps = 0.')
        d_minus, d_plus = _derivatives(space, x, y)
        allowance = (slack if slack is not None else
                     tolerance('analytic')) * ny
        if sign == PLUS:
            return d_plus >= -allowance
        return d_minus <= allowance
    bound = 2.0 * nx / ny
    low, high = (0.0, bound) if sign == PLUS else (-bound, 0.0)
    best = _line_minimum(space, x, y, low, high)
    allowance = (slack if slack is not None else
                 tolerance('numeric')) * max(1.0, nx)
    return math.sqrt(1.0 - eps ** 2) * nx - best.value <= allowance


def left_companion_interval(space, x, y, bracket=None):
    """Return all ``a`` with ``(a x + y)`` orthogonal to ``x`` as an interval.

    These are the minimizers of the convex map ``a -> ||a x + y||``; both ends
    are located by bisection on the sign of its one-sided derivatives.

    :param bracket: Half-width of the search bracket, by default
        ``2||y||/||x||``.
    """
    x = as_coords(space, x)
    y = as_coords(space, y)
    nx = _norm(space, x)
    if nx == 0:
        raise InputError('Companions need a non-zero base vector.')
    ny = _norm(space, y)
    if ny == 0:
        return 0.0, 0.0
    bound = 2.0 * ny / nx if bracket is None else float(bracket)

    def slopes(a):
        return _derivatives(space, a * x + y, x)

    low = bisect_boundary(lambda a: slopes(a)[1] >= 0, -bound, bound)
    high = bisect_boundary(lambda a: slopes(a)[0] > 0, -bound, bound)
    if high < low:
        low = high = 0.5 * (low + high)
    return low, high


def james_left_companion(space, x, y, bracket=None):
    """Return a scalar ``a`` with ``(a x + y)`` orthogonal to ``x``."""
    low, high = left_companion_interval(space, x, y, bracket=bracket)
    return 0.5 * (low + high)


def right_companion_interval(space, x, y):
    """Return all ``b`` with ``x`` orthogonal to ``(b x + y)``.

    Every norming functional takes the value ``||x||`` at ``x``, so the
    one-sided derivatives in the direction ``b x + y`` are those in the
    direction ``y`` shifted by ``b ||x||`` and the interval is closed form.
    """
    x = as_coords(space, x)
    y = as_coords(space, y)
    nx = _norm(space, x)
    if nx == 0:
        raise InputError('Companions need a non-zero base vector.')
    d_minus, d_plus = _derivatives(space, x, y)
    return -d_plus / nx, -d_minus / nx


def james_right_companion(space, x, y):
    """Return a scalar ``b`` with ``x`` orthogonal to ``(b x + y)``."""
    low, high = right_companion_interval(space, x, y)
    return 0.5 * (low + high)


def _violation(space, x, y):
    """Relative amount by which ``x`` fails to be orthogonal to ``y``."""
    d_minus, d_plus = _derivatives(space, x, y)
    ny = _norm(space, y)
    if ny == 0:
        return 0.0
    return max(d_minus, -d_plus, 0.0) / ny


def confirms_violation(space, x, y):
    """Whether ``x`` fails to be orthogonal to ``y`` by the witness margin.

    Both decision procedures must agree.
    """
    if _violation(space, x, y) <= tolerance('analytic'):
        return False
    verdict = bj_orthogonal(space, x, y, NUMERIC)
    nx = _norm(space, x)
    return verdict.margin > WITNESS_FACTOR * verdict.tolerance * max(1.0, nx)


def _structured_directions(space, x):
    """Kernel directions of a norming functional, then coordinate vectors."""
    n = space.dimension
    functional = norming_functionals(space, x).canonical().coords
    kernel = null_space(functional[None, :]).T
    directions = [k for k in kernel]
    directions += [a + b for a, b in itertools.combinations(kernel, 2)]
    directions += [a - b for a, b in itertools.combinations(kernel, 2)]
    directions += list(np.eye(n))
    return directions


def _offsets(low, high):
    """Distinct scalars sampled from a companion interval."""
    values = [0.5 * (low + high), 0.5 * high, 0.5 * low, low, high]
    unique = []
    for value in values:
        if not low <= value <= high:
            continue
        if not any(abs(value - u) <= 1e-15 * max(1.0, abs(u))
                   for u in unique):
            unique.append(value)
    return unique


def partners(space, x, budget, seed, side):
    """Yield vectors orthogonal to or from ``x``, structured ones first.

    With ``side=RIGHT`` every yielded ``y`` satisfies ``x ⊥ y``; with
    ``side=LEFT`` it satisfies ``y ⊥ x``. Companions are interval midpoints
    or endpoints for structured directions and uniform draws otherwise.
    """
    if side == RIGHT:
        def interval(z):
            return right_companion_interval(space, x, z)
    else:
        def interval(z):
            return left_companion_interval(space, x, z)

    x = as_coords(space, x)
    structured = int(math.ceil(budget / 2.0))
    produced = 0
    for z in _structured_directions(space, x):
        low, high = interval(z)
        for offset in _offsets(low, high):
            if produced >= structured:
                break
            produced += 1
            yield offset * x + z
    index = 0
    while produced < budget:
        rng = np.random.default_rng([seed, index])
        z = rng.standard_normal(space.dimension)
        low, high = interval(z)
        offset = rng.uniform(low, high) if high > low else low
        produced += 1
        index += 1
        yield offset * x + z


def point_left_symmetric(space, x, budget=None, seed=0):
    """Search for ``y`` with ``x`` orthogonal to ``y`` but not conversely.

    Candidates are ``b x + z`` with ``b`` a right companion of the direction
    ``z``. Half of the budget goes to structured directions (kernel of a
    norming functional, coordinate vectors) and half to seeded random ones.

    :returns: A :class:`SymmetryReport`.
    """
    x = as_coords(space, x)
    if _norm(space, x) == 0:
        raise InputError('Symmetry of the zero vector is not tested.')
    budget = budget or current_config['BJ_SYMMETRY_BUDGET']
    subject = VectorInSpace(x, space)

    trials = 0
    for y in partners(space, x, budget, seed, RIGHT):
        trials += 1
        if _norm(space, y) <= tolerance('zero') * _norm(space, x):
            continue
        if _violation(space, x, y) > tolerance('analytic'):
            continue
        if confirms_violation(space, y, x):
            witness = VectorInSpace(y / _norm(space, y), space)
            current_logger.debug('Left witness after %d trials.', trials)
            return SymmetryReport(subject, LEFT, NOT_SYMMETRIC, witness,
                                  trials, seed)
    return SymmetryReport(subject, LEFT, SYMMETRIC, None, trials, seed)


def point_right_symmetric(space, x, budget=None, seed=0):
    """Search for ``y`` orthogonal to ``x`` with ``x`` not orthogonal to ``y``.

    Candidates are ``a x + z`` with ``a`` taken from the left companion
    interval of the direction ``z``.

    :returns: A :class:`SymmetryReport`.
    """
    x = as_coords(space, x)
    if _norm(space, x) == 0:
        raise InputError('Symmetry of the zero vector is not tested.')
    budget = budget or current_config['BJ_SYMMETRY_BUDGET']
    subject = VectorInSpace(x, space)

    trials = 0
    for y in partners(space, x, budget, seed, LEFT):
        trials += 1
        if _norm(space, y) <= tolerance('zero') * _norm(space, x):
            continue
        if _violation(space, y, x) > tolerance('analytic'):
            continue
        if confirms_violation(space, x, y):
            witness = VectorInSpace(y / _norm(space, y), space)
            current_logger.debug('Right witness after %d trials.', trials)
            return SymmetryReport(subject, RIGHT, NOT_SYMMETRIC, witness,
                                  trials, seed)
    return SymmetryReport(subject, RIGHT, SYMMETRIC, None, trials, seed)


def _mutual(space, x, y):
    return (_violation(space, x, y) <= tolerance('analytic') and
            _violation(space, y, x) <= tolerance('analytic'))


def _unit(space, v):
    return VectorInSpace(v / _norm(space, v), space)


def _circle_search(space, x, first, second):
    """Find ``y`` on the circle spanned by two kernel vectors with ``y ⊥ x``.

    The sign of the derivative test flips between ``y`` and ``-y``.
    """
    def side(theta):
        y = math.cos(theta) * first + math.sin(theta) * second
        d_minus, d_plus = _derivatives(space, y, x)
        allowance = tolerance('analytic') * _norm(space, x)
        if d_minus > allowance:
            return 1, y
        if d_plus < -allowance:
            return -1, y
        return 0, y

    low, high = 0.0, math.pi
    start, y = side(low)
    if start == 0:
        return y
    for _ in range(100):
        middle = 0.5 * (low + high)
        sign, y = side(middle)
        if sign == 0:
            return y
        if sign == start:
            low = middle
        else:
            high = middle
    return None


def mutually_orthogonal_pair(space, seed=0, anchor=None, budget=None):
    """Return unit vectors ``(x, y)`` orthogonal to each other both ways.

    Without an anchor, coordinate pairs are tried first. With an anchor ``x``
    the partner is searched in the kernel of a norming functional of ``x``,
    by sign changes along circles in that kernel.

    :raises NotFoundError: When the search budget is exhausted.
    """
    n = space.dimension
    if n < 2:
        raise InputError('Mutually orthogonal pairs need dimension >= 2.')
    budget = budget or current_config['BJ_SYMMETRY_BUDGET']
    if anchor is None:
        eye = np.eye(n)
        for i, j in itertools.combinations(range(n), 2):
            if _mutual(space, eye[i], eye[j]):
                return _unit(space, eye[i]), _unit(space, eye[j])
        return _alternating_pair(space, seed, budget)

    x = as_coords(space, anchor)
    if _norm(space, x) == 0:
        raise InputError('The anchor must be non-zero.')
    x = x / _norm(space, x)
    functional = norming_functionals(space, x).canonical().coords
    kernel = null_space(functional[None, :]).T
    for k in kernel:
        if _mutual(space, x, k):
            return _unit(space, x), _unit(space, k)
    if len(kernel) >= 2:
        for first, second in itertools.combinations(kernel, 2):
            y = _circle_search(space, x, first, second)
            if y is not None and _mutual(space, x, y):
                return _unit(space, x), _unit(space, y)
        for trial in range(budget):
            rng = np.random.default_rng([seed, trial])
            plane = np.linalg.qr(
                kernel.T @ rng.standard_normal((len(kernel), 2)))[0].T
            y = _circle_search(space, x, plane[0], plane[1])
            if y is not None and _mutual(space, x, y):
                return _unit(space, x), _unit(space, y)
    raise NotFoundError(
        'No partner orthogonal both ways to the anchor was found.')


def _alternating_pair(space, seed, budget):
    """Alternate right companions until both relations hold."""
    for trial in range(budget):
        rng = np.random.default_rng([seed, trial])
        x = rng.standard_normal(space.dimension)
        y = rng.standard_normal(space.dimension)
        for _ in range(50):
            y = y + james_right_companion(space, x, y) * x
            if _norm(space, y) == 0:
                break
            if _mutual(space, x, y):
                return _unit(space, x), _unit(space, y)
            x = x + james_right_companion(space, y, x) * y
            if _mutual(space, x, y):
                return _unit(space, x), _unit(space, y)
    raise NotFoundError('No mutually orthogonal pair was found.')
