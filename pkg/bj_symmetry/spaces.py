# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

r"""Finite-dimensional normed spaces.

A space is either :math:`\ell_p^n` with :math:`1 \le p \le \infty` or an
:math:`\ell_1` direct sum of two spaces, normed by
:math:`\|(x, z)\| = \|x\| + \|z\|`. Vectors and functionals are plain
coordinate arrays tagged with their space; a functional acts by the standard
pairing and is measured in the dual norm.

>>> space = SpaceDescriptor.lp(2, 2)
>>> norm(space, [3, 4])
5.0
>>> norm(SpaceDescriptor.sum1(space, SpaceDescriptor.lp(2, 1)), [3, 4, 2])
7.0
"""

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatchError, InputError, UnsupportedSpaceError
from .proxies import current_config, tolerance

LP = 'lp'
SUM1 = 'sum1'

NOT_ENUMERABLE = 'not-enumerable'
"""Marker returned by :func:`extreme_points` for strictly convex balls."""

SINGLETON = 'singleton'
L1_BOX = 'l1-box'
LINF_SIMPLEX = 'linf-simplex'
NUMERIC_SAMPLE = 'numeric-sample'


def conjugate_exponent(p):
    """Return ``q`` with ``1/p + 1/q = 1``."""
    if p == 1:
        return math.inf
    if math.isinf(p):
        return 1.0
    return p / (p - 1.0)


@dataclass(frozen=True)
class SpaceDescriptor(object):
    """A finite-dimensional normed space.

    Use :meth:`lp` and :meth:`sum1` rather than the raw constructor.
    """

    kind: str
    p: float = None
    dim: int = None
    left: 'SpaceDescriptor' = None
    right: 'SpaceDescriptor' = None

    def __post_init__(self):
        """Validate the descriptor."""
        if self.kind == LP:
            if self.dim is None or int(self.dim) != self.dim or self.dim < 1:
                raise InputError('Dimension must be a positive integer.')
            try:
                p = float(self.p)
            except (TypeError, ValueError):
                raise InputError('Invalid exponent {0!r}.'.format(self.p))
            if math.isnan(p) or p < 1:
                raise InputError('Exponent must lie in [1, inf].')
            if p != 1 and not math.isinf(p) and not (
                    current_config['BJ_SYMMETRY_MIN_P'] <= p <=
                    current_config['BJ_SYMMETRY_MAX_P']):
                raise InputError(
                    'Exponent {0!r} is too close to an endpoint.'.format(p))
            object.__setattr__(self, 'p', p)
            object.__setattr__(self, 'dim', int(self.dim))
        elif self.kind == SUM1:
            if not isinstance(self.left, SpaceDescriptor) or \
                    not isinstance(self.right, SpaceDescriptor):
                raise InputError('A direct sum needs two spaces.')
        else:
            raise InputError('Unknown space kind {0!r}.'.format(self.kind))

    @classmethod
    def lp(cls, p, dim):
        r"""Return :math:`\ell_p^{dim}`."""
        return cls(kind=LP, p=p, dim=dim)

    @classmethod
    def sum1(cls, left, right):
        """Return the direct sum ``left ⊕₁ right``."""
        return cls(kind=SUM1, left=left, right=right)

    @property
    def dimension(self):
        """Total dimension."""
        if self.kind == LP:
            return self.dim
        return self.left.dimension + self.right.dimension

    @property
    def strictly_convex(self):
        """Whether the unit sphere contains no segment."""
        if self.kind == LP:
            return self.dim == 1 or 1 < self.p < math.inf
        return self.dimension == 1

    @property
    def smooth(self):
        """Whether every unit vector has a unique norming functional."""
        if self.kind == LP:
            return self.dim == 1 or 1 < self.p < math.inf
        return self.dimension == 1

    @property
    def reflexive(self):
        """Always true in finite dimension."""
        return True

    @property
    def kadets_klee(self):
        """Always true in finite dimension."""
        return True

    @property
    def is_lp(self):
        """Whether the space is an lp space."""
        return self.kind == LP

    def dual(self):
        """Return the dual lp space."""
        if self.kind != LP:
            raise UnsupportedSpaceError(
                'The dual of a direct sum is not an l1 direct sum.')
        return SpaceDescriptor.lp(conjugate_exponent(self.p), self.dim)

    def to_json(self):
        """Return the JSON-compatible representation."""
        if self.kind == LP:
            p = 'inf' if math.isinf(self.p) else self.p
            return {'kind': LP, 'p': p, 'dim': self.dim}
        return {'kind': SUM1, 'left': self.left.to_json(),
                'right': self.right.to_json()}

    @classmethod
    def from_json(cls, data):
        """Build a descriptor from its JSON-compatible representation."""
        if not isinstance(data, dict):
            raise InputError('A space must be a JSON object.')
        kind = data.get('kind')
        if kind == LP:
            p = data.get('p')
            if isinstance(p, str):
                if p.lower() not in ('inf', 'infinity'):
                    raise InputError('Invalid exponent {0!r}.'.format(p))
                p = math.inf
            return cls.lp(p, data.get('dim'))
        if kind == SUM1:
            return cls.sum1(cls.from_json(data.get('left')),
                            cls.from_json(data.get('right')))
        raise InputError('Unknown space kind {0!r}.'.format(kind))

    def __str__(self):
        """Return a compact name such as ``l3^2``."""
        if self.kind == LP:
            p = 'inf' if math.isinf(self.p) else '{0:g}'.format(self.p)
            return 'l{0}^{1}'.format(p, self.dim)
        return '({0} +1 {1})'.format(self.left, self.right)


@dataclass(frozen=True, eq=False)
class VectorInSpace(object):
    """Coordinates of a vector tagged with its space."""

    coords: np.ndarray
    space: SpaceDescriptor

    def __post_init__(self):
        """Freeze a float copy of the coordinates."""
        coords = as_coords(self.space, self.coords)
        object.__setattr__(self, 'coords', coords)

    def norm(self):
        """Return the norm of the vector."""
        return norm(self.space, self.coords)

    def normalized(self):
        """Return the vector scaled to unit norm."""
        value = self.norm()
        if value == 0:
            raise InputError('The zero vector cannot be normalized.')
        return VectorInSpace(self.coords / value, self.space)

    def __neg__(self):
        """Return the antipode."""
        return VectorInSpace(-self.coords, self.space)

    def to_json(self):
        """Return the coordinates as a list."""
        return [float(c) for c in self.coords]


@dataclass(frozen=True, eq=False)
class Functional(object):
    """A linear functional on ``space`` given by its coordinates."""

    coords: np.ndarray
    space: SpaceDescriptor

    def __post_init__(self):
        """Freeze a float copy of the coordinates."""
        coords = as_coords(self.space, self.coords)
        object.__setattr__(self, 'coords', coords)

    def __call__(self, x):
        """Evaluate on a vector."""
        return float(np.dot(self.coords, as_coords(self.space, x)))

    def norm(self):
        """Return the dual norm."""
        return dual_norm(self.space, self.coords)

    def to_json(self):
        """Return the coordinates as a list."""
        return [float(c) for c in self.coords]


def as_coords(space, x):
    """Return the coordinates of ``x`` as a read-only float array.

    :param space: The space ``x`` should belong to.
    :param x: A :class:`VectorInSpace`, :class:`Functional` or sequence.
    """
    if isinstance(x, (VectorInSpace, Functional)):
        x = x.coords
    coords = np.array(x, dtype=float)
    if coords.ndim != 1 or coords.shape[0] != space.dimension:
        raise DimensionMismatchError(
            'Expected {0} coordinates for {1}, got shape {2}.'.format(
                space.dimension, space, coords.shape))
    coords.setflags(write=False)
    return coords


def _split(space, a):
    """Split coordinates (along the first axis) of a direct sum."""
    k = space.left.dimension
    return a[:k], a[k:]


def _lp_norm(a, p):
    """Column-wise lp norm along the first axis."""
    a = np.abs(a)
    if p == 1:
        return a.sum(axis=0)
    if math.isinf(p):
        return a.max(axis=0)
    scale = a.max(axis=0)
    safe = np.where(scale > 0, scale, 1.0)
    return scale * np.power(np.power(a / safe, p).sum(axis=0), 1.0 / p)


def norms(space, a):
    """Return the norms of the columns of ``a`` (or of a single vector)."""
    a = np.asarray(a, dtype=float)
    if space.kind == LP:
        return _lp_norm(a, space.p)
    left, right = _split(space, a)
    return norms(space.left, left) + norms(space.right, right)


def dual_norms(space, a):
    """Return the dual norms of the columns of ``a``."""
    a = np.asarray(a, dtype=float)
    if space.kind == LP:
        return _lp_norm(a, conjugate_exponent(space.p))
    left, right = _split(space, a)
    return np.maximum(dual_norms(space.left, left),
                      dual_norms(space.right, right))


def norm(space, x):
    """Return the norm of ``x`` in ``space``.

    :param space: A :class:`SpaceDescriptor`.
    :param x: Coordinates; their length must match the space dimension.
    """
    return float(norms(space, as_coords(space, x)))


def dual_norm(space, f):
    """Return the dual norm of the functional with coordinates ``f``."""
    return float(dual_norms(space, as_coords(space, f)))


def duality_map(space, a):
    """Return a norming functional for every column of ``a``.

    The canonical member of ``J(x)`` is returned: free sign coordinates of
    ``l1`` are zero and the weight of ``l_inf`` is spread evenly over the
    active coordinates. Zero columns map to zero.
    """
    a = np.asarray(a, dtype=float)
    zero = tolerance('zero')
    if space.kind == LP:
        p = space.p
        n = _lp_norm(a, p)
        u = a / np.where(n > 0, n, 1.0)
        if p == 1:
            return np.where(np.abs(u) > zero, np.sign(u), 0.0)
        if math.isinf(p):
            active = (np.abs(u) >= 1 - zero) & (n > 0)
            count = np.maximum(active.sum(axis=0), 1)
            return np.where(active, np.sign(u), 0.0) / count
        return np.sign(u) * np.power(np.abs(u), p - 1)
    total = norms(space, a)
    parts = []
    for part_space, part in zip((space.left, space.right), _split(space, a)):
        live = norms(part_space, part) > zero * total
        parts.append(np.where(live, duality_map(part_space, part), 0.0))
    return np.concatenate(parts, axis=0)


def norming_points(space, g):
    """Return, per column of ``g``, a unit vector ``x`` with ``g(x) = ||g||*``.

    This is the duality map of the dual space carried back to ``space``; a
    zero functional yields some unit vector.
    """
    g = np.asarray(g, dtype=float)
    squeeze = g.ndim == 1
    if squeeze:
        g = g[:, None]
    if space.kind == LP:
        p = space.p
        if p == 1:
            idx = np.argmax(np.abs(g), axis=0)
            cols = np.arange(g.shape[1])
            signs = np.sign(g[idx, cols])
            x = np.zeros_like(g)
            x[idx, cols] = np.where(signs == 0, 1.0, signs)
        elif math.isinf(p):
            x = np.where(g < 0, -1.0, 1.0)
        else:
            q = conjugate_exponent(p)
            n = _lp_norm(g, q)
            u = g / np.where(n > 0, n, 1.0)
            x = np.sign(u) * np.power(np.abs(u), q - 1)
            dead = n == 0
            if dead.any():
                x[:, dead] = 0.0
                x[0, dead] = 1.0
    else:
        left, right = _split(space, g)
        xl = norming_points(space.left, left)
        xr = norming_points(space.right, right)
        use_left = dual_norms(space.left, left) >= dual_norms(
            space.right, right)
        x = np.concatenate([
            np.where(use_left, xl, 0.0), np.where(use_left, 0.0, xr)], axis=0)
    return x[:, 0] if squeeze else x


@dataclass(frozen=True, eq=False)
class FunctionalSet(object):
    """The set ``J(x)`` of norming functionals of an anchor vector.

    ``kind`` is one of ``singleton``, ``l1-box`` (fixed signs plus free
    coordinates ranging over ``[-1, 1]``), ``linf-simplex`` (convex hull of
    signed coordinate functionals on the active coordinates) or
    ``numeric-sample`` (direct sums, kept together with the part sets so that
    support values are exact).
    """

    kind: str
    space: SpaceDescriptor
    anchor: np.ndarray
    signs: np.ndarray = None
    free: tuple = ()
    active: tuple = ()
    parts: tuple = ()
    members: tuple = field(default=())

    @property
    def is_singleton(self):
        """Whether the anchor is a smooth point."""
        return self.kind == SINGLETON

    def canonical(self):
        """Return one distinguished member."""
        if self.kind in (SINGLETON, NUMERIC_SAMPLE):
            return self.members[0]
        if self.kind == L1_BOX:
            return Functional(self.signs, self.space)
        coords = np.zeros(self.space.dimension)
        idx = list(self.active)
        coords[idx] = self.signs[idx] / len(idx)
        return Functional(coords, self.space)

    def argmax(self, y):
        """Return a member ``f`` maximizing ``f(y)``."""
        y = as_coords(self.space, y)
        if self.kind == SINGLETON:
            return self.members[0]
        if self.kind == L1_BOX:
            coords = np.array(self.signs, dtype=float)
            free = list(self.free)
            coords[free] = np.where(y[free] < 0, -1.0, 1.0)
            return Functional(coords, self.space)
        if self.kind == LINF_SIMPLEX:
            idx = list(self.active)
            best = idx[int(np.argmax(self.signs[idx] * y[idx]))]
            coords = np.zeros(self.space.dimension)
            coords[best] = self.signs[best]
            return Functional(coords, self.space)
        chunks = []
        for part_space, part_set, part in zip(
                (self.space.left, self.space.right), self.parts,
                _split(self.space, y)):
            if part_set is None:
                chunks.append(duality_map(part_space, part))
            else:
                chunks.append(part_set.argmax(part).coords)
        return Functional(np.concatenate(chunks), self.space)

    def argmin(self, y):
        """Return a member ``f`` minimizing ``f(y)``."""
        return self.argmax(-as_coords(self.space, y))

    def support_max(self, y):
        """Return ``max f(y)`` over the set."""
        return self.argmax(y)(y)

    def support_min(self, y):
        """Return ``min f(y)`` over the set."""
        return self.argmin(y)(y)

    def vanishing_member(self, y):
        """Return a member ``f`` with ``f(y) = 0``.

        Such a member exists exactly when the anchor is Birkhoff-James
        orthogonal to ``y``.
        """
        high, low = self.argmax(y), self.argmin(y)
        top, bottom = high(y), low(y)
        scale = max(1.0, norm(self.space, y))
        slack = tolerance('analytic') * scale
        if bottom > slack or top < -slack:
            raise InputError('No norming functional vanishes on the vector.')
        if top - bottom <= 0:
            return high
        t = min(max(top / (top - bottom), 0.0), 1.0)
        return Functional(t * low.coords + (1 - t) * high.coords, self.space)

    def sample(self, count, seed=0):
        """Return ``count`` members drawn deterministically from the set."""
        rng = np.random.default_rng(seed)
        if self.kind == SINGLETON:
            return [self.members[0]] * count
        if self.kind == NUMERIC_SAMPLE:
            return [self.members[i % len(self.members)]
                    for i in range(count)]
        result = []
        for _ in range(count):
            if self.kind == L1_BOX:
                coords = np.array(self.signs, dtype=float)
                free = list(self.free)
                coords[free] = rng.uniform(-1.0, 1.0, size=len(free))
            else:
                idx = list(self.active)
                coords = np.zeros(self.space.dimension)
                coords[idx] = self.signs[idx] * rng.dirichlet(
                    np.ones(len(idx)))
            result.append(Functional(coords, self.space))
        return result

    def evidence(self):
        """Return two distinct members, or ``None`` for a singleton."""
        if self.kind == SINGLETON:
            return None
        if self.kind == L1_BOX:
            i = self.free[0]
            plus = np.array(self.signs, dtype=float)
            minus = np.array(self.signs, dtype=float)
            plus[i], minus[i] = 1.0, -1.0
            return Functional(plus, self.space), Functional(minus, self.space)
        if self.kind == LINF_SIMPLEX:
            i, j = self.active[:2]
            first = np.zeros(self.space.dimension)
            second = np.zeros(self.space.dimension)
            first[i], second[j] = self.signs[i], self.signs[j]
            return (Functional(first, self.space),
                    Functional(second, self.space))
        first = self.members[0]
        for member in self.members[1:]:
            if np.max(np.abs(member.coords - first.coords)) > \
                    tolerance('norming'):
                return first, member
        return first, _distinct_member(self)


def _distinct_member(fset):
    """Build a member differing from the canonical one of a direct sum."""
    chunks = []
    changed = False
    for part_space, part_set in zip((fset.space.left, fset.space.right),
                                    fset.parts):
        if part_set is None and not changed:
            g = np.zeros(part_space.dimension)
            g[0] = 1.0 / dual_norm(part_space, np.eye(part_space.dimension)[0])
            chunks.append(g)
            changed = True
        elif part_set is not None and not part_set.is_singleton \
                and not changed:
            chunks.append(part_set.evidence()[1].coords)
            changed = True
        elif part_set is None:
            chunks.append(np.zeros(part_space.dimension))
        else:
            chunks.append(part_set.canonical().coords)
    return Functional(np.concatenate(chunks), fset.space)


def _singleton(space, anchor, coords):
    return FunctionalSet(SINGLETON, space, anchor,
                         members=(Functional(coords, space),))


def _norming_set(space, coords, value):
    """Build ``J(x)`` for a non-zero ``x`` of norm ``value``."""
    zero = tolerance('zero') * value
    if space.kind == LP:
        p = space.p
        if p == 1:
            live = np.abs(coords) > zero
            signs = np.where(live, np.sign(coords), 0.0)
            free = tuple(int(i) for i in np.flatnonzero(~live))
            if not free:
                return _singleton(space, coords, signs)
            return FunctionalSet(L1_BOX, space, coords, signs=signs,
                                 free=free)
        if math.isinf(p):
            active = tuple(int(i) for i in np.flatnonzero(
                np.abs(coords) >= value - zero))
            signs = np.sign(coords)
            if len(active) == 1:
                single = np.zeros(space.dimension)
                single[active[0]] = signs[active[0]]
                return _singleton(space, coords, single)
            return FunctionalSet(LINF_SIMPLEX, space, coords, signs=signs,
                                 active=active)
        return _singleton(space, coords,
                          duality_map(space, coords[:, None])[:, 0])
    parts = []
    for part_space, part in zip((space.left, space.right),
                                _split(space, coords)):
        part_value = float(norms(part_space, part))
        parts.append(_norming_set(part_space, part, part_value)
                     if part_value > zero else None)
    if all(part is not None and part.is_singleton for part in parts):
        return _singleton(space, coords, np.concatenate(
            [part.canonical().coords for part in parts]))
    members = _sample_direct_sum(space, parts,
                                 current_config['BJ_SYMMETRY_SAMPLE_BUDGET'])
    return FunctionalSet(NUMERIC_SAMPLE, space, coords, parts=tuple(parts),
                         members=tuple(members))


def _sample_direct_sum(space, parts, budget):
    """Sample members of the norming set of a direct sum.

    A part with a non-zero component contributes a member of its own norming
    set; a zero part contributes any functional of dual norm at most one.
    The first sample is the canonical member.
    """
    rng = np.random.default_rng(0)
    part_spaces = (space.left, space.right)
    members = []
    for index in range(budget):
        chunks = []
        for part_space, part_set in zip(part_spaces, parts):
            if part_set is None:
                if index == 0:
                    chunks.append(np.zeros(part_space.dimension))
                    continue
                g = rng.standard_normal(part_space.dimension)
                g *= rng.uniform() / dual_norm(part_space, g)
                chunks.append(g)
            elif index == 0:
                chunks.append(part_set.canonical().coords)
            else:
                chunks.append(part_set.sample(1, seed=index)[0].coords)
        members.append(Functional(np.concatenate(chunks), space))
    return members


def norming_functionals(space, x):
    """Return the set ``J(x)`` of norming functionals of ``x``.

    :param space: A :class:`SpaceDescriptor`.
    :param x: A non-zero vector.
    :returns: A :class:`FunctionalSet`; ``singleton`` for smooth points.
    """
    coords = as_coords(space, x)
    value = float(norms(space, coords))
    if value == 0:
        raise InputError('The zero vector has no norming functional.')
    return _norming_set(space, coords, value)


@dataclass(frozen=True)
class Smoothness(object):
    """Result of :func:`is_smooth_point`, truthy when smooth."""

    smooth: bool
    evidence: tuple = None

    def __bool__(self):
        """Return the verdict."""
        return self.smooth


def is_smooth_point(space, x):
    """Decide whether ``x`` has a unique norming functional.

    When it does not, two distinct norming functionals are attached as
    evidence.
    """
    functionals = norming_functionals(space, x)
    if functionals.is_singleton:
        return Smoothness(True)
    return Smoothness(False, functionals.evidence())


def extreme_points(space):
    """Enumerate the extreme points of the closed unit ball.

    Returns :data:`NOT_ENUMERABLE` when every unit vector is extreme.
    """
    n = space.dimension
    if space.kind == LP:
        if n == 1:
            points = [np.ones(1), -np.ones(1)]
        elif space.p == 1:
            points = []
            for k in range(n):
                e = np.eye(n)[k]
                points.extend([e, -e])
        elif math.isinf(space.p):
            points = [np.array(signs, dtype=float) for signs in
                      itertools.product((1.0, -1.0), repeat=n)]
        else:
            return NOT_ENUMERABLE
        return tuple(VectorInSpace(p, space) for p in points)
    left = extreme_points(space.left)
    right = extreme_points(space.right)
    if left == NOT_ENUMERABLE or right == NOT_ENUMERABLE:
        return NOT_ENUMERABLE
    zeros_left = np.zeros(space.left.dimension)
    zeros_right = np.zeros(space.right.dimension)
    points = [np.concatenate([p.coords, zeros_right]) for p in left]
    points += [np.concatenate([zeros_left, p.coords]) for p in right]
    return tuple(VectorInSpace(p, space) for p in points)


def sphere_columns(space, rng, count):
    """Return ``count`` random unit vectors as the columns of an array."""
    draws = rng.standard_normal((space.dimension, count))
    return draws / norms(space, draws)


def sample_unit_sphere(space, seed, count):
    """Return ``count`` unit vectors, deterministic in ``seed``.

    Standard normal draws are normalized by the norm of the space.
    """
    if count < 1:
        raise InputError('At least one sample is required.')
    units = sphere_columns(space, np.random.default_rng(seed), count)
    return [VectorInSpace(units[:, i], space) for i in range(count)]


def coordinate_vector(space, index):
    """Return the coordinate vector ``e_index``."""
    return VectorInSpace(np.eye(space.dimension)[index], space)
