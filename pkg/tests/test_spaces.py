# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Space tests."""

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from bj_symmetry.errors import DimensionMismatchError, InputError, \
    UnsupportedSpaceError
from bj_symmetry.spaces import LP, NOT_ENUMERABLE, SpaceDescriptor, \
    VectorInSpace, dual_norm, extreme_points, is_smooth_point, norm, \
    norming_functionals, sample_unit_sphere


def test_norms():
    """Test lp and direct sum norms."""
    assert 5.0 == norm(SpaceDescriptor.lp(2, 2), [3, 4])
    assert 3.0 == norm(SpaceDescriptor.lp(1, 2), [1, -2])
    assert 2.0 == norm(SpaceDescriptor.lp('inf', 2), [1, -2])
    assert norm(SpaceDescriptor.lp(3, 2), [1, 1]) == pytest.approx(
        2 ** (1 / 3.0))
    space = SpaceDescriptor.sum1(SpaceDescriptor.lp(2, 2),
                                 SpaceDescriptor.lp(2, 1))
    assert 7.0 == norm(space, [3, 4, -2])
    assert 3 == space.dimension


def test_dual_norms():
    """Test dual norms of functionals."""
    assert 3.0 == dual_norm(SpaceDescriptor.lp(1, 2), [1, -3])
    assert 4.0 == dual_norm(SpaceDescriptor.lp('inf', 2), [1, -3])
    space = SpaceDescriptor.sum1(SpaceDescriptor.lp(1, 2),
                                 SpaceDescriptor.lp(2, 1))
    assert 2.0 == dual_norm(space, [1, -2, 0.5])


def test_descriptor_validation():
    """Test rejected descriptors."""
    with pytest.raises(InputError):
        SpaceDescriptor.lp(0.5, 2)
    with pytest.raises(InputError):
        SpaceDescriptor.lp(2, 0)
    with pytest.raises(InputError):
        SpaceDescriptor.lp(1 + 1e-9, 2)
    with pytest.raises(InputError):
        SpaceDescriptor.from_json({'kind': 'hilbert', 'dim': 2})
    with pytest.raises(InputError):
        SpaceDescriptor.from_json({'kind': 'lp', 'p': 'huge', 'dim': 2})
    with pytest.raises(DimensionMismatchError):
        norm(SpaceDescriptor.lp(2, 2), [1, 2, 3])


def test_descriptor_json():
    """Test the JSON form, with infinity as a string."""
    space = SpaceDescriptor.from_json({'kind': 'lp', 'p': 'inf', 'dim': 2})
    assert math.isinf(space.p)
    assert {'kind': 'lp', 'p': 'inf', 'dim': 2} == space.to_json()
    nested = SpaceDescriptor.sum1(SpaceDescriptor.lp(3, 2),
                                  SpaceDescriptor.lp(2, 1))
    assert nested == SpaceDescriptor.from_json(nested.to_json())
    assert 'l3^2' == str(SpaceDescriptor.lp(3, 2))


def test_geometry_flags():
    """Test smoothness and strict convexity flags."""
    assert not SpaceDescriptor.lp(1, 2).strictly_convex
    assert not SpaceDescriptor.lp('inf', 2).smooth
    assert SpaceDescriptor.lp(3, 2).strictly_convex
    assert SpaceDescriptor.lp(3, 2).smooth
    assert SpaceDescriptor.lp(1, 1).smooth
    space = SpaceDescriptor.sum1(SpaceDescriptor.lp(2, 2),
                                 SpaceDescriptor.lp(2, 1))
    assert not space.smooth
    assert not space.strictly_convex
    assert space.reflexive
    with pytest.raises(UnsupportedSpaceError):
        space.dual()
    assert SpaceDescriptor.lp(1.5, 2).dual().p == pytest.approx(3.0)


def test_norming_functionals_smooth():
    """A smooth point has a single norming functional."""
    space = SpaceDescriptor.lp(2, 2)
    functionals = norming_functionals(space, [3, 4])
    assert functionals.is_singleton
    f = functionals.canonical()
    assert_allclose(f.coords, [0.6, 0.8])
    assert f([3, 4]) == pytest.approx(5.0)
    assert f.norm() == pytest.approx(1.0)
    assert is_smooth_point(space, [3, 4])
    with pytest.raises(InputError):
        norming_functionals(space, [0, 0])


def test_norming_functionals_l1():
    """A point of l1 with a zero coordinate has a box of functionals."""
    space = SpaceDescriptor.lp(1, 2)
    functionals = norming_functionals(space, [1, 0])
    assert not functionals.is_singleton
    assert 1.0 == functionals.support_max([0, 1])
    assert -1.0 == functionals.support_min([0, 1])
    smoothness = is_smooth_point(space, [1, 0])
    assert not smoothness
    first, second = smoothness.evidence
    assert first([1, 0]) == second([1, 0]) == 1.0
    assert not np.allclose(first.coords, second.coords)


def test_norming_functionals_linf():
    """A vertex of the l_inf ball has a simplex of functionals."""
    space = SpaceDescriptor.lp('inf', 2)
    assert not is_smooth_point(space, [1, 1])
    assert is_smooth_point(space, [1, 0.5])
    functionals = norming_functionals(space, [1, -1])
    for f in functionals.sample(5, seed=3):
        assert f([1, -1]) == pytest.approx(1.0)
        assert f.norm() == pytest.approx(1.0)


def test_vanishing_member():
    """Test the norming functional that vanishes on a direction."""
    space = SpaceDescriptor.lp(1, 2)
    f = norming_functionals(space, [1, 0]).vanishing_member([0, 1])
    assert f([0, 1]) == pytest.approx(0.0)
    assert f([1, 0]) == pytest.approx(1.0)
    with pytest.raises(InputError):
        norming_functionals(SpaceDescriptor.lp(2, 2), [1, 0]) \
            .vanishing_member([1, 0])


def test_direct_sum_norming_functionals():
    """Direct sums sample functionals that all norm the anchor."""
    space = SpaceDescriptor.sum1(SpaceDescriptor.lp(2, 2),
                                 SpaceDescriptor.lp(2, 1))
    x = [0.6, 0.8, 0.0]
    functionals = norming_functionals(space, x)
    assert not functionals.is_singleton
    for f in functionals.members[:10]:
        assert f(x) == pytest.approx(1.0)
        assert f.norm() <= 1.0 + 1e-12


def test_extreme_points():
    """Test extreme points of the unit balls."""
    assert 4 == len(extreme_points(SpaceDescriptor.lp(1, 2)))
    assert 8 == len(extreme_points(SpaceDescriptor.lp('inf', 3)))
    assert NOT_ENUMERABLE == extreme_points(SpaceDescriptor.lp(2, 2))


def test_sample_unit_sphere():
    """Samples are unit vectors and depend only on the seed."""
    space = SpaceDescriptor.lp(3, 3)
    first = sample_unit_sphere(space, 7, 5)
    second = sample_unit_sphere(space, 7, 5)
    for a, b in zip(first, second):
        assert_allclose(a.coords, b.coords)
        assert a.norm() == pytest.approx(1.0)
    with pytest.raises(InputError):
        sample_unit_sphere(space, 7, 0)


def test_vector_in_space():
    """Test tagged vectors."""
    space = SpaceDescriptor.lp(1, 2)
    x = VectorInSpace([3, -1], space)
    assert 4.0 == x.norm()
    assert_allclose(x.normalized().coords, [0.75, -0.25])
    assert [-3.0, 1.0] == (-x).to_json()
    with pytest.raises(InputError):
        VectorInSpace([0, 0], space).normalized()


FAMILIES = [
    SpaceDescriptor.lp(1, 3),
    SpaceDescriptor.lp(1.5, 3),
    SpaceDescriptor.lp(2, 3),
    SpaceDescriptor.lp(3, 3),
    SpaceDescriptor.lp('inf', 3),
    SpaceDescriptor.sum1(SpaceDescriptor.lp(2, 2),
                         SpaceDescriptor.lp(3, 1)),
]


@pytest.mark.parametrize('space', FAMILIES, ids=str)
def test_norm_axioms(space):
    """Norms are absolutely homogeneous and subadditive."""
    rng = np.random.default_rng(5)
    for _ in range(50):
        x = rng.standard_normal(space.dimension)
        y = rng.standard_normal(space.dimension)
        alpha = rng.uniform(-3, 3)
        assert norm(space, alpha * x) == pytest.approx(
            abs(alpha) * norm(space, x), rel=1e-12, abs=1e-12)
        assert norm(space, x + y) <= norm(space, x) + norm(space, y) + 1e-12


@pytest.mark.parametrize('space', FAMILIES, ids=str)
def test_strict_convexity_midpoints(space):
    """Midpoints of distinct unit vectors leave the sphere when flagged."""
    points = sample_unit_sphere(space, 11, 40)
    for x, y in zip(points[::2], points[1::2]):
        middle = norm(space, 0.5 * (x.coords + y.coords))
        if space.strictly_convex:
            assert middle < 1 - 1e-12
        else:
            assert middle <= 1 + 1e-12
    if not space.strictly_convex:
        e = np.eye(space.dimension)
        if space.kind == LP and math.isinf(space.p):
            x, y = e[0] + e[1], e[0] - e[1]
        else:
            x, y = e[0], e[-1]
        assert norm(space, x) == pytest.approx(norm(space, y))
        assert norm(space, 0.5 * (x + y)) == pytest.approx(norm(space, x))


@pytest.mark.parametrize('space', FAMILIES, ids=str)
def test_smoothness_flag(space):
    """Smooth spaces have smooth unit vectors, the others a corner."""
    for x in sample_unit_sphere(space, 17, 10):
        if space.smooth:
            assert is_smooth_point(space, x.coords)
    if not space.smooth:
        corner = np.zeros(space.dimension)
        corner[0] = 1.0
        if space.kind == LP and math.isinf(space.p):
            corner[1] = 1.0
        verdict = is_smooth_point(space, corner)
        assert not verdict
        assert 2 == len(verdict.evidence)


def test_direct_sum_additivity():
    """The norm of ``X ⊕1 Y`` adds the norms of the parts."""
    left = SpaceDescriptor.lp(2, 2)
    right = SpaceDescriptor.lp(3, 2)
    space = SpaceDescriptor.sum1(left, right)
    rng = np.random.default_rng(23)
    for _ in range(50):
        a = rng.standard_normal(2)
        b = rng.standard_normal(2)
        assert norm(space, np.concatenate([a, b])) == pytest.approx(
            norm(left, a) + norm(right, b), rel=1e-15)
