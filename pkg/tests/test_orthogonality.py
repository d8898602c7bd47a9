# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Orthogonality tests."""

import numpy as np
import pytest

from bj_symmetry.errors import InputError
from bj_symmetry.oracles import confirms_not_orthogonal, confirms_orthogonal
from bj_symmetry.orthogonality import ANALYTIC, BOTH, LEFT, MINUS, \
    NOT_SYMMETRIC, NUMERIC, PLUS, RIGHT, SYMMETRIC, bj_orthogonal, in_cone, \
    james_left_companion, james_right_companion, left_companion_interval, \
    mutually_orthogonal_pair, one_sided_derivatives, partners, \
    point_left_symmetric, point_right_symmetric, right_companion_interval
from bj_symmetry.spaces import SpaceDescriptor, norm

FAMILIES = [
    SpaceDescriptor.lp(1, 3),
    SpaceDescriptor.lp(1.5, 3),
    SpaceDescriptor.lp(2, 3),
    SpaceDescriptor.lp(3, 3),
    SpaceDescriptor.lp('inf', 3),
]


def test_l1_example(l1):
    """Orthogonality is not symmetric in l1."""
    verdict = bj_orthogonal(l1, [1, 0], [0.5, 1], method=BOTH)
    assert verdict.orthogonal
    assert BOTH == verdict.method
    assert not bj_orthogonal(l1, [0.5, 1], [1, 0])


def test_euclidean_examples(l2):
    """Test orthogonal and parallel vectors of the plane."""
    assert bj_orthogonal(l2, [1, 0], [0, 1])
    assert bj_orthogonal(l2, [0, 1], [1, 0])
    for method in (ANALYTIC, NUMERIC, BOTH):
        verdict = bj_orthogonal(l2, [1, 0], [1, 0], method=method)
        assert not verdict.orthogonal
        assert verdict.minimizer == pytest.approx(-1.0, abs=1e-6)
        assert verdict.margin == pytest.approx(1.0, abs=1e-6)


def test_zero_and_invalid(l2):
    """Zero vectors are orthogonal to everything."""
    assert bj_orthogonal(l2, [0, 0], [1, 2])
    assert bj_orthogonal(l2, [1, 2], [0, 0])
    with pytest.raises(InputError):
        bj_orthogonal(l2, [1, 0], [0, 1], method='guess')
    with pytest.raises(InputError):
        one_sided_derivatives(l2, [0, 0], [0, 1])


def test_inner_product_equivalence():
    """In l2, orthogonality is the vanishing of the inner product."""
    space = SpaceDescriptor.lp(2, 4)
    rng = np.random.default_rng(11)
    for _ in range(25):
        x, y = rng.standard_normal((2, 4))
        assert not bj_orthogonal(space, x, y)
        y = y - np.dot(x, y) / np.dot(x, x) * x
        assert bj_orthogonal(space, x, y)
        assert bj_orthogonal(space, y, x)


@pytest.mark.parametrize('space', FAMILIES, ids=str)
def test_analytic_numeric_agreement(space):
    """Both decision procedures agree on random and companion pairs."""
    rng = np.random.default_rng(5)
    for _ in range(20):
        x, z = rng.standard_normal((2, space.dimension))
        y = z + james_right_companion(space, x, z) * x
        for direction in (z, y):
            analytic = bj_orthogonal(space, x, direction, ANALYTIC)
            numeric = bj_orthogonal(space, x, direction, NUMERIC)
            assert analytic.orthogonal == numeric.orthogonal
        assert bj_orthogonal(space, x, y, BOTH).orthogonal


def test_cones(l2):
    """Test plus and minus cones in the plane."""
    assert in_cone(l2, [1, 0], [0, 1], PLUS)
    assert not in_cone(l2, [1, 0], [-1, 0], PLUS)
    assert in_cone(l2, [1, 0], [-1, 0], MINUS)
    assert in_cone(l2, [1, 0], [-1, 0], MINUS, method=ANALYTIC)
    assert in_cone(l2, [1, 0], [-0.2, 1], PLUS, eps=0.5)
    assert not in_cone(l2, [1, 0], [-0.2, 1], PLUS)
    with pytest.raises(InputError):
        in_cone(l2, [1, 0], [0, 1], PLUS, eps=1.0)
    with pytest.raises(InputError):
        in_cone(l2, [1, 0], [0, 1], PLUS, eps=0.5, method=ANALYTIC)
    with pytest.raises(InputError):
        in_cone(l2, [1, 0], [0, 1], 'sideways')


def test_derivatives(l1):
    """One-sided derivatives are extreme values over norming functionals."""
    assert (-1.0, 1.0) == one_sided_derivatives(l1, [1, 0], [0, 1])
    d_minus, d_plus = one_sided_derivatives(l1, [1, 1], [1, 0])
    assert d_minus == d_plus == 1.0


def test_companions(l1, l2):
    """Test James companions and their intervals."""
    assert james_right_companion(l2, [1, 0], [0.5, 1]) == pytest.approx(
        -0.5)
    assert james_left_companion(l2, [1, 0], [0.5, 1]) == pytest.approx(
        -0.5, abs=1e-9)
    assert (-1.0, 1.0) == right_companion_interval(l1, [1, 0], [0, 1])
    low, high = left_companion_interval(l1, [1, 1], [1, -1])
    assert low == pytest.approx(-1.0, abs=1e-9)
    assert high == pytest.approx(1.0, abs=1e-9)
    for a in (low, 0.0, 0.5 * high):
        assert bj_orthogonal(l1, a * np.array([1, 1]) + [1, -1], [1, 1])
    with pytest.raises(InputError):
        james_right_companion(l2, [0, 0], [1, 0])


@pytest.mark.parametrize('side', [LEFT, RIGHT])
def test_partners(side):
    """Partners satisfy the requested relation with the anchor."""
    space = SpaceDescriptor.lp(3, 3)
    x = np.array([0.3, -1.0, 0.7])
    found = list(partners(space, x, 12, 4, side))
    assert 12 == len(found)
    for y in found:
        if side == RIGHT:
            assert bj_orthogonal(space, x, y)
        else:
            assert bj_orthogonal(space, y, x)


def test_mutually_orthogonal_pair():
    """Test pairs orthogonal to each other both ways."""
    space = SpaceDescriptor.lp(3, 3)
    x, y = mutually_orthogonal_pair(space)
    assert bj_orthogonal(space, x.coords, y.coords)
    assert bj_orthogonal(space, y.coords, x.coords)

    x, y = mutually_orthogonal_pair(space, anchor=[1, 1, 0])
    assert x.coords[0] == pytest.approx(2 ** (-1 / 3.0))
    assert x.norm() == pytest.approx(1.0)
    assert y.norm() == pytest.approx(1.0)
    assert bj_orthogonal(space, x.coords, y.coords)
    assert bj_orthogonal(space, y.coords, x.coords)

    with pytest.raises(InputError):
        mutually_orthogonal_pair(SpaceDescriptor.lp(3, 1))


def test_point_symmetry_euclidean(l2):
    """Every point of a Hilbert space is symmetric."""
    assert SYMMETRIC == point_left_symmetric(l2, [0.6, 0.8], 20).verdict
    report = point_right_symmetric(l2, [0.6, 0.8], 20)
    assert report.symmetric
    assert report.witness is None
    assert 20 == report.trials_used


def test_point_left_symmetry_l1(l1):
    """``(1, 0)`` is orthogonal to ``(0.5, 1)`` but not conversely."""
    x = np.array([1.0, 0.0])
    report = point_left_symmetric(l1, x, budget=20, seed=1)
    assert NOT_SYMMETRIC == report.verdict
    y = report.witness.coords
    assert report.witness.norm() == pytest.approx(1.0)
    assert confirms_orthogonal(l1, x, y)
    assert confirms_not_orthogonal(l1, y, x)
    assert LEFT == report.to_json()['direction']


def test_point_right_symmetry_l1(l1):
    """``(1, 1)`` has a right witness in l1."""
    x = np.array([1.0, 1.0])
    report = point_right_symmetric(l1, x, budget=20, seed=1)
    assert NOT_SYMMETRIC == report.verdict
    y = report.witness.coords
    assert confirms_orthogonal(l1, y, x)
    assert confirms_not_orthogonal(l1, x, y)
    with pytest.raises(InputError):
        point_right_symmetric(l1, [0, 0])


@pytest.mark.parametrize('space', FAMILIES, ids=str)
def test_verdict_margin_consistency(space):
    """A verdict is orthogonal exactly when its margin is in tolerance."""
    rng = np.random.default_rng(29)
    pairs = []
    for _ in range(15):
        x, z = rng.standard_normal((2, space.dimension))
        pairs.append((x, z))
        pairs.append((x, z + james_right_companion(space, x, z) * x))
    for x, y in pairs:
        scale = max(1.0, norm(space, x))
        for method in (ANALYTIC, NUMERIC, BOTH):
            verdict = bj_orthogonal(space, x, y, method)
            assert verdict.orthogonal == \
                (verdict.margin <= verdict.tolerance * scale)


def test_nearly_orthogonal_verdicts(l2):
    """A first order violation below the numeric resolution is reported."""
    x, y = [1.0, 0.0], [1e-8, 1.0]
    numeric = bj_orthogonal(l2, x, y, NUMERIC)
    assert numeric.orthogonal
    for method in (ANALYTIC, BOTH):
        verdict = bj_orthogonal(l2, x, y, method)
        assert not verdict.orthogonal
        assert verdict.margin == pytest.approx(1e-8, rel=1e-6)
        assert verdict.margin > verdict.tolerance


@pytest.mark.parametrize('space', FAMILIES, ids=str)
def test_derivatives_finite_differences(space):
    """One-sided derivatives match one-sided difference quotients."""
    rng = np.random.default_rng(31)
    h = 1e-7
    for _ in range(10):
        signs = rng.choice([-1.0, 1.0], space.dimension)
        x = rng.uniform(0.2, 1.0, space.dimension) * signs
        y = rng.standard_normal(space.dimension)
        d_minus, d_plus = one_sided_derivatives(space, x, y)
        forward = (norm(space, x + h * y) - norm(space, x)) / h
        backward = (norm(space, x) - norm(space, x - h * y)) / h
        assert d_plus == pytest.approx(forward, abs=1e-5)
        assert d_minus == pytest.approx(backward, abs=1e-5)


@pytest.mark.parametrize('p, x, y, expected', [
    (1, [1, 0, 0.5], [0.3, 1, -0.2], (-0.9, 1.1)),
    ('inf', [1, 1, 0.5], [0.3, -0.4, 1], (-0.4, 0.3)),
])
def test_derivatives_at_corners(p, x, y, expected):
    """Corners of l1 and linf have distinct one-sided derivatives."""
    space = SpaceDescriptor.lp(p, 3)
    x, y = np.array(x, dtype=float), np.array(y, dtype=float)
    h = 1e-7
    d_minus, d_plus = one_sided_derivatives(space, x, y)
    assert (d_minus, d_plus) == pytest.approx(expected, abs=1e-12)
    assert d_plus == pytest.approx(
        (norm(space, x + h * y) - norm(space, x)) / h, abs=1e-5)
    assert d_minus == pytest.approx(
        (norm(space, x) - norm(space, x - h * y)) / h, abs=1e-5)


@pytest.mark.parametrize('space', [
    s for s in FAMILIES if s.smooth and s.strictly_convex], ids=str)
def test_companion_uniqueness(space):
    """Companions are unique in smooth and strictly convex spaces."""
    rng = np.random.default_rng(37)
    for _ in range(10):
        x, y = rng.standard_normal((2, space.dimension))
        low, high = right_companion_interval(space, x, y)
        assert high - low <= 1e-6
        b = james_right_companion(space, x, y)
        assert bj_orthogonal(space, x, b * x + y)

        wide = 6 * norm(space, y) / norm(space, x)
        a = james_left_companion(space, x, y)
        assert a == pytest.approx(
            james_left_companion(space, x, y, bracket=wide), abs=1e-6)
        low, high = left_companion_interval(space, x, y)
        assert high - low <= 1e-6
        assert bj_orthogonal(space, a * x + y, x)
