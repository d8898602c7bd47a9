# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Run settings tests."""

import math

import pytest

from bj_symmetry.errors import InputError
from bj_symmetry.schemas import RunConfig, parse_family, parse_space
from bj_symmetry.spaces import SUM1, SpaceDescriptor


@pytest.mark.parametrize('selector, expected', [
    ('l1:3', SpaceDescriptor.lp(1, 3)),
    ('l2:2', SpaceDescriptor.lp(2, 2)),
    ('lp:1.5:4', SpaceDescriptor.lp(1.5, 4)),
    (' lp:inf:2 ', SpaceDescriptor.lp('inf', 2)),
    ('{"kind": "lp", "p": 3, "dim": 2}', SpaceDescriptor.lp(3, 2)),
])
def test_parse_space(selector, expected):
    """Test space selectors."""
    assert expected == parse_space(selector)


def test_parse_direct_sum():
    """Direct sums are given as JSON."""
    space = parse_space(
        '{"kind": "sum1", "left": {"kind": "lp", "p": 2, "dim": 2}, '
        '"right": {"kind": "lp", "p": 2, "dim": 1}}')
    assert SUM1 == space.kind
    assert 3 == space.dimension


@pytest.mark.parametrize('selector', [
    'l3:2', 'lp:2', 'lp:x:2', 'l2:two', '{"kind": ', 'lp:0.5:2',
])
def test_parse_space_errors(selector):
    """Malformed selectors raise input errors."""
    with pytest.raises(InputError):
        parse_space(selector)


def test_parse_family():
    """A single space stands for operators of the space into itself."""
    domain, codomain = parse_family('l1:3->linf:2')
    assert SpaceDescriptor.lp(1, 3) == domain
    assert math.isinf(codomain.p)
    assert 2 == codomain.dimension
    assert (domain, domain) == parse_family('l1:3')


def test_run_config():
    """Test defaults, overrides and validation."""
    run = RunConfig.load()
    assert 0 == run.seed
    assert run.trials is None
    assert {} == run.tolerances

    run = RunConfig.load({'seed': 5, 'trials': 2}, budget=9, spaces=None)
    assert (5, 2, 9) == (run.seed, run.trials, run.budget)
    assert run.spaces is None
    assert ['l2^3'] == [str(d) for d, _ in run.families(['l2:3'])]

    run = RunConfig.load(spaces=['l1:2->l2:2'])
    [(domain, codomain)] = run.families(['l2:3'])
    assert ('l1^2', 'l2^2') == (str(domain), str(codomain))

    for data in ({'seed': -1}, {'trials': 0}, {'colour': 'red'},
                 {'tolerances': {'numeric': -1.0}}):
        with pytest.raises(InputError):
            RunConfig.load(data)
