# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Report tests."""

import json
import os

import numpy as np
import pytest

from bj_symmetry.reports import content_hash, document, dumps, report_dir, \
    write_profile, write_report
from bj_symmetry.schemas import RunConfig
from bj_symmetry.spaces import SpaceDescriptor


def test_dumps():
    """Floats keep 17 significant digits and JSON stays valid."""
    text = dumps({'a': [1, 2.5, None, True], 'b': np.float64(1 / 3.0),
                  'c': np.array([0.5, -0.25]), 'd': float('-inf'),
                  'space': SpaceDescriptor.lp('inf', 2), 'e': (np.int64(3),)})
    data = json.loads(text)
    assert [1, 2.5, None, True] == data['a']
    assert 1 / 3.0 == data['b']
    assert '0.33333333333333331' in text
    assert [0.5, -0.25] == data['c']
    assert '-inf' == data['d']
    assert {'kind': 'lp', 'p': 'inf', 'dim': 2} == data['space']
    assert [3] == data['e']
    assert '"nan"' == dumps(float('nan'))
    with pytest.raises(TypeError):
        dumps(object())


def test_content_hash():
    """Equal instances share a hash."""
    assert content_hash({'x': [1.0, 2.0]}) == content_hash(
        {'x': np.array([1.0, 2.0])})
    assert content_hash({'x': [1.0, 2.0]}) != content_hash({'x': [2.0, 1.0]})
    assert 40 == len(content_hash([]))


def test_report_dir(app, monkeypatch, tmp_path):
    """The environment wins over the option, which wins over the config."""
    assert str(tmp_path / 'reports') == report_dir()
    assert 'out' == report_dir('out')
    monkeypatch.setenv('BJ_REPORT_DIR', 'env')
    assert 'env' == report_dir('out')


def test_write_report(app, tmp_path):
    """Reports are named by the hash of their instance."""
    instance = {'operator': [[1.0]]}
    payload = document({'verdict': 'pass'}, RunConfig.load({'seed': 2}))
    path = write_report('verify', instance, payload)
    expected = os.path.join(str(tmp_path / 'reports'),
                            'verify-{0}.json'.format(content_hash(instance)))
    assert expected == path
    with open(path) as fp:
        data = json.load(fp)
    assert 'pass' == data['verdict']
    assert 2 == data['config']['seed']
    assert 1e-7 == data['tolerances']['numeric']
    assert path == write_report('verify', instance, payload)


def test_write_profile(tmp_path):
    """Profiles are ``lambda,norm`` rows."""
    path = write_profile(str(tmp_path / 'sub' / 'profile.csv'),
                         [-1.0, 0.0, 1.0], [2.0, 1.0, 2.0])
    with open(path) as fp:
        lines = fp.read().splitlines()
    assert ['lambda,norm', '-1,2', '0,1', '1,2'] == lines
