# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Pytest configuration."""

import json

import numpy as np
import pytest
from click.testing import CliRunner
from flask import Flask

from bj_symmetry import BJSymmetry
from bj_symmetry.cli import cli
from bj_symmetry.operators import LinearOperator
from bj_symmetry.spaces import SpaceDescriptor


@pytest.fixture
def app(tmp_path, monkeypatch):
    """Flask application fixture with a pushed application context."""
    monkeypatch.delenv('BJ_REPORT_DIR', raising=False)
    app = Flask('testapp')
    app.config.update(
        BJ_SYMMETRY_BUDGET=50,
        BJ_SYMMETRY_REPORT_DIR=str(tmp_path / 'reports'),
        TESTING=True,
    )
    BJSymmetry(app)
    with app.app_context():
        yield app


@pytest.fixture
def invoke(app):
    """Run a command of the command line interface against ``app``."""
    runner = CliRunner()

    def run(*args):
        return runner.invoke(cli, [str(a) for a in args], obj=app)
    return run


@pytest.fixture
def l2():
    """The Euclidean plane."""
    return SpaceDescriptor.lp(2, 2)


@pytest.fixture
def l1():
    """The plane with the l1 norm."""
    return SpaceDescriptor.lp(1, 2)


@pytest.fixture
def diagonal(l2):
    """``diag(1, 0.5)`` on the Euclidean plane, attaining its norm at e1."""
    return LinearOperator(np.diag([1.0, 0.5]), l2, l2)


@pytest.fixture
def coordinate_rank_one(l1, l2):
    """``x -> x_2 w`` from l1 to the Euclidean plane, left symmetric."""
    w = np.array([0.6, 0.8])
    return LinearOperator(np.outer(w, [0.0, 1.0]), l1, l2)


@pytest.fixture
def operator_file(tmp_path):
    """Write an operator to a JSON file and return its path."""
    def write(operator, name='operator.json'):
        path = tmp_path / name
        path.write_text(json.dumps(operator.to_json()))
        return str(path)
    return write
