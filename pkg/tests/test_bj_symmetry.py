# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.


"""Module tests."""

import logging

import pytest
from flask import Flask

from bj_symmetry import BJSymmetry, current_bj_symmetry
from bj_symmetry.proxies import current_config, current_logger, tolerance
from bj_symmetry.suites import MinusConeSuite


def test_version():
    """Test version import."""
    from bj_symmetry import __version__
    assert __version__


def test_init():
    """Test extension initialization."""
    app = Flask('testapp')
    ext = BJSymmetry(app)
    assert 'bj-symmetry' in app.extensions

    app = Flask('testapp')
    ext = BJSymmetry()
    assert 'bj-symmetry' not in app.extensions
    ext.init_app(app)
    assert 'bj-symmetry' in app.extensions
    assert 500 == app.config['BJ_SYMMETRY_BUDGET']


def test_config_override():
    """Application values win over the defaults."""
    app = Flask('testapp')
    app.config['BJ_SYMMETRY_BUDGET'] = 7
    app.config['BJ_SYMMETRY_TOLERANCES'] = {'numeric': 1e-6}
    BJSymmetry(app)
    with app.app_context():
        assert 7 == current_config['BJ_SYMMETRY_BUDGET']
        assert 1e-6 == tolerance('numeric')
        assert 1e-9 == tolerance('analytic')
        assert app.logger is current_logger._get_current_object()


def test_proxies_without_application():
    """Defaults and the package logger are used outside an application."""
    assert 500 == current_config['BJ_SYMMETRY_BUDGET']
    assert 1e-7 == tolerance('numeric')
    assert logging.getLogger('bj_symmetry') is \
        current_logger._get_current_object()


def test_register(app):
    """Test registering and unregistering suites."""
    state = current_bj_symmetry._get_current_object()
    assert state is app.extensions['bj-symmetry']
    state.register('again', MinusConeSuite)
    assert 'again' == state.suites['again'].suite_id
    with pytest.raises(AssertionError):
        state.register('again', MinusConeSuite)
    state.unregister('again')
    assert 'again' not in state.suites
