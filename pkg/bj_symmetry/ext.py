# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Flask extension for Birkhoff-James symmetry analysis."""

from werkzeug.utils import import_string

from . import config


class _BJSymmetryState(object):
    """State storing registered verification suites."""

    def __init__(self, app, suites=None, aliases=None):
        """Initialize state."""
        self.app = app
        self.suites = {}
        self.aliases = dict(aliases or {})

        if suites:
            self.load_suites(suites)

    def register(self, suite_id, suite):
        """Register a suite class under an id."""
        assert suite_id not in self.suites
        self.suites[suite_id] = suite(suite_id)

    def unregister(self, suite_id):
        """Unregister a suite by its id."""
        del self.suites[suite_id]

    def load_suites(self, suites):
        """Load suites from a mapping of id to import path."""
        for suite_id, import_path in suites.items():
            self.register(suite_id, import_string(import_path))

    def resolve(self, name):
        """Return the suite id registered under ``name`` or its alias."""
        if name not in self.suites:
            name = self.aliases.get(name)
        return name if name in self.suites else None


class BJSymmetry(object):
    """BJ-Symmetry extension."""

    def __init__(self, app=None, **kwargs):
        """Extension initialization."""
        if app:
            self.init_app(app, **kwargs)

    def init_app(self, app):
        """Flask application initialization."""
        self.init_config(app)
        state = _BJSymmetryState(
            app, suites=app.config['BJ_SYMMETRY_SUITES'],
            aliases=app.config['BJ_SYMMETRY_SUITE_ALIASES'])
        self._state = app.extensions['bj-symmetry'] = state

    def init_config(self, app):
        """Initialize configuration."""
        for k in dir(config):
            if k.startswith('BJ_SYMMETRY_'):
                app.config.setdefault(k, getattr(config, k))
