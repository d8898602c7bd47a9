# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Helper proxies to the state object, the configuration and the logger."""

import logging
from collections import ChainMap

from flask import current_app, has_app_context
from werkzeug.local import LocalProxy

from . import config

_DEFAULTS = {
    k: getattr(config, k) for k in dir(config) if k.startswith('BJ_SYMMETRY_')
}


def _current_config():
    """Return the application config layered over the module defaults."""
    if has_app_context():
        return ChainMap(current_app.config, _DEFAULTS)
    return _DEFAULTS


def _current_logger():
    """Return the application logger, or the package logger."""
    if has_app_context():
        return current_app.logger
    return logging.getLogger('bj_symmetry')


current_bj_symmetry = LocalProxy(
    lambda: current_app.extensions['bj-symmetry']
)

current_config = LocalProxy(_current_config)

current_logger = LocalProxy(_current_logger)


def tolerance(name):
    """Return the named tolerance from ``BJ_SYMMETRY_TOLERANCES``.

    Partial overrides on the application config keep the remaining defaults.

    :param name: Tolerance name, e.g. ``'numeric'``.
    """
    tolerances = dict(config.BJ_SYMMETRY_TOLERANCES)
    tolerances.update(current_config['BJ_SYMMETRY_TOLERANCES'])
    return tolerances[name]
