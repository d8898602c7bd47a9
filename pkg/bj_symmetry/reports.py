# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Persisted reports.

Reports are JSON documents whose floats are printed with 17 significant
digits; infinities and NaN become the strings ``"inf"``, ``"-inf"`` and
``"nan"``. Keys keep their insertion order, so identical runs produce
identical bytes.

>>> dumps({'norm': 0.1, 'card': float('inf')})
'{"norm": 0.10000000000000001, "card": "inf"}'
"""

import csv
import json
import math
import os
from hashlib import sha1

import numpy as np

from . import config
from .proxies import current_config

FLOAT_FORMAT = '%.17g'


def _float(value):
    if math.isnan(value):
        return '"nan"'
    if math.isinf(value):
        return '"inf"' if value > 0 else '"-inf"'
    return FLOAT_FORMAT % value


def dumps(value):
    """Serialize ``value`` to JSON with 17-digit floats.

    :param value: Nested dicts, lists, tuples, strings, booleans, numbers,
        numpy scalars and arrays.
    """
    if isinstance(value, np.ndarray):
        value = value.tolist()
    elif isinstance(value, np.generic):
        value = value.item()
    if value is None or isinstance(value, (bool, str)):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _float(value)
    if isinstance(value, dict):
        return '{' + ', '.join(
            '{0}: {1}'.format(json.dumps(str(k), ensure_ascii=False),
                              dumps(v))
            for k, v in value.items()) + '}'
    if isinstance(value, (list, tuple)):
        return '[' + ', '.join(dumps(v) for v in value) + ']'
    if hasattr(value, 'to_json'):
        return dumps(value.to_json())
    raise TypeError('Cannot serialize {0!r}.'.format(type(value)))


def content_hash(instance):
    """Return the SHA-1 hex digest of the serialized instance."""
    return sha1(dumps(instance).encode('utf-8')).hexdigest()


def report_dir(out=None):
    """Return the report directory.

    ``BJ_REPORT_DIR`` in the environment wins over ``out``, which wins over
    ``BJ_SYMMETRY_REPORT_DIR``.
    """
    return (os.environ.get('BJ_REPORT_DIR') or out or
            current_config['BJ_SYMMETRY_REPORT_DIR'])


def effective_tolerances():
    """Return the full tolerance set in effect."""
    tolerances = dict(config.BJ_SYMMETRY_TOLERANCES)
    tolerances.update(current_config['BJ_SYMMETRY_TOLERANCES'])
    return tolerances


def document(payload, run):
    """Embed the run settings and the tolerance set into ``payload``."""
    data = dict(payload)
    data.setdefault('config', run.model_dump())
    data.setdefault('tolerances', effective_tolerances())
    return data


def write_report(prefix, instance, payload, out=None):
    """Write ``payload`` to ``<dir>/<prefix>-<hash>.json``.

    :param instance: The input the report is about; its content hash names
        the file.
    :returns: The path of the written file.
    """
    directory = report_dir(out)
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, '{0}-{1}.json'.format(
        prefix, content_hash(instance)))
    with open(path, 'w', encoding='utf-8') as fp:
        fp.write(dumps(payload))
        fp.write('\n')
    return path


def write_profile(path, grid, values):
    """Write a ``lambda,norm`` CSV profile."""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', newline='', encoding='utf-8') as fp:
        writer = csv.writer(fp, lineterminator='\n')
        writer.writerow(['lambda', 'norm'])
        for t, value in zip(grid, values):
            writer.writerow([FLOAT_FORMAT % t, FLOAT_FORMAT % value])
    return path
