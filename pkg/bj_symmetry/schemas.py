# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Run settings and the selector syntax of spaces.

A space selector is ``lp:P:N``, ``l1:N``, ``l2:N``, ``linf:N`` or a JSON
document as accepted by :meth:`SpaceDescriptor.from_json`. An operator
family is ``DOMAIN->CODOMAIN``; a single space stands for ``X->X``.

>>> str(parse_space('lp:3:2'))
'l3^2'
>>> [str(s) for s in parse_family('l1:3->l2:2')]
['l1^3', 'l2^2']
"""

import json
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, \
    PositiveFloat, PositiveInt, ValidationError, field_validator

from . import config
from .errors import InputError
from .spaces import SpaceDescriptor

_SHORTHANDS = {'l1': 1, 'l2': 2, 'linf': 'inf'}


def parse_space(selector):
    """Return the :class:`SpaceDescriptor` named by ``selector``."""
    selector = selector.strip()
    if selector.startswith('{'):
        try:
            return SpaceDescriptor.from_json(json.loads(selector))
        except ValueError as exc:
            raise InputError('Malformed space JSON: {0}'.format(exc))
    parts = selector.split(':')
    try:
        if parts[0] == 'lp' and len(parts) == 3:
            return SpaceDescriptor.lp(_exponent(parts[1]), int(parts[2]))
        if parts[0] in _SHORTHANDS and len(parts) == 2:
            return SpaceDescriptor.lp(_exponent(_SHORTHANDS[parts[0]]),
                                      int(parts[1]))
    except ValueError:
        pass
    raise InputError('Unknown space selector {0!r}.'.format(selector))


def _exponent(value):
    if str(value).lower() in ('inf', 'infinity'):
        return float('inf')
    return float(value)


def parse_family(selector):
    """Return ``(domain, codomain)`` for an operator family selector."""
    if '->' in selector:
        domain, codomain = selector.split('->', 1)
        return parse_space(domain), parse_space(codomain)
    space = parse_space(selector)
    return space, space


class RunConfig(BaseModel):
    """Settings of a falsifier or suite run.

    ``trials``, ``budget`` and ``spaces`` default to the choices of the suite
    being run.
    """

    model_config = ConfigDict(extra='forbid', frozen=True)

    seed: NonNegativeInt = Field(0, description='Root of all sub-seeds.')
    trials: Optional[PositiveInt] = Field(
        None, description='Number of trials of a suite.')
    budget: Optional[PositiveInt] = Field(
        None, description='Candidate trials per falsifier strategy.')
    tolerances: Dict[str, PositiveFloat] = Field(
        default_factory=dict, description='Overrides of named tolerances.')
    spaces: Optional[List[str]] = Field(
        None, description='Space or operator family selectors.')
    out: Optional[str] = Field(None, description='Report directory.')

    @field_validator('tolerances')
    @classmethod
    def known_tolerances(cls, value):
        """Reject tolerance names that are not configured."""
        unknown = sorted(set(value) - set(config.BJ_SYMMETRY_TOLERANCES))
        if unknown:
            raise ValueError('Unknown tolerances: {0}'.format(
                ', '.join(unknown)))
        return value

    @field_validator('spaces')
    @classmethod
    def valid_selectors(cls, value):
        """Parse every selector once so errors surface early."""
        for selector in value or ():
            try:
                parse_family(selector)
            except InputError as exc:
                raise ValueError(str(exc))
        return value

    @classmethod
    def load(cls, data=None, **overrides):
        """Validate ``data`` into a config, raising :class:`InputError`."""
        data = dict(data or {})
        data.update({k: v for k, v in overrides.items() if v is not None})
        try:
            return cls.model_validate(data)
        except ValidationError as exc:
            raise InputError(str(exc))

    def families(self, default):
        """Return ``(domain, codomain)`` pairs, ``default`` when unset."""
        if not self.spaces:
            return [parse_family(s) for s in default]
        return [parse_family(s) for s in self.spaces]
