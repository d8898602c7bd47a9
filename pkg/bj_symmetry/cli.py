# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Command line interface.

Every command prints a JSON document on standard output. Exit codes:

* ``0``: evaluation completed, witness found or suite passed;
* ``1``: a suite failed;
* ``2``: invalid input, unsupported space or failed precondition;
* ``3``: a search budget ran out (inconclusive).

.. code-block:: console

    $ bj-symmetry orth --space l1:2 --x 1,0 --y 0.5,1 --method both
    $ bj-symmetry generate operator --domain l2:2 --seed 5 --output T.json
    $ bj-symmetry falsify left --op T.json --budget 100 --out reports
    $ bj-symmetry verify lemma-2.5 --trials 100
"""

import json
import logging
import os
from functools import wraps

import click
import numpy as np
from flask import Flask

from .errors import InputError, NotFoundError, PreconditionError, \
    UnsupportedSpaceError
from .ext import BJSymmetry
from .operators import APPROXIMATE, AUTO, EXACT, LinearOperator, \
    norm_attainment_set, op_bj_orthogonal_numeric, op_bj_orthogonal_via_MT, \
    operator_norm
from .oracles import operator_profile, vector_profile
from .orthogonality import ANALYTIC, BOTH, LEFT, METHODS, MINUS, \
    NOT_SYMMETRIC, NUMERIC, PLUS, RIGHT, bj_orthogonal, in_cone, \
    mutually_orthogonal_pair, point_left_symmetric, point_right_symmetric
from .proxies import current_logger
from .reports import document, dumps, report_dir, write_profile, write_report
from .schemas import RunConfig, parse_space
from .spaces import SUM1, is_smooth_point, sample_unit_sphere
from .suites import FAIL, INCONCLUSIVE, verify_theorem
from .symmetry import classify_left_symmetric_direct_sum, \
    classify_left_symmetric_from_l1, falsify_left_symmetric_op, \
    falsify_right_symmetric_op

EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_INCONCLUSIVE = 3

ATTAINMENT = 'attainment'


def create_app():
    """Create a Flask application with the extension initialized."""
    app = Flask('bj_symmetry')
    BJSymmetry(app)
    return app


def error_handler(f):
    """Exit with code 2 and a message on standard error on input errors."""
    @wraps(f)
    def inner(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except (InputError, UnsupportedSpaceError) as e:
            click.echo('Error: {0}'.format(e), err=True)
        except PreconditionError as e:
            click.echo('Error: precondition failed: {0}'.format(e.condition),
                       err=True)
        click.get_current_context().exit(EXIT_INPUT)
    return inner


class SpaceType(click.ParamType):
    """A space selector or space JSON document."""

    name = 'space'

    def convert(self, value, param, ctx):
        """Parse the selector."""
        try:
            return parse_space(value)
        except InputError as e:
            self.fail(str(e), param, ctx)


class VectorType(click.ParamType):
    """Comma separated coordinates."""

    name = 'csv'

    def convert(self, value, param, ctx):
        """Parse the coordinates."""
        try:
            return np.array([float(v) for v in value.split(',')])
        except ValueError:
            self.fail('{0!r} is not a list of numbers.'.format(value),
                      param, ctx)


SPACE = SpaceType()
VECTOR = VectorType()


def _tolerance_overrides(ctx, param, value):
    overrides = {}
    for item in value:
        name, sep, number = item.partition('=')
        try:
            if not sep:
                raise ValueError(item)
            overrides[name] = float(number)
        except ValueError:
            raise click.BadParameter(
                '{0!r} is not NAME=VALUE.'.format(item))
    return overrides


def load_operator(path):
    """Read an operator JSON file."""
    try:
        with open(path, encoding='utf-8') as fp:
            data = json.load(fp)
    except (OSError, ValueError) as e:
        raise InputError('Cannot read operator file {0}: {1}'.format(
            path, e))
    return LinearOperator.from_json(data)


def _echo(data):
    click.echo(dumps(data))


def _persist(prefix, instance, payload, out):
    """Write a report, logging instead of failing when that is impossible."""
    try:
        path = write_report(prefix, instance, payload, out)
    except OSError:
        current_logger.exception('Could not write report to %s.',
                                 report_dir(out))
        return None
    click.echo('Report written to {0}'.format(path), err=True)
    return path


@click.group()
@click.option('--debug', is_flag=True, help='Log debug records.')
@click.pass_context
def cli(ctx, debug):
    """Birkhoff-James orthogonality and symmetry toolkit."""
    app = ctx.obj if isinstance(ctx.obj, Flask) else create_app()
    if debug:
        app.logger.setLevel(logging.DEBUG)
    ctx.obj = app
    ctx.with_resource(app.app_context())


def _cone(space, x, y, sign, eps, method):
    cone_method = ANALYTIC if method == ANALYTIC and not eps else NUMERIC
    holds = in_cone(space, x, y, sign, eps=eps, method=cone_method)
    return {'in_cone': holds, 'cone': sign, 'eps': eps,
            'method': cone_method}


@cli.command()
@click.option('--space', type=SPACE, required=True)
@click.option('--x', 'x', type=VECTOR, required=True)
@click.option('--y', 'y', type=VECTOR, required=True)
@click.option('--method', type=click.Choice(METHODS), default=ANALYTIC,
              show_default=True)
@click.option('--eps', type=float, default=None,
              help='Test the cone of x instead of orthogonality.')
@click.option('--cone', type=click.Choice([PLUS, MINUS]), default=None)
@error_handler
def orth(space, x, y, method, eps, cone):
    """Decide whether X is orthogonal to Y."""
    if eps is not None or cone is not None:
        _echo(_cone(space, x, y, cone or PLUS, eps or 0.0, method))
        return
    _echo(bj_orthogonal(space, x, y, method=method).to_json())


@cli.command()
@click.option('--space', type=SPACE, required=True)
@click.option('--x', 'x', type=VECTOR, required=True)
@click.option('--y', 'y', type=VECTOR, required=True)
@click.option('--sign', type=click.Choice([PLUS, MINUS]), default=PLUS,
              show_default=True)
@click.option('--eps', type=float, default=0.0, show_default=True)
@click.option('--method', type=click.Choice([ANALYTIC, NUMERIC]),
              default=NUMERIC, show_default=True)
@error_handler
def cone(space, x, y, sign, eps, method):
    """Decide whether Y lies in the plus or minus EPS-cone of X."""
    _echo(_cone(space, x, y, sign, eps, method))


@cli.command()
@click.option('--op', 'path', type=click.Path(dir_okay=False),
              required=True)
@click.option('--method', type=click.Choice([AUTO, EXACT, APPROXIMATE]),
              default=AUTO, show_default=True)
@click.option('--attainment/--no-attainment', default=False,
              help='Also report the norm attainment set.')
@click.option('--seed', type=click.IntRange(min=0), default=0)
@error_handler
def opnorm(path, method, attainment, seed):
    """Compute the operator norm."""
    operator = load_operator(path)
    value = operator_norm(operator, method=method)
    data = {'norm': value.value, 'exactness': value.exactness}
    if attainment:
        data['attainment'] = norm_attainment_set(operator,
                                                 seed=seed).to_json()
    _echo(data)


@cli.command()
@click.option('--op', 'path', type=click.Path(dir_okay=False),
              required=True, help='The operator T.')
@click.option('--other', type=click.Path(dir_okay=False), required=True,
              help='The operator A.')
@click.option('--method', type=click.Choice([NUMERIC, ATTAINMENT, BOTH]),
              default=NUMERIC, show_default=True)
@click.option('--seed', type=click.IntRange(min=0), default=0)
@error_handler
def oporth(path, other, method, seed):
    """Decide whether T is orthogonal to A."""
    first = load_operator(path)
    second = load_operator(other)
    if method == NUMERIC:
        _echo(op_bj_orthogonal_numeric(first, second).to_json())
    elif method == ATTAINMENT:
        _echo(op_bj_orthogonal_via_MT(first, second, seed=seed).to_json())
    else:
        numeric = op_bj_orthogonal_numeric(first, second)
        via = op_bj_orthogonal_via_MT(first, second, seed=seed)
        _echo({'numeric': numeric.to_json(), 'attainment': via.to_json(),
               'agree': numeric.orthogonal == via.orthogonal})


@cli.command('classify-point')
@click.option('--space', type=SPACE, required=True)
@click.option('--x', 'x', type=VECTOR, required=True)
@click.option('--budget', type=click.IntRange(min=1), default=None)
@click.option('--seed', type=click.IntRange(min=0), default=0)
@error_handler
def classify_point(space, x, budget, seed):
    """Search left and right symmetry witnesses of the point X."""
    left = point_left_symmetric(space, x, budget, seed)
    right = point_right_symmetric(space, x, budget, seed)
    _echo({'smooth': bool(is_smooth_point(space, x)),
           'left': left.to_json(), 'right': right.to_json()})


@cli.command('classify-op')
@click.option('--op', 'path', type=click.Path(dir_okay=False),
              required=True)
@click.option('--budget', type=click.IntRange(min=1), default=None)
@click.option('--seed', type=click.IntRange(min=0), default=0)
@error_handler
def classify_op(path, budget, seed):
    """Classify left symmetry of an operator on l1 or on X +1 R."""
    operator = load_operator(path)
    if operator.domain.kind == SUM1:
        verdict = classify_left_symmetric_direct_sum(operator, budget, seed)
    else:
        verdict = classify_left_symmetric_from_l1(operator, budget, seed)
    _echo(verdict.to_json())


@cli.command()
@click.argument('direction', type=click.Choice([LEFT, RIGHT]))
@click.option('--op', 'path', type=click.Path(dir_okay=False),
              required=True)
@click.option('--budget', type=click.IntRange(min=1), default=None)
@click.option('--seed', type=click.IntRange(min=0), default=0)
@click.option('--out', type=click.Path(file_okay=False), default=None,
              help='Report directory.')
@click.pass_context
@error_handler
def falsify(ctx, direction, path, budget, seed, out):
    """Search a witness against left or right symmetry of an operator."""
    operator = load_operator(path)
    run = RunConfig.load(seed=seed, budget=budget, out=out)
    falsifier = (falsify_left_symmetric_op if direction == LEFT else
                 falsify_right_symmetric_op)
    report = falsifier(operator, run.budget, run.seed)
    payload = document(report.to_json(), run)
    instance = {'direction': direction, 'operator': operator.to_json(),
                'config': payload['config']}
    _persist('falsify', instance, payload, run.out)
    _echo(payload)
    if report.verdict != NOT_SYMMETRIC:
        ctx.exit(EXIT_INCONCLUSIVE)


@cli.command()
@click.argument('suite_id')
@click.option('--trials', type=click.IntRange(min=1), default=None)
@click.option('--seed', type=click.IntRange(min=0), default=0)
@click.option('--spaces', multiple=True,
              help='Space or DOMAIN->CODOMAIN selector, repeatable.')
@click.option('--budget', type=click.IntRange(min=1), default=None)
@click.option('--tolerance', 'tolerances', multiple=True,
              callback=_tolerance_overrides,
              help='Tolerance override NAME=VALUE, repeatable.')
@click.option('--out', type=click.Path(file_okay=False), default=None,
              help='Report directory.')
@click.pass_context
@error_handler
def verify(ctx, suite_id, trials, seed, spaces, budget, tolerances, out):
    """Run the verification suite SUITE_ID."""
    run = RunConfig.load(seed=seed, trials=trials, budget=budget,
                         spaces=list(spaces) or None,
                         tolerances=tolerances or None, out=out)
    report = verify_theorem(suite_id, run)
    payload = report.to_json()
    _persist('verify', {'theorem': payload['theorem'],
                        'config': payload['config']},
             payload, run.out)
    _echo(payload)
    if report.status == FAIL:
        ctx.exit(EXIT_FAIL)
    if report.status == INCONCLUSIVE:
        ctx.exit(EXIT_INCONCLUSIVE)


@cli.group()
def generate():
    """Generate instance files."""


def _write(data, output):
    if output is None:
        _echo(data)
        return
    directory = os.path.dirname(output)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(output, 'w', encoding='utf-8') as fp:
        fp.write(dumps(data))
        fp.write('\n')


def random_operator(rng, domain, codomain, rank=None):
    """Draw a Gaussian operator, of the given rank when ``rank`` is set."""
    m, n = codomain.dimension, domain.dimension
    if rank is None:
        return LinearOperator(rng.standard_normal((m, n)), domain, codomain)
    if rank > min(m, n):
        raise InputError('Rank {0} exceeds the dimensions {1}x{2}.'.format(
            rank, m, n))
    matrix = rng.standard_normal((m, rank)) @ rng.standard_normal((rank, n))
    return LinearOperator(matrix, domain, codomain)


@generate.command()
@click.option('--domain', type=SPACE, required=True)
@click.option('--codomain', type=SPACE, default=None,
              help='Defaults to the domain.')
@click.option('--rank', type=click.IntRange(min=0), default=None)
@click.option('--seed', type=click.IntRange(min=0), default=0)
@click.option('--output', type=click.Path(dir_okay=False), default=None,
              help='Instance file, standard output by default.')
@click.option('--profile', type=click.Path(dir_okay=False), default=None,
              help='CSV of lambda -> ||T + lambda A|| for a random A, '
                   'which is written next to it as JSON.')
@error_handler
def operator(domain, codomain, rank, seed, output, profile):
    """Generate a random operator."""
    codomain = codomain or domain
    rng = np.random.default_rng(seed)
    first = random_operator(rng, domain, codomain, rank)
    _write(first.to_json(), output)
    if profile:
        second = random_operator(rng, domain, codomain)
        grid, values = operator_profile(first, second)
        write_profile(profile, grid, values)
        _write(second.to_json(), os.path.splitext(profile)[0] + '.json')


@generate.command('vector-pair')
@click.option('--space', type=SPACE, required=True)
@click.option('--mutual', is_flag=True,
              help='Make x and y orthogonal to each other both ways.')
@click.option('--seed', type=click.IntRange(min=0), default=0)
@click.option('--output', type=click.Path(dir_okay=False), default=None,
              help='Instance file, standard output by default.')
@click.option('--profile', type=click.Path(dir_okay=False), default=None,
              help='CSV of lambda -> ||x + lambda y||.')
@error_handler
def vector_pair(space, mutual, seed, output, profile):
    """Generate a pair of unit vectors."""
    if mutual:
        try:
            x, y = mutually_orthogonal_pair(space, seed=seed)
        except NotFoundError as e:
            click.echo('Error: {0}'.format(e), err=True)
            click.get_current_context().exit(EXIT_INCONCLUSIVE)
    else:
        x, y = sample_unit_sphere(space, seed, 2)
    _write({'space': space.to_json(), 'x': x, 'y': y}, output)
    if profile:
        write_profile(profile, *vector_profile(space, x, y))
