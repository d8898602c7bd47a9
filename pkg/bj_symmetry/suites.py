# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Seeded verification suites.

A suite runs a number of independent trials, each with its own generator
``default_rng([seed, index])``, and classifies every trial as

* ``pass``: the tested instance behaves as the theorem predicts;
* ``fail``: a verified counterexample to the tested instance, which points
  at an implementation bug;
* ``inconclusive``: a budget ran out before a required witness was found.

The suite passes when no trial failed and none was inconclusive. Suites are
registered through ``BJ_SYMMETRY_SUITES``:

.. code-block:: python

    BJ_SYMMETRY_SUITES = dict(
        BJ_SYMMETRY_SUITES,
        mine='mypackage.suites:MySuite',
    )
"""

from contextlib import contextmanager
from dataclasses import dataclass, field

import numpy as np
from flask import Flask, current_app, has_app_context

from . import config
from .errors import InputError, UnknownSuiteError
from .ext import BJSymmetry, _BJSymmetryState
from .operators import LinearOperator, embed_gamma, hyperplane_operator, \
    is_smooth_operator, norm_attainment_set, op_bj_orthogonal_numeric, \
    op_bj_orthogonal_via_MT, operator_norm, operator_right_companion, \
    rank_one
from .oracles import confirms_not_orthogonal, confirms_orthogonal
from .orthogonality import LEFT, NOT_SYMMETRIC, WITNESS_FACTOR, \
    bj_orthogonal, james_left_companion, james_right_companion, partners, \
    point_left_symmetric, point_right_symmetric
from .proxies import current_config, current_logger, tolerance
from .schemas import RunConfig
from .spaces import Functional, SpaceDescriptor, VectorInSpace, dual_norm, \
    is_smooth_point, norming_functionals, norms, sphere_columns
from .symmetry import COORDINATE_VIOLATION, KERNEL_VIOLATION, \
    LEFT_SYMMETRY_VIOLATION, NO, YES, check_minus_cone_lemma, \
    classify_left_symmetric_direct_sum, classify_left_symmetric_from_l1, \
    confirms_witness, dim2_extreme_check, falsify_left_symmetric_op, \
    falsify_right_symmetric_op, kernel_identity_test, spectral_instance_test

PASS = 'pass'
FAIL = 'fail'
INCONCLUSIVE = 'inconclusive'

_EXPONENT_PAIRS = tuple(
    'lp:{0}:3->lp:{1}:3'.format(p, q)
    for p in ('1.5', '2', '3') for q in ('1.5', '2', '3'))


@dataclass
class Trial(object):
    """Outcome of one trial."""

    index: int
    status: str
    family: str
    details: dict = field(default_factory=dict)
    witness: object = None

    def to_json(self):
        """Return the JSON-compatible representation."""
        return {
            'index': self.index,
            'status': self.status,
            'family': self.family,
            'details': self.details,
            'witness': self.witness,
        }


@dataclass
class SuiteReport(object):
    """Aggregated outcome of a suite run."""

    theorem: str
    config: dict
    trials: list
    witnesses: list
    passed: bool
    status: str
    tolerances: dict
    seed: int

    @classmethod
    def build(cls, suite_id, run, trials):
        """Aggregate trials in index order."""
        trials = sorted(trials, key=lambda t: t.index)
        statuses = set(t.status for t in trials)
        if FAIL in statuses:
            status = FAIL
        elif INCONCLUSIVE in statuses:
            status = INCONCLUSIVE
        else:
            status = PASS
        tolerances = dict(config.BJ_SYMMETRY_TOLERANCES)
        tolerances.update(current_config['BJ_SYMMETRY_TOLERANCES'])
        witnesses = [{'index': t.index, 'witness': t.witness}
                     for t in trials if t.witness is not None]
        return cls(suite_id, run.model_dump(), trials, witnesses,
                   status == PASS, status, tolerances, run.seed)

    def to_json(self):
        """Return the JSON-compatible representation."""
        return {
            'theorem': self.theorem,
            'config': self.config,
            'trials': [t.to_json() for t in self.trials],
            'witnesses': self.witnesses,
            'pass': self.passed,
            'status': self.status,
            'tolerances': self.tolerances,
            'seed': self.seed,
        }


class Suite(object):
    """Base class for a verification suite.

    Subclasses implement :meth:`trial`, which receives the run settings, the
    trial index, its random generator and the ``(domain, codomain)`` family
    of the trial.
    """

    trials = 20
    """Default number of trials."""

    spaces = ('l2:3',)
    """Default family selectors, used in rotation."""

    per_family = False
    """Whether the trial count applies to each family rather than in total."""

    def __init__(self, suite_id):
        """Initialize a suite identifier."""
        self.suite_id = suite_id

    def __call__(self, run):
        """Proxy to ``self.run`` method."""
        return self.run(run)

    def run(self, run):
        """Run all trials of ``run`` (a :class:`RunConfig`)."""
        families = run.families(self.spaces)
        count = run.trials or self.trials
        if self.per_family:
            count *= len(families)
        outcomes = []
        for index in range(count):
            domain, codomain = families[index % len(families)]
            rng = np.random.default_rng([run.seed, index])
            status, details, witness = self.trial(run, index, rng, domain,
                                                  codomain)
            family = str(domain) if domain == codomain else '{0}->{1}'.format(
                domain, codomain)
            outcomes.append(Trial(index, status, family, details or {},
                                  witness))
        return SuiteReport.build(self.suite_id, run, outcomes)

    def trial(self, run, index, rng, domain, codomain):
        """Return ``(status, details, witness)`` of one trial."""
        raise NotImplementedError()


def _subseed(rng):
    return int(rng.integers(2 ** 31))


def _unit(space, rng):
    return sphere_columns(space, rng, 1)[:, 0]


def _operator(rng, domain, codomain):
    return LinearOperator(
        rng.standard_normal((codomain.dimension, domain.dimension)),
        domain, codomain)


def _grey(margin, base):
    """Whether a margin is too small to call either way."""
    return margin <= WITNESS_FACTOR * tolerance('numeric') * max(1.0, base)


class PointSymmetryConsistencySuite(Suite):
    """Point symmetry and smoothness are consistent.

    Right symmetric smooth points are left symmetric. Left symmetric points
    of strictly convex spaces are right symmetric and smooth.
    """

    trials = 60
    spaces = ('l2:3', 'lp:3:2', 'lp:1.5:2', 'l1:2', 'linf:2')

    def trial(self, run, index, rng, domain, codomain):
        """Sample a point and compare both searches with smoothness."""
        space = domain
        x = _unit(space, rng)
        seed = _subseed(rng)
        smooth = bool(is_smooth_point(space, x))
        left = point_left_symmetric(space, x, run.budget, seed)
        right = point_right_symmetric(space, x, run.budget, seed)
        details = {'x': x.tolist(), 'smooth': smooth,
                   'left': left.verdict, 'right': right.verdict}
        if not left.symmetric:
            y = left.witness.coords
            if not (confirms_orthogonal(space, x, y) and
                    confirms_not_orthogonal(space, y, x)):
                return FAIL, details, left.to_json()
        if not right.symmetric:
            y = right.witness.coords
            if not (confirms_orthogonal(space, y, x) and
                    confirms_not_orthogonal(space, x, y)):
                return FAIL, details, right.to_json()
        if right.symmetric and smooth and not left.symmetric:
            return FAIL, details, left.to_json()
        if space.strictly_convex and left.symmetric:
            if not right.symmetric:
                return FAIL, details, right.to_json()
            if not smooth:
                return FAIL, details, None
        return PASS, details, None


class AttainmentCharacterizationSuite(Suite):
    """``T ⊥ A`` exactly when ``M_T`` carries plus and minus cone points."""

    trials = 500
    per_family = True
    spaces = _EXPONENT_PAIRS + ('l1:3->l2:3',)

    def trial(self, run, index, rng, domain, codomain):
        """Compare the definitional test with the ``M_T`` test."""
        first = _operator(rng, domain, codomain)
        second = _operator(rng, domain, codomain)
        seed = _subseed(rng)
        if index % 2:
            # Shift onto the orthogonality boundary.
            second = second.combine(
                first, operator_right_companion(first, second, seed=seed))
        definitional = op_bj_orthogonal_numeric(first, second)
        via = op_bj_orthogonal_via_MT(first, second, seed=seed)
        details = {'definitional': definitional.to_json(),
                   'attainment': via.to_json()}
        if definitional.orthogonal == via.orthogonal:
            return PASS, details, None
        base = operator_norm(first).value
        if _grey(definitional.margin, base) or _grey(via.margin, base):
            return INCONCLUSIVE, details, None
        return FAIL, details, {'T': first.to_json(), 'A': second.to_json()}


class KernelAnnihilationSuite(Suite):
    """Rank-one operators built at ``M_T`` expose ``T`` as not left symmetric.

    The operators ``f(.) Ty`` are orthogonal from ``T`` but not to it.
    """

    trials = 50
    spaces = ('l2:3', 'lp:3:3', 'lp:1.5:3->l2:3')

    def trial(self, run, index, rng, domain, codomain):
        """Build ``A = f(.) Ty`` and check both relations."""
        operator = _operator(rng, domain, codomain)
        seed = _subseed(rng)
        attainment = norm_attainment_set(operator, seed=seed)
        x = attainment.points[0].coords
        for y in partners(domain, x, 8, seed, LEFT):
            image = operator.matrix @ y
            if float(norms(codomain, image)) > tolerance('rank'):
                break
        else:
            return INCONCLUSIVE, {'reason': 'Ty = 0'}, None
        try:
            functional = norming_functionals(domain, y).vanishing_member(x)
        except InputError:
            return INCONCLUSIVE, {'reason': 'no vanishing functional'}, None
        witness = rank_one(functional, VectorInSpace(image, codomain))
        holds = op_bj_orthogonal_numeric(operator, witness)
        details = {'orthogonal': holds.to_json()}
        if not holds.orthogonal:
            return FAIL, details, witness.to_json()
        if confirms_witness((operator, witness), (witness, operator)):
            return PASS, details, witness.to_json()
        return INCONCLUSIVE, details, None


class MinusConeSuite(Suite):
    """``a u`` leaves the minus cone of ``a v + b w`` when ``ab > 0``."""

    trials = 1000
    spaces = ('l2:3', 'lp:3:3')

    def trial(self, run, index, rng, domain, codomain):
        """Draw ``u``, ``v ⊥ u``, ``t``, ``a`` and ``b`` and test."""
        space = domain
        u = _unit(space, rng)
        z = rng.standard_normal(space.dimension)
        v = z + james_left_companion(space, u, z) * u
        v = v / float(norms(space, v))
        t = float(rng.uniform(0.05, 0.95))
        sign = float(rng.choice([-1.0, 1.0]))
        a = sign * float(rng.uniform(0.25, 2.0))
        b = sign * float(rng.uniform(0.25, 2.0))
        holds = check_minus_cone_lemma(space, u, v, a, b, t)
        details = {'u': u.tolist(), 'v': v.tolist(), 'a': a, 'b': b, 't': t}
        return (PASS if holds else FAIL), details, None


class LeftSymmetricZeroSuite(Suite):
    """Strictly convex spaces admit no non-zero left symmetric operators.

    Every fourth trial is rank one with ``T(H) = 0``.
    """

    trials = 100
    spaces = _EXPONENT_PAIRS

    def trial(self, run, index, rng, domain, codomain):
        """Falsify left symmetry of a random non-zero operator."""
        if index % 4 == 3:
            x = _unit(domain, rng)
            functional = norming_functionals(domain, x).canonical()
            w = VectorInSpace(_unit(codomain, rng), codomain)
            operator = rank_one(functional, w)
        else:
            operator = _operator(rng, domain, codomain)
        report = falsify_left_symmetric_op(operator, run.budget,
                                           _subseed(rng))
        details = {'strategy': report.strategy,
                   'trials_used': report.trials_used}
        if report.verdict == NOT_SYMMETRIC:
            return PASS, details, report.to_json()
        return INCONCLUSIVE, details, None


class RankOneEmbeddingSuite(Suite):
    """``y -> f(.) y`` is isometric and preserves orthogonality."""

    trials = 200
    spaces = ('l2:3', 'lp:3:3->lp:1.5:3', 'l1:3->lp:3:3')

    def trial(self, run, index, rng, domain, codomain):
        """Compare norms and orthogonality of vectors and operators."""
        coords = rng.standard_normal(domain.dimension)
        functional = Functional(coords / dual_norm(domain, coords), domain)
        z = rng.standard_normal(codomain.dimension)
        w = rng.standard_normal(codomain.dimension)
        if index % 2:
            w = w + james_right_companion(codomain, z, w) * z
        first = embed_gamma(functional, VectorInSpace(z, codomain))
        second = embed_gamma(functional, VectorInSpace(w, codomain))
        size = float(norms(codomain, z))
        gap = abs(operator_norm(first).value - size)
        vector = bj_orthogonal(codomain, z, w)
        operator = op_bj_orthogonal_numeric(first, second)
        details = {'norm_gap': gap, 'vector': vector.orthogonal,
                   'operator': operator.orthogonal}
        if gap > tolerance('unit') * max(1.0, size):
            return FAIL, details, None
        if vector.orthogonal == operator.orthogonal:
            return PASS, details, None
        if _grey(operator.margin, size):
            return INCONCLUSIVE, details, None
        return FAIL, details, {'z': z.tolist(), 'w': w.tolist()}


def _expected(verdict, violation):
    """Whether a classifier verdict matches how ``T`` was built.

    ``violation`` is ``None`` for operators of the left symmetric shape, whose
    direction ``w`` may still fail to be left symmetric.
    """
    if violation is None:
        return (verdict.left_symmetric == YES or
                verdict.violation == LEFT_SYMMETRY_VIOLATION)
    return verdict.left_symmetric == NO and verdict.violation == violation


def _cross_check(verdict, operator, budget, seed):
    """Compare a classifier verdict with the left falsifier."""
    report = falsify_left_symmetric_op(operator, budget, seed)
    details = {'classifier': verdict.to_json(), 'falsifier': report.verdict}
    if verdict.left_symmetric == YES:
        if report.verdict == NOT_SYMMETRIC:
            return FAIL, details, report.to_json()
        return PASS, details, None
    if report.verdict == NOT_SYMMETRIC:
        return PASS, details, report.to_json()
    return INCONCLUSIVE, details, None


class DirectSumSuite(Suite):
    """Left symmetric operators on ``X ⊕1 R`` vanish on ``X``."""

    trials = 40
    spaces = ('l2:2->l2:2', 'lp:3:2->l2:2')

    def trial(self, run, index, rng, domain, codomain):
        """Classify ``s w`` (even trials) or ``(g(x) + s) w`` (odd ones)."""
        space = SpaceDescriptor.sum1(domain, SpaceDescriptor.lp(2, 1))
        w = _unit(codomain, rng)
        f = np.zeros(space.dimension)
        f[-1] = 1.0
        if index % 2:
            g = rng.standard_normal(domain.dimension)
            f[:-1] = 0.5 * g / dual_norm(domain, g)
        operator = LinearOperator(np.outer(w, f), space, codomain)
        verdict = classify_left_symmetric_direct_sum(operator, run.budget,
                                                     _subseed(rng))
        if not _expected(verdict, KERNEL_VIOLATION if index % 2 else None):
            return FAIL, {'classifier': verdict.to_json()}, None
        return _cross_check(verdict, operator, run.budget, _subseed(rng))


class L1ClassificationSuite(Suite):
    """Left symmetric operators on l1 are ``±e_k^*(.) w``."""

    trials = 40
    spaces = ('l1:3->l2:3', 'l1:2->l2:2')

    def trial(self, run, index, rng, domain, codomain):
        """Classify coordinate (even) or spread (odd) rank-one operators."""
        n = domain.dimension
        w = _unit(codomain, rng)
        f = np.zeros(n)
        if index % 2:
            active = rng.choice(n, size=2, replace=False)
            f[active] = rng.uniform(0.3, 1.0, size=2) * rng.choice(
                [-1.0, 1.0], size=2)
        else:
            f[int(rng.integers(n))] = float(rng.choice([-1.0, 1.0]))
        operator = LinearOperator(np.outer(w, f), domain, codomain)
        verdict = classify_left_symmetric_from_l1(operator, run.budget,
                                                  _subseed(rng))
        if not _expected(verdict,
                         COORDINATE_VIOLATION if index % 2 else None):
            return FAIL, {'classifier': verdict.to_json()}, None
        return _cross_check(verdict, operator, run.budget, _subseed(rng))


class SmoothNotRightSymmetricSuite(Suite):
    """Operators that are smooth points are not right symmetric here.

    Both spaces are smooth and strictly convex.
    """

    trials = 50
    spaces = ('l2:3', 'lp:3:3', 'lp:1.5:3->l2:3')

    def trial(self, run, index, rng, domain, codomain):
        """Falsify right symmetry of a random smooth operator."""
        operator = _operator(rng, domain, codomain)
        seed = _subseed(rng)
        if not is_smooth_operator(operator, seed):
            return PASS, {'smooth': False}, None
        report = falsify_right_symmetric_op(operator, run.budget, seed)
        details = {'smooth': True, 'strategy': report.strategy}
        if report.verdict == NOT_SYMMETRIC:
            return PASS, details, report.to_json()
        return INCONCLUSIVE, details, None


class RightSymmetricImageSuite(Suite):
    """When ``M_T = {±x}``, a right witness of ``Tx`` lifts to ``T``."""

    trials = 50
    spaces = ('lp:3:2', 'l2:3->lp:3:3', 'lp:1.5:3->lp:3:3')

    def trial(self, run, index, rng, domain, codomain):
        """Lift a right witness of ``Tx`` to a hyperplane operator."""
        operator = _operator(rng, domain, codomain)
        seed = _subseed(rng)
        attainment = norm_attainment_set(operator, seed=seed)
        if attainment.entire_sphere or attainment.card != 2:
            return PASS, {'card': len(attainment.points)}, None
        x = attainment.points[0]
        point = point_right_symmetric(codomain, operator.matrix @ x.coords,
                                      run.budget, seed)
        if point.verdict != NOT_SYMMETRIC:
            return PASS, {'image': point.verdict}, None
        witness = hyperplane_operator(x, point.witness)
        holds = op_bj_orthogonal_numeric(witness, operator)
        details = {'image': point.verdict, 'orthogonal': holds.to_json()}
        if not holds.orthogonal:
            return FAIL, details, witness.to_json()
        if confirms_witness((witness, operator), (operator, witness)):
            return PASS, details, witness.to_json()
        return INCONCLUSIVE, details, None


class Dim2ExtremeSuite(Suite):
    """Right symmetric operators on a plane attain the norm twice.

    The two maximizers are linearly independent.
    """

    trials = 30
    spaces = ('l2:2', 'lp:3:2', 'lp:1.5:2->l2:2')

    def trial(self, run, index, rng, domain, codomain):
        """Check random operators and, every fifth trial, a multiple of I."""
        if index % 5 == 4 and domain == codomain:
            operator = LinearOperator.identity(domain).scaled(
                float(rng.uniform(0.5, 2.0)))
        else:
            operator = _operator(rng, domain, codomain)
        report = dim2_extreme_check(operator, run.budget, _subseed(rng))
        witness = report.witness.to_json() if report.witness else None
        if report.passed:
            return PASS, report.details, witness
        if report.witness is not None:
            return INCONCLUSIVE, report.details, None
        return FAIL, report.details, None


class SpectralNullitySuite(Suite):
    """Singular operators with ``||T||`` in the spectrum lack right symmetry.

    The norm is the modulus of an eigenvalue.
    """

    trials = 30
    spaces = ('l2:3', 'lp:3:3', 'lp:1.5:3')

    def trial(self, run, index, rng, domain, codomain):
        """Test ``s P diag(1, 0, d) P^T`` for a signed permutation ``P``."""
        n = domain.dimension
        diagonal = np.zeros(n)
        diagonal[0] = 1.0
        diagonal[2:] = rng.uniform(-0.9, 0.9, size=n - 2)
        permutation = np.eye(n)[rng.permutation(n)] * rng.choice(
            [-1.0, 1.0], size=n)[:, None]
        matrix = float(rng.uniform(0.5, 2.0)) * (
            permutation @ np.diag(diagonal) @ permutation.T)
        operator = LinearOperator(matrix, domain, domain)
        report = spectral_instance_test(operator, run.budget, _subseed(rng))
        witness = report.witness.to_json() if report.witness else None
        if report.passed:
            return PASS, report.details, witness
        return INCONCLUSIVE, report.details, None


class IdentityKernelSuite(Suite):
    """For singular ``T``, ``I`` is orthogonal to ``T`` and refutes symmetry.

    Either ``T`` is orthogonal to ``I`` too or ``I`` is a right witness.
    """

    trials = 200
    spaces = ('lp:1.5:3', 'l2:3', 'lp:3:3')

    def trial(self, run, index, rng, domain, codomain):
        """Test a random operator of rank ``n - 1``."""
        n = domain.dimension
        matrix = rng.standard_normal((n, n - 1)) @ rng.standard_normal(
            (n - 1, n))
        operator = LinearOperator(matrix, domain, domain)
        report = kernel_identity_test(operator)
        witness = report.witness.to_json() if report.witness else None
        if report.passed:
            return PASS, report.details, witness
        if not report.details['identity_orthogonal']['orthogonal']:
            return FAIL, report.details, None
        return INCONCLUSIVE, report.details, None


@contextmanager
def _tolerances(overrides):
    """Apply tolerance overrides on the current or a temporary app."""
    if overrides and not has_app_context():
        app = Flask('bj_symmetry')
        BJSymmetry(app)
        with app.app_context():
            with _tolerances(overrides):
                yield
        return
    if not overrides:
        yield
        return
    app_config = current_app.config
    saved = app_config.get('BJ_SYMMETRY_TOLERANCES')
    app_config['BJ_SYMMETRY_TOLERANCES'] = dict(
        saved or config.BJ_SYMMETRY_TOLERANCES, **overrides)
    try:
        yield
    finally:
        if saved is None:
            app_config.pop('BJ_SYMMETRY_TOLERANCES')
        else:
            app_config['BJ_SYMMETRY_TOLERANCES'] = saved


def _state():
    if has_app_context() and 'bj-symmetry' in current_app.extensions:
        return current_app.extensions['bj-symmetry']
    return _BJSymmetryState(None, current_config['BJ_SYMMETRY_SUITES'],
                            current_config['BJ_SYMMETRY_SUITE_ALIASES'])


def verify_theorem(suite_id, run=None):
    """Run the suite registered as ``suite_id``.

    Descriptive aliases such as ``minus-cone-lemma`` resolve to their id.

    :param run: A :class:`RunConfig` or a mapping validated into one.
    :raises UnknownSuiteError: When no suite has that id.
    :returns: A :class:`SuiteReport`.
    """
    state = _state()
    resolved = state.resolve(suite_id)
    if resolved is None:
        raise UnknownSuiteError(
            'Unknown suite {0!r}; known: {1}.'.format(
                suite_id, ', '.join(sorted(state.suites))))
    suite_id = resolved
    if not isinstance(run, RunConfig):
        run = RunConfig.load(run)
    with _tolerances(run.tolerances):
        report = state.suites[suite_id](run)
    current_logger.info('Suite %s finished with status %s.', suite_id,
                        report.status)
    return report
