# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Symmetry of operators under Birkhoff-James orthogonality.

A non-zero operator between strictly convex spaces is never left symmetric,
and most operators are not right symmetric either. The falsifiers below
build explicit witnesses ``A`` for both claims from the usual constructions:

* ``A = f(.) Ty`` where ``x`` attains the norm of ``T``, ``y ⊥ x`` and ``f``
  is a norming functional of ``y`` vanishing at ``x``;
* the two-dimensional operator ``z = a x + b y + h -> a v + b w``
  (:func:`construct_step3_witness`) when ``T`` kills everything but ``x``;
* random operators shifted by a James companion in operator space.

Every witness is re-checked by the grid oracles before it is reported.
Falsifiers never prove symmetry: an exhausted budget is reported as
``symmetric-within-budget``.
"""

import itertools
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np
from scipy.linalg import eigvals, null_space

from .errors import InputError, InternalInconsistencyError, NotFoundError, \
    PreconditionError, UnsupportedSpaceError
from .operators import LinearOperator, hyperplane_operator, \
    identity_orthogonal_to, norm_attainment_set, nullity, \
    op_bj_orthogonal_numeric, operator_left_companion, operator_norm, \
    operator_right_companion, rank_one
from .oracles import confirms_operator_not_orthogonal, \
    confirms_operator_orthogonal
from .orthogonality import ANALYTIC, LEFT, MINUS, NOT_SYMMETRIC, RIGHT, \
    SYMMETRIC, WITNESS_FACTOR, SymmetryReport, bj_orthogonal, in_cone, \
    mutually_orthogonal_pair, partners, point_left_symmetric, \
    point_right_symmetric
from .proxies import current_config, current_logger, tolerance
from .spaces import LP, SUM1, Functional, VectorInSpace, as_coords, \
    norming_functionals, norms

YES = 'yes'
NO = 'no'
ZERO_OPERATOR = 'zero-operator'

IDENTITY = 'identity'
"""Witness name of the identity operator of the domain."""

RANK_VIOLATION = 'rank(T) > 1'
COORDINATE_VIOLATION = 'f not a signed coordinate functional'
KERNEL_VIOLATION = 'X ⊄ ker f'
LEFT_SYMMETRY_VIOLATION = 'w not left symmetric'


@dataclass(frozen=True, eq=False)
class Step3Certificate(object):
    """The operator ``A`` built from ``T``, ``x``, ``y`` and ``v``.

    ``A`` sends ``x`` to ``v`` and ``y`` to ``w = (1 - t) Tx + t v`` and
    vanishes on the common kernel of the norming functionals of ``x`` and
    ``y``. The scalars satisfy::

        1 < r = ||x + y|| < 2
        (1 - t)(1 + ||T||) < eps < bound = (2 - r) / (1 + 2 r)
    """

    x: VectorInSpace
    y: VectorInSpace
    v: VectorInSpace
    r: float
    t: float
    eps: float
    w: VectorInSpace
    A: LinearOperator
    bound: float
    operator_norm: float = 1.0

    def violations(self):
        """Return the names of the inequalities that do not hold."""
        failed = []
        spread = (1.0 - self.t) * (1.0 + self.operator_norm)
        if not 1.0 < self.r < 2.0:
            failed.append('1 < r < 2')
        if not spread < self.eps < self.bound:
            failed.append('(1-t)(1+||T||) < eps < (2-r)/(1+2r)')
        gap = float(norms(self.w.space, self.w.coords - self.v.coords))
        if not gap <= spread * (1.0 + tolerance('unit')):
            failed.append('||w - v|| <= (1-t)(1+||T||)')
        return failed

    def to_json(self):
        """Return the JSON-compatible representation."""
        return {
            'x': self.x.to_json(),
            'y': self.y.to_json(),
            'v': self.v.to_json(),
            'r': self.r,
            't': self.t,
            'eps': self.eps,
            'w': self.w.to_json(),
            'A': self.A.to_json(),
            'bound': self.bound,
        }


class RankOneCertificate(NamedTuple):
    """``T = f(.) w`` with ``f`` peaking at the coordinate ``k`` (1-based)."""

    f: Functional
    w: VectorInSpace
    k: int


@dataclass(frozen=True, eq=False)
class ClassifierVerdict(object):
    """Left symmetry decided from the structure of ``T``.

    ``violation`` names the first failed condition of a ``no`` verdict;
    ``witness`` carries the point witness when ``w`` is not left symmetric.
    """

    left_symmetric: str
    certificate: RankOneCertificate = None
    violation: str = None
    witness: SymmetryReport = None

    def to_json(self):
        """Return the JSON-compatible representation."""
        certificate = None
        if self.certificate is not None:
            certificate = {
                'f': self.certificate.f.to_json(),
                'w': self.certificate.w.to_json(),
                'k': self.certificate.k,
            }
        return {
            'left_symmetric': self.left_symmetric,
            'certificate': certificate,
            'violation': self.violation,
            'witness': (self.witness.to_json()
                        if self.witness is not None else None),
        }


@dataclass(frozen=True, eq=False)
class InstanceReport(object):
    """Outcome of a single theorem instance check."""

    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    witness: SymmetryReport = None

    def __bool__(self):
        """Return whether the instance passed."""
        return self.passed

    def to_json(self):
        """Return the JSON-compatible representation."""
        return {
            'name': self.name,
            'passed': self.passed,
            'details': self.details,
            'witness': (self.witness.to_json()
                        if self.witness is not None else None),
        }


#
# Witness checks
#
def _refutes(first, second):
    """Whether ``first`` is not orthogonal to ``second`` by the margin."""
    verdict = op_bj_orthogonal_numeric(first, second)
    base = verdict.min_value + verdict.margin
    return verdict.margin > WITNESS_FACTOR * verdict.tolerance * max(1.0, base)


def confirms_witness(holds, fails, verify=True):
    """Check a symmetry witness.

    :param holds: Pair ``(P, Q)`` that must satisfy ``P ⊥ Q``.
    :param fails: Pair ``(R, S)`` with ``R`` not orthogonal to ``S``.
    :param verify: Re-check both claims with the grid oracle.
    """
    if not _refutes(*fails):
        return False
    if not op_bj_orthogonal_numeric(*holds).orthogonal:
        return False
    if verify:
        return (confirms_operator_not_orthogonal(*fails) and
                confirms_operator_orthogonal(*holds))
    return True


def _random_operator(operator, seed, index):
    rng = np.random.default_rng([seed, index])
    return LinearOperator(rng.standard_normal(operator.matrix.shape),
                          operator.domain, operator.codomain)


#
# Left symmetry
#
def falsify_left_symmetric_op(operator, budget=None, seed=0, verify=True):
    """Search ``A`` with ``T ⊥ A`` while ``A`` is not orthogonal to ``T``.

    Strategies run in order: rank-one operators ``f(.) Ty`` (``S1``), the
    two-dimensional construction on ``T/||T||`` (``S2``) and random operators
    made orthogonal by a right companion (``S3``).

    :param operator: Non-zero :class:`LinearOperator`.
    :param budget: Candidate trials for each of ``S1`` and ``S3``.
    :param verify: Re-check witnesses with the grid oracles.
    :returns: A :class:`SymmetryReport`.
    """
    if operator.is_zero:
        raise InputError('The zero operator is trivially left symmetric.')
    budget = budget or current_config['BJ_SYMMETRY_BUDGET']
    domain, codomain = operator.domain, operator.codomain
    attainment = norm_attainment_set(operator, seed=seed)
    x = attainment.points[0].coords
    scale = attainment.norm_value
    trials = 0

    def found(witness, strategy):
        current_logger.debug('Left witness from %s after %d trials.',
                             strategy, trials)
        return SymmetryReport(operator, LEFT, NOT_SYMMETRIC, witness, trials,
                              seed, strategy)

    zero_images = 0
    for y in partners(domain, x, budget, seed, LEFT):
        trials += 1
        image = operator.matrix @ y
        if float(norms(codomain, image)) <= tolerance('zero') * scale * \
                max(1.0, float(norms(domain, y))):
            zero_images += 1
            continue
        try:
            functional = norming_functionals(domain, y).vanishing_member(x)
        except InputError:
            continue
        candidate = rank_one(functional, VectorInSpace(image, codomain))
        if confirms_witness((operator, candidate), (candidate, operator),
                            verify):
            return found(candidate, 'S1')
    current_logger.debug('S1 exhausted, %d of %d images vanished.',
                         zero_images, trials)

    if domain.strictly_convex and domain.smooth and domain.dimension >= 2:
        trials += 1
        normalized = operator.scaled(1.0 / scale)
        try:
            _, y = mutually_orthogonal_pair(domain, seed, anchor=x,
                                            budget=budget)
            _, v = mutually_orthogonal_pair(codomain, seed,
                                            anchor=normalized.matrix @ x,
                                            budget=budget)
            certificate = construct_step3_witness(
                normalized, VectorInSpace(x, domain), y, v)
        except (PreconditionError, NotFoundError, InputError) as exc:
            current_logger.debug('S2 skipped: %s', exc)
        else:
            candidate = certificate.A.scaled(scale)
            if confirms_witness((operator, candidate),
                                (candidate, operator), verify):
                return found(candidate, 'S2')

    for index in range(budget):
        trials += 1
        start = _random_operator(operator, seed, index)
        shift = operator_right_companion(operator, start, seed=seed,
                                         attainment=attainment)
        candidate = start.combine(operator, shift)
        if candidate.is_zero:
            continue
        if confirms_witness((operator, candidate), (candidate, operator),
                            verify):
            return found(candidate, 'S3')

    current_logger.warning('No left witness within a budget of %d.', budget)
    return SymmetryReport(operator, LEFT, SYMMETRIC, None, trials, seed)


def construct_step3_witness(operator, x, y, v):
    """Build the operator that separates ``T ⊥ A`` from ``A ⊥ T``.

    :param operator: ``T`` with ``||T|| = 1``.
    :param x: Unit vector of ``M_T``.
    :param y: Unit vector with ``x ⊥ y`` and ``y ⊥ x``.
    :param v: Unit codomain vector with ``Tx ⊥ v`` and ``v ⊥ Tx``.
    :raises PreconditionError: Naming the first hypothesis that fails.
    :returns: A :class:`Step3Certificate`.
    """
    domain, codomain = operator.domain, operator.codomain
    if not (domain.strictly_convex and domain.smooth):
        raise PreconditionError('X strictly convex and smooth')
    value = operator_norm(operator).value
    if abs(value - 1.0) > tolerance('numeric'):
        raise PreconditionError('||T|| = 1')
    x = as_coords(domain, x.coords if isinstance(x, VectorInSpace) else x)
    y = as_coords(domain, y.coords if isinstance(y, VectorInSpace) else y)
    v = as_coords(codomain, v.coords if isinstance(v, VectorInSpace) else v)
    for name, space, vector in (('x', domain, x), ('y', domain, y),
                                ('v', codomain, v)):
        if abs(float(norms(space, vector)) - 1.0) > tolerance('unit'):
            raise PreconditionError('||{0}|| = 1'.format(name))
    image = operator.matrix @ x
    if float(norms(codomain, image)) < value * (1.0 - tolerance(
            'attainment')):
        raise PreconditionError('x ∈ M_T')
    if not (bj_orthogonal(domain, x, y) and bj_orthogonal(domain, y, x)):
        raise PreconditionError('x ⊥ y and y ⊥ x')
    if not (bj_orthogonal(codomain, image, v) and
            bj_orthogonal(codomain, v, image)):
        raise PreconditionError('Tx ⊥ v and v ⊥ Tx')
    f_x = norming_functionals(domain, x).canonical().coords
    hyperplane = null_space(f_x[None, :])
    if hyperplane.size and float(np.max(norms(
            codomain, operator.matrix @ hyperplane))) > tolerance('rank'):
        raise PreconditionError('T(H) = 0')

    r = float(norms(domain, x + y))
    if not 1.0 < r < 2.0:
        raise InternalInconsistencyError(r, '1 < r < 2')
    bound = (2.0 - r) / (1.0 + 2.0 * r)
    t = 1.0 - bound / (2.0 * (1.0 + value))
    spread = (1.0 - t) * (1.0 + value)
    eps = 0.5 * (spread + bound)
    if not spread < eps < bound:
        raise InternalInconsistencyError((spread, bound), 'non-empty bracket')
    w = (1.0 - t) * image + t * v

    f_y = norming_functionals(domain, y).canonical().coords
    rest = null_space(np.vstack([f_x, f_y]))
    basis = np.column_stack([x, y, rest])
    images = np.column_stack([v, w, np.zeros((codomain.dimension,
                                              rest.shape[1]))])
    matrix = np.linalg.solve(basis.T, images.T).T
    witness = LinearOperator(matrix, domain, codomain)
    certificate = Step3Certificate(
        VectorInSpace(x, domain), VectorInSpace(y, domain),
        VectorInSpace(v, codomain), r, t, eps, VectorInSpace(w, codomain),
        witness, bound, value)

    failed = certificate.violations()
    if failed:
        raise InternalInconsistencyError(failed, 'certificate inequalities')
    if not op_bj_orthogonal_numeric(operator, witness).orthogonal:
        raise InternalInconsistencyError('T ⊥ A', 'refuted')
    if not _refutes(witness, operator):
        raise InternalInconsistencyError('A ⊥ T refuted', 'holds')
    stretch = float(norms(codomain, matrix @ ((x + y) / r)))
    if not stretch > 1.0 + 2.0 * eps:
        raise InternalInconsistencyError(stretch, 1.0 + 2.0 * eps)
    return certificate


def check_minus_cone_lemma(space, u, v, a, b, t):
    """Whether ``a u`` lies outside the minus cone of ``a v + b w``.

    Here ``w = (1 - t) u + t v`` and ``v ⊥ u``. By convexity of the norm
    along the line, ``a u`` is outside the minus cone exactly when the
    left derivative of ``s -> ||a v + b w + s a u||`` at zero is positive.

    :raises PreconditionError: When a hypothesis fails.
    """
    if not space.strictly_convex:
        raise PreconditionError('space strictly convex')
    if not 0.0 < t < 1.0:
        raise PreconditionError('0 < t < 1')
    if a * b <= 0:
        raise PreconditionError('ab > 0')
    u = as_coords(space, u)
    v = as_coords(space, v)
    if not bj_orthogonal(space, v, u):
        raise PreconditionError('v ⊥ u')
    w = (1.0 - t) * u + t * v
    base = a * v + b * w
    return not in_cone(space, base, a * u, MINUS, method=ANALYTIC)


def _rank_one_factors(operator, value):
    """Return ``(f, w)`` with ``T = f(.) w`` or ``None`` beyond rank one."""
    matrix = operator.matrix
    minors = np.einsum('ik,jl->ijkl', matrix, matrix) - \
        np.einsum('il,jk->ijkl', matrix, matrix)
    if minors.size and float(np.max(np.abs(minors))) > \
            tolerance('rank') * value ** 2:
        return None
    column = int(np.argmax(np.linalg.norm(matrix, axis=0)))
    w = matrix[:, column]
    f = matrix.T @ w / float(w @ w)
    return f, w


def _certificate(operator, f, w):
    """Normalize ``f`` to dual norm one and orient it by its peak."""
    domain, codomain = operator.domain, operator.codomain
    size = Functional(f, domain).norm()
    k = int(np.argmax(np.abs(f)))
    sign = 1.0 if f[k] >= 0 else -1.0
    f = sign * f / size
    w = sign * w * size
    w = w / float(norms(codomain, w))
    return RankOneCertificate(Functional(f, domain),
                              VectorInSpace(w, codomain), k + 1)


def _left_symmetric_direction(certificate, budget, seed):
    report = point_left_symmetric(certificate.w.space, certificate.w.coords,
                                  budget=budget, seed=seed)
    if report.verdict == NOT_SYMMETRIC:
        return ClassifierVerdict(NO, certificate, LEFT_SYMMETRY_VIOLATION,
                                 report)
    return ClassifierVerdict(YES, certificate)


def classify_left_symmetric_from_l1(operator, budget=None, seed=0):
    """Classify left symmetry of ``T`` defined on an l1 space.

    ``T`` is left symmetric exactly when ``T = f(.) w`` with ``f`` a signed
    coordinate functional and ``w`` left symmetric.

    :raises UnsupportedSpaceError: Unless the domain is an l1 space.
    :raises PreconditionError: Unless the codomain is smooth.
    """
    domain = operator.domain
    if domain.kind != LP or domain.p != 1:
        raise UnsupportedSpaceError('The domain must be an l1 space.')
    if not operator.codomain.smooth:
        raise PreconditionError('Y smooth')
    if operator.is_zero:
        return ClassifierVerdict(ZERO_OPERATOR)
    value = operator_norm(operator).value
    factors = _rank_one_factors(operator, value)
    if factors is None:
        return ClassifierVerdict(NO, violation=RANK_VIOLATION)
    certificate = _certificate(operator, *factors)
    coords = np.abs(certificate.f.coords)
    others = np.delete(coords, certificate.k - 1)
    if others.size and float(np.max(others)) > tolerance('rank'):
        return ClassifierVerdict(NO, certificate, COORDINATE_VIOLATION)
    return _left_symmetric_direction(certificate, budget, seed)


def classify_left_symmetric_direct_sum(operator, budget=None, seed=0):
    """Classify left symmetry of ``T`` on ``X ⊕1 R``.

    Requires ``||T|| = ||T(0,1)||``.

    ``T`` is left symmetric exactly when ``T = f(.) w`` with ``X`` inside the
    kernel of ``f`` and ``w`` left symmetric.

    :raises UnsupportedSpaceError: Unless the domain is ``X ⊕1 R``.
    :raises PreconditionError: Unless ``||T|| = ||T(0,1)||`` and ``Y`` is
        smooth.
    """
    domain = operator.domain
    if domain.kind != SUM1 or domain.right.dimension != 1:
        raise UnsupportedSpaceError('The domain must be X ⊕1 R.')
    if not operator.codomain.smooth:
        raise PreconditionError('Y smooth')
    if operator.is_zero:
        return ClassifierVerdict(ZERO_OPERATOR)
    value = operator_norm(operator).value
    last = float(norms(operator.codomain, operator.matrix[:, -1]))
    if abs(value - last) > tolerance('attainment') * value:
        raise PreconditionError('||T|| = ||T(0,1)||')
    factors = _rank_one_factors(operator, value)
    if factors is None:
        return ClassifierVerdict(NO, violation=RANK_VIOLATION)
    head = operator.matrix[:, :-1]
    if head.size and float(np.max(np.abs(head))) > tolerance('rank') * value:
        return ClassifierVerdict(NO, _certificate(operator, *factors),
                                 KERNEL_VIOLATION)
    return _left_symmetric_direction(_certificate(operator, *factors),
                                     budget, seed)


#
# Right symmetry
#
def falsify_right_symmetric_op(operator, budget=None, seed=0, verify=True):
    """Search ``A`` with ``A ⊥ T`` while ``T`` is not orthogonal to ``A``.

    Strategies: the identity when ``T`` has a kernel (``R1``), the operator
    ``a x + h -> a y`` for a right witness ``y`` of ``Tx`` when ``M_T = {±x}``
    (``R2``), and random operators made orthogonal to ``T`` by a left
    companion (``R3``).

    :returns: A :class:`SymmetryReport`; the ``R1`` witness is reported as
        ``'identity'``.
    """
    if operator.is_zero:
        raise InputError('The zero operator is trivially right symmetric.')
    budget = budget or current_config['BJ_SYMMETRY_BUDGET']
    domain, codomain = operator.domain, operator.codomain
    trials = 0

    def found(witness, strategy):
        current_logger.debug('Right witness from %s after %d trials.',
                             strategy, trials)
        return SymmetryReport(operator, RIGHT, NOT_SYMMETRIC, witness, trials,
                              seed, strategy)

    if domain == codomain and nullity(operator) > 0:
        trials += 1
        identity = LinearOperator.identity(domain)
        if confirms_witness((identity, operator), (operator, identity),
                            verify):
            return found(IDENTITY, 'R1')

    attainment = norm_attainment_set(operator, seed=seed)
    if not attainment.entire_sphere and attainment.card == 2:
        x = attainment.points[0]
        point = point_right_symmetric(codomain, operator.matrix @ x.coords,
                                      budget=budget, seed=seed)
        trials += point.trials_used
        if point.verdict == NOT_SYMMETRIC:
            candidate = hyperplane_operator(x, point.witness)
            if confirms_witness((candidate, operator),
                                (operator, candidate), verify):
                return found(candidate, 'R2')

    for index in range(budget):
        trials += 1
        start = _random_operator(operator, seed, index)
        shift = operator_left_companion(operator, start)
        candidate = start.combine(operator, shift)
        if candidate.is_zero:
            continue
        if confirms_witness((candidate, operator), (operator, candidate),
                            verify):
            return found(candidate, 'R3')

    current_logger.warning('No right witness within a budget of %d.', budget)
    return SymmetryReport(operator, RIGHT, SYMMETRIC, None, trials, seed)


def _square(operator):
    if operator.domain != operator.codomain:
        raise PreconditionError('domain = codomain')


def kernel_identity_test(operator, verify=True):
    """Check that either ``T ⊥ I`` or ``T`` is not right symmetric.

    For ``T`` with a non-trivial kernel, ``I ⊥ T`` always holds, so a
    refutation of ``T ⊥ I`` turns the identity into a right witness.

    :raises PreconditionError: Without a kernel or for ``X != Y``.
    """
    _square(operator)
    if nullity(operator) == 0:
        raise PreconditionError('nullity T >= 1')
    identity = LinearOperator.identity(operator.domain)
    verdict = identity_orthogonal_to(operator)
    details = {
        'identity_orthogonal': verdict.to_json(),
        'nullity': nullity(operator),
    }
    if not verdict.orthogonal:
        return InstanceReport('identity-kernel', False, details)
    reverse = op_bj_orthogonal_numeric(operator, identity)
    details['orthogonal_to_identity'] = reverse.to_json()
    if reverse.orthogonal or not _refutes(operator, identity):
        return InstanceReport('identity-kernel', True, details)
    # T ⊥ I is refuted, so the identity must be a verified right witness.
    witness = None
    if confirms_witness((identity, operator), (operator, identity), verify):
        witness = SymmetryReport(operator, RIGHT, NOT_SYMMETRIC, IDENTITY,
                                 1, 0, 'R1')
    return InstanceReport('identity-kernel', witness is not None, details,
                          witness)


def spectral_instance_test(operator, budget=None, seed=0, verify=True):
    """Check that singular ``T`` with ``||T|| = |λ|`` lacks right symmetry.

    :raises PreconditionError: When ``||T||`` is not an eigenvalue modulus or
        ``T`` is injective.
    """
    _square(operator)
    value = operator_norm(operator).value
    spectrum = eigvals(operator.matrix)
    allowance = tolerance('spectral') * max(1.0, value)
    if not np.any(np.abs(np.abs(spectrum) - value) <= allowance):
        raise PreconditionError('||T|| is a spectral value')
    kernel = nullity(operator)
    if kernel == 0:
        raise PreconditionError('nullity T >= 1')
    report = falsify_right_symmetric_op(operator, budget, seed, verify)
    details = {
        'norm': value,
        'nullity': kernel,
        'eigenvalue_moduli': sorted(float(m) for m in np.abs(spectrum)),
    }
    return InstanceReport('spectral-nullity',
                          report.verdict == NOT_SYMMETRIC, details, report)


def _independent_pair(points):
    """Return the two points spanning the largest parallelogram."""
    best, pair = 0.0, None
    for a, b in itertools.combinations(points, 2):
        area = abs(float(np.linalg.det(np.column_stack([a, b]))))
        if area > best:
            best, pair = area, (a, b)
    return best, pair


def dim2_extreme_check(operator, budget=None, seed=0, verify=True):
    """Check the first step of the extreme point argument in dimension two.

    When ``M_T`` is a single antipodal pair, ``T`` must fail to be right
    symmetric. Otherwise two linearly independent vectors ``a``, ``b`` of
    ``M_T`` exist and ``Ta/||T||``, ``Tb/||T||`` are unit vectors.

    :raises PreconditionError: When a space hypothesis fails.
    """
    domain, codomain = operator.domain, operator.codomain
    if domain.dimension != 2:
        raise PreconditionError('dim X = 2')
    if not domain.strictly_convex:
        raise PreconditionError('X strictly convex')
    if not (codomain.strictly_convex and codomain.smooth):
        raise PreconditionError('Y strictly convex and smooth')
    attainment = norm_attainment_set(operator, seed=seed)
    details = {'card': attainment.card if not attainment.entire_sphere
               else 'inf'}
    if not attainment.entire_sphere and attainment.card == 2:
        report = falsify_right_symmetric_op(operator, budget, seed, verify)
        return InstanceReport('dim2-extreme',
                              report.verdict == NOT_SYMMETRIC, details, report)

    points = [p.coords for p in attainment.points]
    if attainment.entire_sphere:
        points += list(np.eye(2))
    area, pair = _independent_pair(points)
    if pair is None or area <= tolerance('cluster'):
        details['independent_pair'] = None
        return InstanceReport('dim2-extreme', False, details)
    value = attainment.norm_value
    images = [float(norms(codomain, operator.matrix @ p)) / value
              for p in pair]
    details['independent_pair'] = [[float(c) for c in p] for p in pair]
    details['image_norms'] = images
    unit = all(abs(n - 1.0) <= tolerance('attainment') * 10 for n in images)
    return InstanceReport('dim2-extreme', unit, details)
