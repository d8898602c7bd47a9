# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Linear operators between descriptor spaces.

Operator norms are exact whenever the geometry allows it (``l1`` or ``l_inf``
on either side, Hilbert to Hilbert, direct-sum domains built from those) and
otherwise found by multi-start projected-gradient ascent on the unit sphere
followed by a power-iteration polish. Operator orthogonality is decided by a
golden-section search over ``t -> ||T + t A||``, or through the norm
attainment set ``M_T``.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.linalg import null_space
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import DimensionMismatchError, InputError, NumericFailureError, \
    PreconditionError, PreconditionNotEstablishedError, \
    UnsupportedSpaceError
from .orthogonality import ANALYTIC, MINUS, NUMERIC, PLUS, \
    OrthogonalityVerdict, in_cone, one_sided_derivatives
from .proxies import current_config, current_logger, tolerance
from .search import golden_section
from .spaces import LP, Functional, SpaceDescriptor, VectorInSpace, \
    dual_norms, duality_map, norming_functionals, norming_points, norms, \
    sphere_columns

EXACT = 'exact'
APPROXIMATE = 'numeric'

AUTO = 'auto'
NORM_METHODS = (AUTO, EXACT, APPROXIMATE)

_SIGN_CHUNK = 4096


@dataclass(frozen=True, eq=False)
class LinearOperator(object):
    """A real matrix acting from ``domain`` to ``codomain``."""

    matrix: np.ndarray
    domain: SpaceDescriptor
    codomain: SpaceDescriptor

    def __post_init__(self):
        """Freeze a float copy of the matrix and check its shape."""
        matrix = np.array(self.matrix, dtype=float)
        expected = (self.codomain.dimension, self.domain.dimension)
        if matrix.ndim != 2 or matrix.shape != expected:
            raise DimensionMismatchError(
                'Matrix shape {0} does not match {1} -> {2}.'.format(
                    matrix.shape, self.domain, self.codomain))
        matrix.setflags(write=False)
        object.__setattr__(self, 'matrix', matrix)

    @classmethod
    def identity(cls, space):
        """Return the identity of ``space``."""
        return cls(np.eye(space.dimension), space, space)

    @property
    def is_zero(self):
        """Whether every matrix entry vanishes."""
        return not np.any(self.matrix)

    def __call__(self, x):
        """Apply the operator to a domain vector."""
        if isinstance(x, VectorInSpace):
            x = x.coords
        return VectorInSpace(self.matrix @ np.asarray(x, dtype=float),
                             self.codomain)

    def combine(self, other, t):
        """Return ``self + t * other``."""
        check_compatible(self, other)
        return LinearOperator(self.matrix + t * other.matrix, self.domain,
                              self.codomain)

    def scaled(self, factor):
        """Return ``factor * self``."""
        return LinearOperator(factor * self.matrix, self.domain,
                              self.codomain)

    def to_json(self):
        """Return the JSON-compatible representation."""
        return {
            'matrix': [[float(v) for v in row] for row in self.matrix],
            'domain': self.domain.to_json(),
            'codomain': self.codomain.to_json(),
        }

    @classmethod
    def from_json(cls, data):
        """Build an operator from its JSON-compatible representation."""
        if not isinstance(data, dict) or 'matrix' not in data:
            raise InputError('An operator needs a matrix.')
        return cls(data['matrix'], SpaceDescriptor.from_json(data.get(
            'domain')), SpaceDescriptor.from_json(data.get('codomain')))


def check_compatible(first, second):
    """Raise unless both operators share domain and codomain."""
    if first.domain != second.domain or first.codomain != second.codomain:
        raise DimensionMismatchError(
            'Operators act between different spaces.')


class OperatorNorm(NamedTuple):
    """Operator norm with the exactness of its computation."""

    value: float
    exactness: str


@dataclass(frozen=True, eq=False)
class NormAttainment(object):
    """The norm attainment set ``M_T`` as antipodal pairs of unit vectors."""

    norm_value: float
    points: tuple
    exactness: str
    attainment_tolerance: float
    entire_sphere: bool = False

    @property
    def card(self):
        """Number of points, infinite for the entire sphere."""
        return math.inf if self.entire_sphere else len(self.points)

    def to_json(self):
        """Return the JSON-compatible representation."""
        return {
            'norm_value': self.norm_value,
            'points': [p.to_json() for p in self.points],
            'exactness': self.exactness,
            'attainment_tolerance': self.attainment_tolerance,
            'entire_sphere': self.entire_sphere,
        }


@dataclass(frozen=True)
class AttainmentVerdict(OrthogonalityVerdict):
    """Operator orthogonality decided on ``M_T``, with its cone witnesses.

    ``margin`` is the first-order cone deficit scaled by ``max(1, ||T||)``.
    """

    plus_witness: VectorInSpace = None
    minus_witness: VectorInSpace = None

    def to_json(self):
        """Return the JSON-compatible representation."""
        data = super(AttainmentVerdict, self).to_json()
        data['plus_witness'] = (self.plus_witness.to_json()
                                if self.plus_witness is not None else None)
        data['minus_witness'] = (self.minus_witness.to_json()
                                 if self.minus_witness is not None else None)
        return data


#
# Exact operator norms
#
def _is_l1(space):
    return space.kind == LP and (space.p == 1 or space.dim == 1)


def _is_linf(space):
    return space.kind == LP and (math.isinf(space.p) or space.dim == 1)


def _is_l2(space):
    return space.kind == LP and space.p == 2


def _sign_vectors(n, start, stop):
    codes = np.arange(start, stop)
    return ((codes[None, :] >> np.arange(n)[:, None]) & 1) * -2.0 + 1.0


def _enumerate_signs(n, score):
    """Maximize ``score`` over the sign vectors of length ``n``."""
    best_value, best = -np.inf, None
    for start in range(0, 2 ** n, _SIGN_CHUNK):
        signs = _sign_vectors(n, start, min(start + _SIGN_CHUNK, 2 ** n))
        values = score(signs)
        i = int(np.argmax(values))
        if values[i] > best_value:
            best_value, best = float(values[i]), signs[:, i]
    return best_value, best


def _has_exact_path(domain, codomain):
    limit = current_config['BJ_SYMMETRY_MAX_SIGN_ENUMERATION']
    if _is_l1(domain) or _is_linf(codomain):
        return True
    if _is_l2(domain) and _is_l2(codomain):
        return True
    if _is_linf(domain) and domain.dim <= limit:
        return True
    if _is_l1(codomain) and codomain.dim <= limit:
        return True
    if domain.kind != LP:
        return (_has_exact_path(domain.left, codomain) and
                _has_exact_path(domain.right, codomain))
    return False


def _exact_norm(matrix, domain, codomain):
    """Return ``(value, maximizer)`` or ``None`` when no closed form applies.

    The maximizer is a unit domain vector attaining the norm.
    """
    if not _has_exact_path(domain, codomain):
        return None
    n = domain.dimension
    if _is_l1(domain):
        values = norms(codomain, matrix)
        k = int(np.argmax(values))
        return float(values[k]), np.eye(n)[k]
    if _is_linf(codomain):
        values = dual_norms(domain, matrix.T)
        i = int(np.argmax(values))
        return float(values[i]), norming_points(domain, matrix[i])
    if _is_l2(domain) and _is_l2(codomain):
        _, singular, vt = np.linalg.svd(matrix)
        return float(singular[0]), vt[0]
    if _is_linf(domain):
        value, signs = _enumerate_signs(
            n, lambda s: norms(codomain, matrix @ s))
        return value, signs
    if _is_l1(codomain):
        value, signs = _enumerate_signs(
            codomain.dimension, lambda s: dual_norms(domain, matrix.T @ s))
        return value, norming_points(domain, matrix.T @ signs)
    k = domain.left.dimension
    left = _exact_norm(matrix[:, :k], domain.left, codomain)
    right = _exact_norm(matrix[:, k:], domain.right, codomain)
    if left[0] >= right[0]:
        return left[0], np.concatenate([left[1], np.zeros(n - k)])
    return right[0], np.concatenate([np.zeros(k), right[1]])


#
# Numeric operator norms
#
def _ascend(matrix, domain, codomain, starts):
    """Projected-gradient ascent of ``||T x||`` from every column of starts.

    The gradient ``T^t J(T x)`` is followed with a per-start step that starts
    at one and halves on every rejected move; the point is pulled back to the
    unit sphere by normalization. A power-iteration polish through the
    norming points of ``T^t J(T x)`` follows; it never decreases ``||T x||``.
    """
    x = starts / norms(domain, starts)
    values = norms(codomain, matrix @ x)
    step = np.ones(x.shape[1])
    for _ in range(current_config['BJ_SYMMETRY_ASCENT_ITERATIONS']):
        gradient = matrix.T @ duality_map(codomain, matrix @ x)
        trial = x + step * gradient
        size = norms(domain, trial)
        trial = trial / np.where(size > 0, size, 1.0)
        trial_values = norms(codomain, matrix @ trial)
        better = trial_values > values
        x = np.where(better, trial, x)
        values = np.where(better, trial_values, values)
        step = np.where(better, step, 0.5 * step)
        if np.all(step < 1e-9):
            break
    for _ in range(current_config['BJ_SYMMETRY_POLISH_ITERATIONS']):
        gradient = matrix.T @ duality_map(codomain, matrix @ x)
        trial = norming_points(domain, gradient)
        trial_values = norms(codomain, matrix @ trial)
        better = trial_values > values
        if not better.any():
            break
        x = np.where(better, trial, x)
        values = np.where(better, trial_values, values)
    return x, values


def _select(x, values):
    """Pick the best column, breaking ties lexicographically."""
    top = values.max()
    ties = np.flatnonzero(values >= top)
    best = max(ties, key=lambda i: tuple(x[:, i]))
    return float(values[best]), x[:, best]


def _starts(domain, rng, count):
    eye = np.eye(domain.dimension)
    return np.concatenate([sphere_columns(domain, rng, count), eye, -eye],
                          axis=1)


def _numeric_norm(matrix, domain, codomain, seed=0):
    rng = np.random.default_rng(seed)
    starts = _starts(domain, rng, current_config['BJ_SYMMETRY_ASCENT_STARTS'])
    x, values = _ascend(matrix, domain, codomain, starts)
    return _select(x, values)


def norm_with_point(operator, method=AUTO):
    """Return ``(value, maximizer, exactness)`` of the operator norm."""
    if method not in NORM_METHODS:
        raise InputError('Unknown norm method {0!r}.'.format(method))
    if method != APPROXIMATE:
        exact = _exact_norm(operator.matrix, operator.domain,
                            operator.codomain)
        if exact is not None:
            return exact[0], exact[1], EXACT
        if method == EXACT:
            raise UnsupportedSpaceError(
                'No exact operator norm for {0} -> {1}.'.format(
                    operator.domain, operator.codomain))
    value, point = _numeric_norm(operator.matrix, operator.domain,
                                 operator.codomain)
    return value, point, APPROXIMATE


def operator_norm(operator, method=AUTO):
    """Return the operator norm of ``operator`` and its exactness.

    :param method: ``auto`` (exact when a closed form exists), ``exact``
        (raise :class:`UnsupportedSpaceError` otherwise) or ``numeric``.
    :returns: An :class:`OperatorNorm` ``(value, exactness)``.
    """
    value, _, exactness = norm_with_point(operator, method)
    return OperatorNorm(value, exactness)


class PencilNorm(object):
    """Evaluate ``t -> ||F + t G||`` for a one-dimensional search.

    Numeric evaluations reuse the best points of the previous ones as extra
    starts, and the number of evaluations is capped.
    """

    def __init__(self, first, second, hints=None, seed=0):
        """Prepare the pencil of two compatible operators."""
        check_compatible(first, second)
        self.first = first.matrix
        self.second = second.matrix
        self.domain = first.domain
        self.codomain = first.codomain
        self.exact = _has_exact_path(self.domain, self.codomain)
        self.limit = current_config['BJ_SYMMETRY_MAX_NORM_EVALUATIONS']
        self.evaluations = 0
        if not self.exact:
            rng = np.random.default_rng(seed)
            starts = _starts(self.domain, rng,
                             current_config['BJ_SYMMETRY_NESTED_STARTS'])
            if hints is not None and len(hints):
                starts = np.concatenate([starts, np.asarray(hints).T],
                                        axis=1)
            self.starts = starts
            self.pool = None

    def __call__(self, t):
        """Return ``||F + t G||``."""
        self.evaluations += 1
        if self.evaluations > self.limit:
            raise NumericFailureError(
                'More than {0} operator norm evaluations.'.format(self.limit))
        matrix = self.first + t * self.second
        if self.exact:
            return _exact_norm(matrix, self.domain, self.codomain)[0]
        starts = self.starts
        if self.pool is not None:
            starts = np.concatenate([starts, self.pool], axis=1)
        x, values = _ascend(matrix, self.domain, self.codomain, starts)
        order = np.argsort(-values, kind='stable')[:4]
        self.pool = x[:, order]
        return float(values[order[0]])


#
# Norm attainment
#
def _cluster(domain, x, values, radius):
    """Merge points closer than ``radius`` (up to sign); best value first."""
    order = sorted(range(x.shape[1]),
                   key=lambda i: (-values[i], tuple(-x[:, i])))
    representatives = []
    for i in order:
        point = x[:, i]
        if any(min(float(norms(domain, point - r)),
                   float(norms(domain, point + r))) <= radius
               for r in representatives):
            continue
        representatives.append(point)
    return representatives


def norm_attainment_set(operator, attainment_tolerance=None, seed=0):
    """Return the norm attainment set ``M_T``.

    Polished maximizers within ``attainment_tolerance`` of the norm are
    clustered and closed under antipodes. When more than the configured
    fraction of the raw random starts already attain the norm, the set is
    reported as the entire sphere.

    :raises InputError: For the zero operator.
    """
    if operator.is_zero:
        raise InputError('The zero operator attains its norm everywhere.')
    tol = (tolerance('attainment') if attainment_tolerance is None
           else attainment_tolerance)
    matrix, domain, codomain = (operator.matrix, operator.domain,
                                operator.codomain)
    value, point, exactness = norm_with_point(operator)

    rng = np.random.default_rng(seed)
    random_starts = sphere_columns(
        domain, rng, current_config['BJ_SYMMETRY_ASCENT_STARTS'])
    raw = norms(codomain, matrix @ random_starts)
    threshold = value * (1.0 - tol)
    entire = float(np.mean(raw >= threshold)) > current_config[
        'BJ_SYMMETRY_ENTIRE_SPHERE_FRACTION']

    eye = np.eye(domain.dimension)
    starts = np.concatenate([random_starts, eye, -eye, point[:, None]],
                            axis=1)
    x, values = _ascend(matrix, domain, codomain, starts)
    if exactness == APPROXIMATE:
        value = max(value, float(values.max()))
        threshold = value * (1.0 - tol)
    keep = values >= threshold
    representatives = _cluster(domain, x[:, keep], values[keep],
                               tolerance('cluster'))
    points = []
    for r in representatives:
        points.extend([VectorInSpace(r, domain), VectorInSpace(-r, domain)])
    if entire:
        exactness = APPROXIMATE
    current_logger.debug('M_T has %d points (entire sphere: %s).',
                         len(points), entire)
    return NormAttainment(value, tuple(points), exactness, tol, entire)


def _attainment_candidates(operator, attainment, seed=0):
    """Points of ``M_T`` to examine, sampled when ``M_T`` is the sphere."""
    points = [p.coords for p in attainment.points]
    if attainment.entire_sphere:
        rng = np.random.default_rng(seed)
        sample = sphere_columns(
            operator.domain, rng,
            2 * current_config['BJ_SYMMETRY_ASCENT_STARTS'])
        eye = np.eye(operator.domain.dimension)
        points += list(eye) + list(-eye) + list(sample.T)
    return points


#
# Operator orthogonality
#
def op_bj_orthogonal_numeric(first, second, hints=None):
    """Decide ``T ⊥ A`` by minimizing ``t -> ||T + t A||``.

    The golden-section search runs over ``|t| <= 2||T||/||A||``. ``hints``
    are extra domain points where the norm of the pencil is likely attained.

    :returns: An :class:`~bj_symmetry.orthogonality.OrthogonalityVerdict`.
    """
    check_compatible(first, second)
    tol = tolerance('numeric')
    value_t, point, _ = norm_with_point(first)
    value_a = operator_norm(second).value
    if value_t == 0 or value_a == 0:
        return OrthogonalityVerdict(True, 0.0, value_t, 0.0, NUMERIC, tol)
    pencil = PencilNorm(first, second, hints=[point] + list(hints or ()))
    bound = 2.0 * value_t / value_a
    best = golden_section(pencil, -bound, bound,
                          max_evaluations=pencil.limit)
    margin = max(value_t - best.value, 0.0)
    return OrthogonalityVerdict(margin <= tol * max(1.0, value_t),
                                best.argmin, best.value, margin, NUMERIC, tol)


def op_bj_orthogonal_via_MT(first, second, seed=0):
    """Decide ``T ⊥ A`` through the norm attainment set of ``T``.

    ``T ⊥ A`` exactly when some ``x`` in ``M_T`` has ``Ax`` in the plus cone
    of ``Tx`` and some ``y`` in ``M_T`` has ``Ay`` in the minus cone of
    ``Ty``; both witnesses are returned.

    :returns: An :class:`AttainmentVerdict`.
    """
    check_compatible(first, second)
    attainment = norm_attainment_set(first, seed=seed)
    tol = tolerance('numeric')
    codomain = first.codomain
    plus_witness = minus_witness = None
    plus_gap = minus_gap = math.inf
    for x in _attainment_candidates(first, attainment, seed):
        image, direction = first.matrix @ x, second.matrix @ x
        size = float(norms(codomain, direction))
        if size == 0:
            plus_gap = minus_gap = 0.0
            plus_witness = plus_witness or VectorInSpace(x, first.domain)
            minus_witness = minus_witness or VectorInSpace(x, first.domain)
            break
        d_minus, d_plus = one_sided_derivatives(codomain, image, direction)
        plus_gap = min(plus_gap, max(-d_plus, 0.0) / size)
        minus_gap = min(minus_gap, max(d_minus, 0.0) / size)
        if plus_witness is None and in_cone(
                codomain, image, direction, PLUS, method=ANALYTIC, slack=tol):
            plus_witness = VectorInSpace(x, first.domain)
        if minus_witness is None and in_cone(
                codomain, image, direction, MINUS, method=ANALYTIC,
                slack=tol):
            minus_witness = VectorInSpace(x, first.domain)
        if plus_witness is not None and minus_witness is not None:
            break
    orthogonal = plus_witness is not None and minus_witness is not None
    scale = max(1.0, attainment.norm_value)
    margin = 0.0 if orthogonal else max(plus_gap, minus_gap) * scale
    return AttainmentVerdict(orthogonal, 0.0, attainment.norm_value, margin,
                             ANALYTIC, tol, plus_witness, minus_witness)


def op_one_sided_derivatives(first, second, seed=0, attainment=None):
    """Return ``(d_minus, d_plus)`` of ``t -> ||T + t A||`` at zero.

    In finite dimension these are the extreme values of ``f(Ax)`` over
    ``x`` in ``M_T`` and norming functionals ``f`` of ``Tx``. A precomputed
    ``attainment`` set of ``T`` may be passed in.
    """
    check_compatible(first, second)
    if first.is_zero:
        value = operator_norm(second).value
        return -value, value
    if attainment is None:
        attainment = norm_attainment_set(first, seed=seed)
    low, high = math.inf, -math.inf
    for x in _attainment_candidates(first, attainment, seed):
        d_minus, d_plus = one_sided_derivatives(
            first.codomain, first.matrix @ x, second.matrix @ x)
        low, high = min(low, d_minus), max(high, d_plus)
    return low, high


def operator_right_companion(first, second, seed=0, attainment=None):
    """Return ``b`` with ``T ⊥ (b T + A)``."""
    check_compatible(first, second)
    if first.is_zero:
        raise InputError('Companions need a non-zero operator.')
    if attainment is None:
        attainment = norm_attainment_set(first, seed=seed)
    value = attainment.norm_value
    d_minus, d_plus = op_one_sided_derivatives(first, second, seed=seed,
                                               attainment=attainment)
    return -0.5 * (d_plus + d_minus) / value


def operator_left_companion(first, second):
    """Return ``c`` with ``(c T + A) ⊥ T``, minimizing ``||c T + A||``."""
    check_compatible(first, second)
    if first.is_zero:
        raise InputError('Companions need a non-zero operator.')
    value_a = operator_norm(second).value
    if value_a == 0:
        return 0.0
    value_t = operator_norm(first).value
    bound = 2.0 * value_a / value_t
    pencil = PencilNorm(second, first)
    return golden_section(pencil, -bound, bound,
                          max_evaluations=pencil.limit).argmin


def op_orth_witness_connected(first, second, seed=0):
    """Return ``x`` in ``M_T`` with ``Tx ⊥ Ax``, or ``None``.

    Requires ``T ⊥ A`` and ``M_T = D ∪ (-D)`` with ``D`` connected, which
    here means a single antipodal pair or the entire sphere. Along a path in
    ``D`` from a plus-cone point to a minus-cone point the cone conditions
    are bisected.

    :raises PreconditionError: When ``T`` is not orthogonal to ``A``.
    :raises PreconditionNotEstablishedError: When ``M_T`` is fragmented.
    """
    if not op_bj_orthogonal_numeric(first, second).orthogonal:
        raise PreconditionError('T ⊥ A')
    attainment = norm_attainment_set(first, seed=seed)
    if not attainment.entire_sphere and \
            _components(first.domain, attainment) > 1:
        raise PreconditionNotEstablishedError(
            'M_T is not of the form D ∪ (-D) with D connected.')
    codomain = first.codomain
    slack = tolerance('numeric')

    def slopes(x):
        direction = second.matrix @ x
        size = float(norms(codomain, direction))
        if size == 0:
            return 0.0, 0.0
        d_minus, d_plus = one_sided_derivatives(
            codomain, first.matrix @ x, direction)
        return d_minus / size, d_plus / size

    candidates = _attainment_candidates(first, attainment, seed)
    start = end = None
    for x in candidates:
        d_minus, d_plus = slopes(x)
        if d_minus <= slack and d_plus >= -slack:
            return VectorInSpace(x, first.domain)
        if start is None and d_plus >= -slack:
            start = x
        if end is None and d_minus <= slack:
            end = x
    if start is None or end is None or not attainment.entire_sphere:
        return None
    # Cone membership does not change under x -> -x.
    if float(np.dot(start, end)) < 0:
        end = -end
    low, high = 0.0, 1.0
    for _ in range(100):
        middle = 0.5 * (low + high)
        x = (1 - middle) * start + middle * end
        x = x / float(norms(first.domain, x))
        d_minus, d_plus = slopes(x)
        if d_minus <= slack and d_plus >= -slack:
            return VectorInSpace(x, first.domain)
        if d_minus > slack:
            low = middle
        else:
            high = middle
    return None


def _components(domain, attainment):
    """Connected components of ``M_T`` modulo antipodes."""
    points = [p.coords for p in attainment.points]
    count = len(points)
    radius = 10 * tolerance('cluster')
    adjacency = np.zeros((count, count))
    for i in range(count):
        for j in range(count):
            if i != j and min(float(norms(domain, points[i] - points[j])),
                              float(norms(domain, points[i] + points[j]))) \
                    <= radius:
                adjacency[i, j] = 1.0
    components, _ = connected_components(csr_matrix(adjacency),
                                         directed=False)
    return components


#
# Builders
#
def rank_one(functional, vector):
    """Return the operator ``x -> f(x) w``."""
    return LinearOperator(np.outer(vector.coords, functional.coords),
                          functional.space, vector.space)


def embed_gamma(functional, vector):
    """Return ``A_y = f(.) y`` for a unit functional ``f``.

    ``y -> A_y`` is an isometric embedding that preserves orthogonality in
    both directions.
    """
    if abs(functional.norm() - 1.0) > tolerance('unit'):
        raise InputError('The embedding needs a unit functional.')
    return rank_one(functional, vector)


def adjoint(operator):
    """Return the adjoint between the dual lp spaces."""
    if operator.domain.kind != LP or operator.codomain.kind != LP:
        raise UnsupportedSpaceError('Adjoints need lp domain and codomain.')
    return LinearOperator(operator.matrix.T, operator.codomain.dual(),
                          operator.domain.dual())


def hyperplane_operator(x, u, functional=None):
    """Return ``A`` with ``A(a x + h) = a u`` for ``h`` in the kernel of ``f``.

    :param x: Non-zero domain vector.
    :param u: Codomain vector.
    :param functional: Norming functional of ``x``; the canonical one by
        default.
    """
    if functional is None:
        functional = norming_functionals(x.space, x).canonical()
    scale = functional(x)
    if scale == 0:
        raise InputError('The functional must not vanish at x.')
    return rank_one(Functional(functional.coords / scale, x.space), u)


def is_smooth_operator(operator, seed=0):
    """Whether ``M_T`` is a single antipodal pair with ``Tx`` smooth."""
    if operator.is_zero:
        return False
    attainment = norm_attainment_set(operator, seed=seed)
    if attainment.entire_sphere or attainment.card != 2:
        return False
    image = operator.matrix @ attainment.points[0].coords
    return norming_functionals(operator.codomain, image).is_singleton


def nullity(operator):
    """Dimension of the kernel, from singular values below the rank cutoff."""
    singular = np.linalg.svd(operator.matrix, compute_uv=False)
    if not singular.size or singular[0] == 0:
        return operator.domain.dimension
    rank = int(np.sum(singular > tolerance('rank') * singular[0]))
    return operator.domain.dimension - rank


def identity_orthogonal_to(operator):
    """Decide ``I ⊥ T`` for an operator of a space into itself.

    When ``T`` has a non-trivial kernel this always holds: a unit kernel
    vector ``u`` gives ``||I + t T|| >= ||(I + t T) u|| = 1``.
    """
    if operator.domain != operator.codomain:
        raise InputError('The identity needs domain = codomain.')
    kernel = null_space(operator.matrix, rcond=tolerance('rank'))
    hints = [k / float(norms(operator.domain, k)) for k in kernel.T]
    return op_bj_orthogonal_numeric(
        LinearOperator.identity(operator.domain), operator, hints=hints)
