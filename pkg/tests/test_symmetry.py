# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Operator symmetry tests."""

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.linalg import null_space

from bj_symmetry.errors import InputError, PreconditionError, \
    UnsupportedSpaceError
from bj_symmetry.operators import LinearOperator, op_bj_orthogonal_numeric, \
    op_bj_orthogonal_via_MT
from bj_symmetry.oracles import confirms_operator_not_orthogonal
from bj_symmetry.orthogonality import NOT_SYMMETRIC, SYMMETRIC, \
    mutually_orthogonal_pair
from bj_symmetry.spaces import SpaceDescriptor, VectorInSpace, \
    norming_functionals
from bj_symmetry.symmetry import COORDINATE_VIOLATION, IDENTITY, \
    KERNEL_VIOLATION, NO, RANK_VIOLATION, YES, ZERO_OPERATOR, \
    check_minus_cone_lemma, classify_left_symmetric_direct_sum, \
    classify_left_symmetric_from_l1, confirms_witness, \
    construct_step3_witness, dim2_extreme_check, falsify_left_symmetric_op, \
    falsify_right_symmetric_op, kernel_identity_test, spectral_instance_test


@pytest.fixture
def projection(l2):
    """``diag(1, 0)`` on the Euclidean plane."""
    return LinearOperator(np.diag([1.0, 0.0]), l2, l2)


@pytest.fixture
def direct_sum():
    """The space ``l2^2 ⊕1 R``."""
    return SpaceDescriptor.sum1(SpaceDescriptor.lp(2, 2),
                                SpaceDescriptor.lp(2, 1))


def test_confirms_witness(diagonal, l2):
    """Test the witness check in both directions."""
    witness = LinearOperator([[0, 0], [0, 0.5]], l2, l2)
    assert confirms_witness((diagonal, witness), (witness, diagonal))
    assert not confirms_witness((witness, diagonal), (diagonal, witness))


def test_falsify_left_diagonal(diagonal):
    """A rank one operator through the second axis refutes left symmetry."""
    report = falsify_left_symmetric_op(diagonal, budget=20)
    assert NOT_SYMMETRIC == report.verdict
    assert 'S1' == report.strategy
    assert_allclose(report.witness.matrix, [[0, 0], [0, 0.5]], atol=1e-9)
    assert report.to_json()['witness']['matrix'][1][1] == pytest.approx(0.5)


def test_falsify_left_within_budget(coordinate_rank_one):
    """Coordinate rank one operators from l1 are left symmetric."""
    report = falsify_left_symmetric_op(coordinate_rank_one, budget=10)
    assert SYMMETRIC == report.verdict
    assert report.witness is None
    assert report.trials_used >= 10


def test_falsify_zero_operator(diagonal):
    """The zero operator is rejected by both falsifiers."""
    with pytest.raises(InputError):
        falsify_left_symmetric_op(diagonal.scaled(0))
    with pytest.raises(InputError):
        falsify_right_symmetric_op(diagonal.scaled(0))


def test_falsify_right_identity(projection):
    """Operators with a kernel are refuted by the identity."""
    report = falsify_right_symmetric_op(projection, budget=10)
    assert NOT_SYMMETRIC == report.verdict
    assert IDENTITY == report.witness
    assert 'R1' == report.strategy
    assert IDENTITY == report.to_json()['witness']


def test_step3_witness():
    """Test the two-dimensional construction between l3 and l2."""
    domain = SpaceDescriptor.lp(3, 3)
    codomain = SpaceDescriptor.lp(2, 3)
    scale = 2 ** (1 / 3.0)
    x = np.array([1.0, 1.0, 0.0]) / scale
    functional = np.array([1.0, 1.0, 0.0]) / scale ** 2
    operator = LinearOperator(np.outer([1, 0, 0], functional), domain,
                              codomain)
    certificate = construct_step3_witness(
        operator, VectorInSpace(x, domain), VectorInSpace([0, 0, 1], domain),
        VectorInSpace([0, 1, 0], codomain))
    assert certificate.r == pytest.approx(scale)
    assert [] == certificate.violations()
    assert (1 - certificate.t) * 2 < certificate.eps < certificate.bound
    assert_allclose(certificate.A.matrix @ x, [0, 1, 0], atol=1e-9)
    assert_allclose(certificate.A.matrix @ [0, 0, 1], certificate.w.coords,
                    atol=1e-9)
    assert 'bound' in certificate.to_json()

    with pytest.raises(PreconditionError) as excinfo:
        construct_step3_witness(
            operator.scaled(2.0), VectorInSpace(x, domain),
            VectorInSpace([0, 0, 1], domain),
            VectorInSpace([0, 1, 0], codomain))
    assert '||T|| = 1' == excinfo.value.condition


def test_step3_witness_random_rank_one():
    """Random unit-norm rank-one operators from l3 to l2 are separated."""
    domain = SpaceDescriptor.lp(3, 3)
    codomain = SpaceDescriptor.lp(2, 3)
    rng = np.random.default_rng(13)
    for index in range(20):
        x = rng.standard_normal(3)
        x = x / np.sum(np.abs(x) ** 3) ** (1 / 3.0)
        functional = norming_functionals(domain, x).canonical().coords
        w = rng.standard_normal(3)
        w = w / np.linalg.norm(w)
        operator = LinearOperator(np.outer(w, functional), domain, codomain)
        x, y = mutually_orthogonal_pair(domain, seed=index, anchor=x)
        v = null_space(w[None, :])[:, 0]

        certificate = construct_step3_witness(operator, x, y, v)
        assert [] == certificate.violations()
        assert 1 < certificate.r < 2
        spread = 2 * (1 - certificate.t)
        assert spread < certificate.eps < certificate.bound
        assert_allclose(certificate.A.matrix @ x.coords, v, atol=1e-9)

        witness = certificate.A
        assert op_bj_orthogonal_numeric(operator, witness).orthogonal
        assert op_bj_orthogonal_via_MT(operator, witness).orthogonal
        assert not op_bj_orthogonal_numeric(witness, operator).orthogonal
        assert confirms_operator_not_orthogonal(witness, operator)


def test_step3_needs_smooth_domain(l1, l2):
    """The construction needs a strictly convex and smooth domain."""
    operator = LinearOperator(np.eye(2), l1, l2)
    with pytest.raises(PreconditionError):
        construct_step3_witness(operator, VectorInSpace([1, 0], l1),
                                VectorInSpace([0, 1], l1),
                                VectorInSpace([0, 1], l2))


def test_minus_cone_lemma(l1, l2):
    """Test the minus cone lemma and its hypotheses."""
    assert check_minus_cone_lemma(l2, [1, 0], [0, 1], 1.0, 1.0, 0.5)
    assert check_minus_cone_lemma(l2, [1, 0], [0, 1], -2.0, -0.5, 0.1)
    with pytest.raises(PreconditionError):
        check_minus_cone_lemma(l2, [1, 0], [0, 1], 1.0, -1.0, 0.5)
    with pytest.raises(PreconditionError):
        check_minus_cone_lemma(l2, [1, 0], [0, 1], 1.0, 1.0, 1.5)
    with pytest.raises(PreconditionError):
        check_minus_cone_lemma(l2, [1, 0], [1, 1], 1.0, 1.0, 0.5)
    with pytest.raises(PreconditionError):
        check_minus_cone_lemma(l1, [1, 0], [0, 1], 1.0, 1.0, 0.5)


def test_classify_from_l1(l1, l2, coordinate_rank_one):
    """Test the classification on l1 domains."""
    verdict = classify_left_symmetric_from_l1(coordinate_rank_one,
                                              budget=10)
    assert YES == verdict.left_symmetric
    assert 2 == verdict.certificate.k
    assert_allclose(verdict.certificate.w.coords, [0.6, 0.8])
    assert 2 == verdict.to_json()['certificate']['k']

    spread = LinearOperator(np.outer([0.6, 0.8], [0.5, 0.5]), l1, l2)
    verdict = classify_left_symmetric_from_l1(spread)
    assert NO == verdict.left_symmetric
    assert COORDINATE_VIOLATION == verdict.violation

    verdict = classify_left_symmetric_from_l1(
        LinearOperator(np.eye(2), l1, l2))
    assert RANK_VIOLATION == verdict.violation
    assert verdict.certificate is None

    assert ZERO_OPERATOR == classify_left_symmetric_from_l1(
        coordinate_rank_one.scaled(0)).left_symmetric


def test_classify_from_l1_errors(l1, l2):
    """Test the hypotheses of the l1 classification."""
    with pytest.raises(UnsupportedSpaceError):
        classify_left_symmetric_from_l1(LinearOperator.identity(l2))
    with pytest.raises(PreconditionError):
        classify_left_symmetric_from_l1(LinearOperator(
            np.eye(2), l1, SpaceDescriptor.lp('inf', 2)))


@pytest.mark.parametrize('functional, expected, violation', [
    ([0, 0, 1], YES, None),
    ([0.3, 0, 1], NO, KERNEL_VIOLATION),
])
def test_classify_direct_sum(direct_sum, l2, functional, expected,
                             violation):
    """Left symmetry on ``X ⊕1 R`` depends on the kernel of ``f``."""
    operator = LinearOperator(np.outer([0.6, 0.8], functional), direct_sum,
                              l2)
    verdict = classify_left_symmetric_direct_sum(operator, budget=10)
    assert expected == verdict.left_symmetric
    assert violation == verdict.violation


def test_classify_direct_sum_errors(direct_sum, l2):
    """The norm must be attained at ``(0, 1)``."""
    operator = LinearOperator(np.outer([0.6, 0.8], [2, 0, 1]), direct_sum,
                              l2)
    with pytest.raises(PreconditionError) as excinfo:
        classify_left_symmetric_direct_sum(operator)
    assert '||T|| = ||T(0,1)||' == excinfo.value.condition
    with pytest.raises(UnsupportedSpaceError):
        classify_left_symmetric_direct_sum(LinearOperator.identity(l2))


def test_kernel_identity(projection, diagonal):
    """The identity is a right witness for ``diag(1, 0)``."""
    report = kernel_identity_test(projection)
    assert report.passed
    assert 'R1' == report.witness.strategy
    assert 1 == report.details['nullity']
    with pytest.raises(PreconditionError):
        kernel_identity_test(diagonal)


def test_spectral_instance():
    """Test operators whose norm is an eigenvalue modulus."""
    space = SpaceDescriptor.lp(2, 3)
    report = spectral_instance_test(
        LinearOperator(np.diag([1.0, 0.0, 0.5]), space, space), budget=10)
    assert report.passed
    assert NOT_SYMMETRIC == report.witness.verdict

    plane = SpaceDescriptor.lp(2, 2)
    with pytest.raises(PreconditionError):
        spectral_instance_test(LinearOperator([[1, 1], [0, 0]], plane,
                                              plane))


def test_dim2_extreme(l1, l2, diagonal):
    """Test both branches of the two-dimensional check."""
    report = dim2_extreme_check(LinearOperator.identity(l2))
    assert report.passed
    assert 'inf' == report.details['card']
    assert report.details['image_norms'] == [pytest.approx(1.0)] * 2

    report = dim2_extreme_check(diagonal, budget=20)
    assert report.passed
    assert 2 == report.details['card']

    with pytest.raises(PreconditionError):
        dim2_extreme_check(LinearOperator(np.eye(2), l1, l2))
    space = SpaceDescriptor.lp(2, 3)
    with pytest.raises(PreconditionError):
        dim2_extreme_check(LinearOperator.identity(space))
