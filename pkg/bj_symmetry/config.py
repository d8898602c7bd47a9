# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""Default configuration for BJ-Symmetry.

Every value can be overridden on the Flask application config. Library
functions read these through :data:`bj_symmetry.proxies.current_config`, so
they also work outside an application context with the defaults below.
"""

BJ_SYMMETRY_TOLERANCES = {
    'analytic': 1e-9,
    'numeric': 1e-7,
    'zero': 1e-12,
    'norming': 1e-10,
    'attainment': 1e-8,
    'cluster': 1e-6,
    'rank': 1e-9,
    'companion': 1e-6,
    'unit': 1e-9,
    'spectral': 1e-7,
}
"""Named tolerances.

``analytic`` and ``numeric`` are the relative orthogonality margins of the
two decision procedures. ``zero`` is the relative threshold under which a
coordinate counts as zero for sign-pattern logic. ``attainment`` bounds the
relative gap between ``||Tx||`` and ``||T||`` for points of ``M_T`` and
``cluster`` is the merge radius of attainment points.

.. code-block:: python

    BJ_SYMMETRY_TOLERANCES = dict(BJ_SYMMETRY_TOLERANCES, numeric=1e-6)
"""

BJ_SYMMETRY_MIN_P = 1 + 1e-6
"""Smallest admissible finite exponent above 1."""

BJ_SYMMETRY_MAX_P = 1e6
"""Largest admissible finite exponent (``inf`` itself is allowed)."""

BJ_SYMMETRY_SAMPLE_BUDGET = 64
"""Number of members sampled for norming sets of direct sums."""

BJ_SYMMETRY_ASCENT_STARTS = 32
"""Random starts of the operator norm ascent (coordinate starts are added)."""

BJ_SYMMETRY_NESTED_STARTS = 8
"""Random starts used for norm evaluations inside a one-dimensional search."""

BJ_SYMMETRY_ASCENT_ITERATIONS = 200
"""Maximum projected-gradient iterations per start."""

BJ_SYMMETRY_POLISH_ITERATIONS = 50
"""Maximum power-iteration polish steps after the ascent."""

BJ_SYMMETRY_MAX_NORM_EVALUATIONS = 10000
"""Cap on operator norm evaluations spent on a single verdict."""

BJ_SYMMETRY_MAX_SIGN_ENUMERATION = 20
"""Largest ``n`` for which the exact ``l_inf^n`` domain norm is enumerated."""

BJ_SYMMETRY_ENTIRE_SPHERE_FRACTION = 0.9
"""Fraction of attaining random starts that marks ``M_T`` as the sphere."""

BJ_SYMMETRY_BUDGET = 500
"""Default number of candidate trials per falsifier strategy."""

BJ_SYMMETRY_GRID_POINTS = 2001
"""Points of the vector grid oracle."""

BJ_SYMMETRY_OPERATOR_GRID_POINTS = 201
"""Points of the operator grid oracle (refined twice around its minimum)."""

BJ_SYMMETRY_PROFILE_POINTS = 1001
"""Rows of an emitted ``lambda,norm`` profile."""

BJ_SYMMETRY_REPORT_DIR = '.'
"""Default directory for persisted reports.

The ``--out`` option of the command line overrides it, and the
``BJ_REPORT_DIR`` environment variable overrides both.
"""

BJ_SYMMETRY_SUITES = {
    'prop-2.1': 'bj_symmetry.suites:PointSymmetryConsistencySuite',
    'th-2.2': 'bj_symmetry.suites:AttainmentCharacterizationSuite',
    'th-2.3': 'bj_symmetry.suites:KernelAnnihilationSuite',
    'lemma-2.5': 'bj_symmetry.suites:MinusConeSuite',
    'th-2.6': 'bj_symmetry.suites:LeftSymmetricZeroSuite',
    'gamma-2.11': 'bj_symmetry.suites:RankOneEmbeddingSuite',
    'th-2.13': 'bj_symmetry.suites:DirectSumSuite',
    'th-2.14': 'bj_symmetry.suites:L1ClassificationSuite',
    'th-3.1': 'bj_symmetry.suites:SmoothNotRightSymmetricSuite',
    'prop-3.2': 'bj_symmetry.suites:RightSymmetricImageSuite',
    'th-3.3': 'bj_symmetry.suites:Dim2ExtremeSuite',
    'th-3.4': 'bj_symmetry.suites:SpectralNullitySuite',
    'th-3.5': 'bj_symmetry.suites:IdentityKernelSuite',
}
"""Mapping of suite id to the import path of its :class:`Suite` class."""

BJ_SYMMETRY_SUITE_ALIASES = {
    'point-symmetry-consistency': 'prop-2.1',
    'attainment-characterization': 'th-2.2',
    'kernel-annihilation': 'th-2.3',
    'minus-cone-lemma': 'lemma-2.5',
    'left-symmetric-zero': 'th-2.6',
    'rank-one-embedding': 'gamma-2.11',
    'direct-sum-classification': 'th-2.13',
    'l1-classification': 'th-2.14',
    'smooth-not-right-symmetric': 'th-3.1',
    'right-symmetric-image': 'prop-3.2',
    'dim2-extreme': 'th-3.3',
    'spectral-nullity': 'th-3.4',
    'identity-kernel': 'th-3.5',
}
"""Descriptive names accepted in place of a suite id."""
