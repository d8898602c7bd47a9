# -*- coding: utf-8 -*-
#
# This file is part of BJ-Symmetry.
# Copyright (C) 2026 BJ-Symmetry developers.
#
# BJ-Symmetry is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation; either version 2 of the License, or (at your option)
# any later version.

"""BJ-Symmetry errors."""


class BJSymmetryError(Exception):
    """General BJ-Symmetry error."""


class InputError(BJSymmetryError):
    """Raised when an argument is outside the domain of an operation."""


class DimensionMismatchError(InputError):
    """Raised when coordinates do not match the space dimension."""


class UnknownSuiteError(InputError):
    """Raised when a verification suite id is not registered."""


class UnsupportedSpaceError(BJSymmetryError):
    """Raised when an operation is not available for a space kind."""


class PreconditionError(BJSymmetryError):
    """Raised when a named precondition of a construction fails."""

    def __init__(self, condition, message=None):
        """Initialize with the name of the failed condition."""
        super(PreconditionError, self).__init__(message or condition)
        self.condition = condition


class PreconditionNotEstablishedError(BJSymmetryError):
    """Raised when a precondition can be neither confirmed nor refuted."""


class NumericFailureError(BJSymmetryError):
    """Raised when a numeric search ends without a valid answer."""


class NotFoundError(BJSymmetryError):
    """Raised when a search budget is exhausted."""


class InternalInconsistencyError(BJSymmetryError):
    """Raised when two decision procedures disagree beyond tolerance."""

    def __init__(self, first, second):
        """Keep both disagreeing results."""
        super(InternalInconsistencyError, self).__init__(
            'Decision procedures disagree: {0!r} != {1!r}'.format(
                first, second))
        self.first = first
        self.second = second
