# -*- coding: utf-8 -*-
#  Copyright (c) 2026, the PyCuboid developers
#  All rights reserved.
#  This file is part of the PyCuboid.
#  The contents are covered by the terms of the BSD license
#  which is included in the file license.txt, found at the root
#  of the PyCuboid source tree.
"""
Exception hierarchy shared by all PyCuboid modules.
"""


class CuboidError(Exception):
    pass


class GeometryError(CuboidError, ValueError):
    pass


class ConfigurationError(CuboidError):
    """Raised where a valid configuration is required but an invalid one was given."""

    def __init__(self, message, report=None):
        CuboidError.__init__(self, message)
        self.report = report


class ColoringError(CuboidError, ValueError):
    pass


class SolverTimeout(CuboidError):
    """A solver decision did not finish inside its time budget."""

    pass


class SearchError(CuboidError):
    pass


class FormatError(CuboidError, ValueError):
    pass
