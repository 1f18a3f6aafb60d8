# -*- coding: utf-8 -*-
#  Copyright (c) 2026, the PyCuboid developers
#  All rights reserved.
#  This file is part of the PyCuboid.
#  The contents are covered by the terms of the BSD license
#  which is included in the file license.txt, found at the root
#  of the PyCuboid source tree.
"""
Package-wide constants and their environment overrides.

PYCUBOID_TIME_LIMIT   seconds allowed for one k-colorability decision (60).
PYCUBOID_SOLVER       SAT backend used by the chroma module (glucose3).

Command line flags always win over the environment.
"""

# Core Library modules
import os

MAX_COORD = 2 ** 31 - 1

DEFAULT_TIME_LIMIT = 60.0

DEFAULT_SOLVER = "glucose3"

# appendix colchoice order
PALETTE = ["yellow", "red", "blue", "white", "black", "green"]

PALETTE_RGB = {
    "yellow": (1.0, 1.0, 0.0),
    "red": (1.0, 0.0, 0.0),
    "blue": (0.0, 0.0, 1.0),
    "white": (1.0, 1.0, 1.0),
    "black": (0.0, 0.0, 0.0),
    "green": (0.0, 0.5, 0.0),
}

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")


def GetTimeLimit(value=None):
    """
    Resolve the time budget of one solver decision.

    Usage:

    result = GetTimeLimit(value)

    Input: value is an explicit number of seconds or None.

    Output: a positive float, or None when the budget is disabled (value <= 0).
    """
    if value is None:
        raw = os.environ.get("PYCUBOID_TIME_LIMIT")
        if raw is None:
            return DEFAULT_TIME_LIMIT
        try:
            value = float(raw)
        except ValueError:
            raise ValueError(
                "Error, PYCUBOID_TIME_LIMIT must be a number, got %r." % raw
            )
    value = float(value)
    if value <= 0:
        return None
    return value


def GetSolverName(value=None):
    """Resolve the SAT backend name."""
    if value:
        return value
    return os.environ.get("PYCUBOID_SOLVER", DEFAULT_SOLVER)


def PaletteName(color):
    """
    Name of a 1-based color index; indices beyond the six appendix colors
    continue as color7, color8, ...
    """
    if color <= len(PALETTE):
        return PALETTE[color - 1]
    return "color%d" % color


def PaletteRGB(color):
    """RGB triple of a 1-based color index, deterministic beyond the palette."""
    if color <= len(PALETTE):
        return PALETTE_RGB[PALETTE[color - 1]]
    # golden-ratio hue walk
    h = (color * 0.618033988749895) % 1.0
    i = int(h * 6)
    f = h * 6 - i
    q, t = 1.0 - f, f
    return [(1.0, t, 0.0), (q, 1.0, 0.0), (0.0, 1.0, t),
            (0.0, q, 1.0), (t, 0.0, 1.0), (1.0, 0.0, q)][i % 6]
