# -*- coding: utf-8 -*-
#  Copyright (c) 2026, the PyCuboid developers
#  All rights reserved.
#  This file is part of the PyCuboid.
#  The contents are covered by the terms of the BSD license
#  which is included in the file license.txt, found at the root
#  of the PyCuboid source tree.
"""
##############################################################################

Periodic colorings of all allowed cuboids of a class.

A PeriodicColoring stores an int array table[o, x, y, z] over the allowed
orientations o and the fundamental domain [0,X)x[0,Y)x[0,Z); the color of
a cuboid with root p and orientation o is table[o, p mod period].

Whether two cuboids touch depends only on their orientations and the
offset d between their roots, so verify_periodic enumerates the touching
(o, o2, d) triples once and compares the table with its own translate by d.

Date: 2026.10.19

##############################################################################
"""

# Core Library modules
import collections
import logging

# Third party modules
import numpy

# First party modules
from PyCuboid.Errors import ColoringError
from PyCuboid.PyChroma.Coloring import Coloring
from PyCuboid.PyGeometry.Cuboid import Cuboid, DimTriple, Freedom, orientations, touch_mask

log = logging.getLogger(__name__)


class PeriodicColoring(object):
    """
    Coloring of every allowed cuboid of (dims, freedom) that repeats with
    period (X, Y, Z).
    """

    def __init__(self, name, dims, freedom, period, table):
        self.name = name
        self.dims = DimTriple.parse(dims)
        self.freedom = Freedom.parse(freedom)
        self.orientations = orientations(self.dims, self.freedom)
        self.period = tuple(int(p) for p in period)
        if len(self.period) != 3 or min(self.period) < 1:
            raise ColoringError("Error, period must be three integers larger than 0.")
        table = numpy.asarray(table, dtype=numpy.int64)
        expected = (len(self.orientations),) + self.period
        if table.shape != expected:
            raise ColoringError(
                "Error, table shape %r does not match %r." % (table.shape, expected)
            )
        if table.min() < 1:
            raise ColoringError("Error, periodic coloring %s leaves a cell uncolored." % name)
        table.setflags(write=False)
        self.table = table

    @classmethod
    def from_function(cls, name, dims, freedom, period, func):
        """
        Tabulate func(x, y, z, orientation) over the fundamental domain;
        x, y, z are broadcast int arrays.
        """
        dims = DimTriple.parse(dims)
        freedom = Freedom.parse(freedom)
        x, y, z = numpy.meshgrid(*[numpy.arange(p) for p in period], indexing="ij")
        table = numpy.stack(
            [numpy.broadcast_to(func(x, y, z, o), x.shape) for o in orientations(dims, freedom)]
        )
        return cls(name, dims, freedom, period, table)

    @property
    def k(self):
        """Palette size (largest color)."""
        return int(self.table.max())

    @property
    def num_colors(self):
        return int(numpy.unique(self.table).size)

    def orientation_index(self, orientation):
        try:
            return self.orientations.index(tuple(int(v) for v in orientation))
        except ValueError:
            raise ColoringError(
                "Error, orientation %r is not allowed for %s under F%d."
                % (tuple(orientation), self.dims, self.freedom)
            )

    def color(self, root, orientation):
        oi = self.orientation_index(orientation)
        x, y, z = (int(r) % p for r, p in zip(root, self.period))
        return int(self.table[oi, x, y, z])

    def __repr__(self):
        return "PeriodicColoring(%s, dims=%s, F%d, period=%r, k=%d)" % (
            self.name,
            self.dims,
            self.freedom,
            self.period,
            self.k,
        )


class PeriodicCheck(collections.namedtuple("PeriodicCheck", ["ok", "first", "second", "color"])):
    """Verdict of verify_periodic; the remaining fields locate the first clash or are None."""

    __slots__ = ()

    def __bool__(self):
        return self.ok

    __nonzero__ = __bool__


def touch_offsets(o, o2, margin=0):
    """
    Offsets d such that the cuboid rooted at d with sides o2 touches the
    cuboid rooted at 0 with sides o. The window per axis is
    [-o2 - margin, o + margin].
    """
    axes = [numpy.arange(-o2[k] - margin, o[k] + margin + 1, dtype=numpy.int64) for k in range(3)]
    grid = numpy.stack(numpy.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, 3)
    sides = numpy.broadcast_to(numpy.asarray(o2, dtype=numpy.int64), grid.shape)
    return grid[touch_mask(grid, sides, Cuboid((0, 0, 0), o))]


def verify_periodic(pc, margin=0):
    """
    Check that no two touching cuboids share a color.

    Usage:

    result = verify_periodic(pc)

    Input: pc is a PeriodicColoring; margin widens the touch window.

    Output: result is a PeriodicCheck; when ok is False, first and second
    are touching Cuboids (first rooted in the fundamental domain) and color
    their common color. A cuboid touching its own translate is reported the
    same way.
    """
    table = pc.table
    for oi, o in enumerate(pc.orientations):
        for oj, o2 in enumerate(pc.orientations):
            for d in touch_offsets(o, o2, margin):
                shifted = numpy.roll(table[oj], shift=tuple(-int(v) for v in d), axis=(0, 1, 2))
                clash = table[oi] == shifted
                if clash.any():
                    p = tuple(int(v) for v in numpy.argwhere(clash)[0])
                    q = tuple(pv + int(dv) for pv, dv in zip(p, d))
                    first, second = Cuboid(p, o), Cuboid(q, o2)
                    color = int(table[oi][p])
                    log.debug("%s: %s and %s share color %d", pc.name, first, second, color)
                    return PeriodicCheck(False, first, second, color)
    return PeriodicCheck(True, None, None, None)


def inherit_coloring(pc, cfg):
    """
    Color a configuration by the periodic coloring: each cuboid takes
    pc.color(root, sides).
    """
    if tuple(sorted(cfg.dims)) != tuple(sorted(pc.dims)):
        raise ColoringError(
            "Error, configuration dims %s are not congruent to %s." % (cfg.dims, pc.dims)
        )
    return Coloring(pc.color(c.root, c.dims) for c in cfg)
