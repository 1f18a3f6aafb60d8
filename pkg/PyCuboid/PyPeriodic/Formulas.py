# -*- coding: utf-8 -*-
#  Copyright (c) 2026, the PyCuboid developers
#  All rights reserved.
#  This file is part of the PyCuboid.
#  The contents are covered by the terms of the BSD license
#  which is included in the file license.txt, found at the root
#  of the PyCuboid source tree.
"""
##############################################################################

Closed-form periodic colorings and their products.

    checkerboard2    [1,1,1] F1   1 + (x+y+z) mod 2                       period (2,2,2)
    stripes4_ax1x1   [a,1,1] F1   x half-period stripe and (y+z) parity    period (2a,2,2)
    octant8_F1       [a,b,c] F1   ((x mod 2a)//a, (y mod 2b)//b, (z mod 2c)//c)
    oddxy8_F2        a,b odd  F2  (x mod 2, y mod 2, (z mod 2c)//c)        period (2,2,2c)
    allodd8_F3       all odd  F3  (x mod 2, y mod 2, z mod 2)              period (2,2,2)

The 3-bit tuples are numbered 1 + t0 + 2*t1 + 4*t2.

Date: 2026.10.19

##############################################################################
"""

# Core Library modules
import logging

# Third party modules
import numpy

# First party modules
from PyCuboid.Errors import ColoringError
from PyCuboid.PyGeometry.Cuboid import DimTriple, Freedom, orientations
from PyCuboid.PyPeriodic.PeriodicColoring import PeriodicColoring

log = logging.getLogger(__name__)


def _bits(t0, t1, t2):
    return 1 + t0 + 2 * t1 + 4 * t2


def _checkerboard2(dims):
    if tuple(dims) != (1, 1, 1):
        raise ColoringError("Error, checkerboard2 needs dims [1,1,1].")
    return Freedom.F1, (2, 2, 2), lambda x, y, z, o: 1 + (x + y + z) % 2


def _stripes4(dims):
    a, b, c = dims
    if (b, c) != (1, 1):
        raise ColoringError("Error, stripes4_ax1x1 needs dims [a,1,1].")
    return (
        Freedom.F1,
        (2 * a, 2, 2),
        lambda x, y, z, o: 1 + (x % (2 * a)) // a + 2 * ((y + z) % 2),
    )


def _octant8(dims):
    a, b, c = dims
    return (
        Freedom.F1,
        (2 * a, 2 * b, 2 * c),
        lambda x, y, z, o: _bits((x % (2 * a)) // a, (y % (2 * b)) // b, (z % (2 * c)) // c),
    )


def _oddxy8(dims):
    a, b, c = dims
    if a % 2 == 0 or b % 2 == 0:
        raise ColoringError("Error, oddxy8_F2 needs odd sides a and b (got %s)." % (dims,))
    return (
        Freedom.F2,
        (2, 2, 2 * c),
        lambda x, y, z, o: _bits(x % 2, y % 2, (z % (2 * c)) // c),
    )


def _allodd8(dims):
    if any(d % 2 == 0 for d in dims):
        raise ColoringError("Error, allodd8_F3 needs all sides odd (got %s)." % (dims,))
    return Freedom.F3, (2, 2, 2), lambda x, y, z, o: _bits(x % 2, y % 2, z % 2)


FORMULAS = {
    "checkerboard2": _checkerboard2,
    "stripes4_ax1x1": _stripes4,
    "octant8_F1": _octant8,
    "oddxy8_F2": _oddxy8,
    "allodd8_F3": _allodd8,
}


def formula_coloring(name, dims):
    """
    Build a named closed-form periodic coloring.

    Usage:

    pc = formula_coloring("octant8_F1", (3, 2, 1))

    Output: pc is a PeriodicColoring; ColoringError is raised for an unknown
    name or dims the formula does not cover.
    """
    if name not in FORMULAS:
        raise ColoringError("Error, unknown formula coloring %r." % name)
    dims = DimTriple.parse(dims)
    freedom, period, func = FORMULAS[name](dims)
    return PeriodicColoring.from_function(name, dims, freedom, period, func)


def _permutation(o, dims):
    """sigma with o[k] == dims[sigma[k]]."""
    free = [0, 1, 2]
    sigma = []
    for side in o:
        for j in free:
            if dims[j] == side:
                sigma.append(j)
                free.remove(j)
                break
    return sigma


def _orientation_classes(base, freedom):
    if base.freedom != Freedom.F1 and len(base.orientations) != 1:
        raise ColoringError("Error, orientation_class needs a single-orientation base coloring.")
    dims = base.dims
    freedom = Freedom.F3 if freedom is None else Freedom.parse(freedom)
    targets = orientations(dims, freedom)
    sigmas = [_permutation(o, dims) for o in targets]
    period = tuple(
        int(numpy.lcm.reduce([base.period[s[k]] for s in sigmas])) for k in range(3)
    )
    k = base.k
    grid = numpy.meshgrid(*[numpy.arange(p) for p in period], indexing="ij")
    tables = []
    for i, sigma in enumerate(sigmas):
        # cuboid at x with sides o is the base cuboid at y, y[sigma[k]] = x[k]
        y = [None] * 3
        for axis in range(3):
            y[sigma[axis]] = grid[axis]
        base_table = base.table[0]
        tables.append(
            i * k
            + base_table[y[0] % base.period[0], y[1] % base.period[1], y[2] % base.period[2]]
        )
    name = "%s*orientation_class(F%d)" % (base.name, freedom)
    return PeriodicColoring(name, dims, freedom, period, numpy.stack(tables))


def _z_parity_layers(base):
    if any(o[2] != 1 for o in base.orientations):
        raise ColoringError("Error, z_parity_layers needs height 1 in every orientation.")
    period = base.period[:2] + (int(numpy.lcm(base.period[2], 2)),)
    reps = [1, 1, 1, period[2] // base.period[2]]
    table = numpy.tile(base.table, reps)
    z = numpy.arange(period[2]) % 2
    table = table + base.k * z[numpy.newaxis, numpy.newaxis, numpy.newaxis, :]
    return PeriodicColoring(base.name + "*z_parity_layers", base.dims, base.freedom, period, table)


PARTITIONS = ("orientation_class", "z_parity_layers")


def product_coloring(base, partition, freedom=None):
    """
    Split the cuboids into classes colored by copies of base with disjoint
    palettes.

    Usage:

    pc = product_coloring(formula_coloring("octant8_F1", (3, 2, 1)), "orientation_class", 3)

    Input: partition "orientation_class" lifts a one-orientation base to
    freedom (default F3), class i using colors i*k+1..(i+1)*k;
    "z_parity_layers" doubles the palette of a base whose cuboids all have
    height 1 by the parity of z.

    Output: pc is a PeriodicColoring.
    """
    if partition == "orientation_class":
        return _orientation_classes(base, freedom)
    if partition == "z_parity_layers":
        return _z_parity_layers(base)
    raise ColoringError("Error, partition must be one of %s." % ", ".join(PARTITIONS))
