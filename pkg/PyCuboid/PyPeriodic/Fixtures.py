# -*- coding: utf-8 -*-
#  Copyright (c) 2026, the PyCuboid developers
#  All rights reserved.
#  This file is part of the PyCuboid.
#  The contents are covered by the terms of the BSD license
#  which is included in the file license.txt, found at the root
#  of the PyCuboid source tree.
"""
##############################################################################

Tabulated periodic colorings.

The tables live in data/periodic_tables.json, one list of rows per z layer,
"." for a blank cell. Plain tables are read as layer[z][y][x].

Domino tables (sides 2x1x1) only color the unit cells with even coordinate
sum; a cuboid covers exactly one such cell, and takes its color.

The six-color F3 domino table is given by a single layer at z = 1; layer z
is that layer moved by (2(1-z), 1-z) in (x, y), a knight move per level.

The stripe-shift families take their long side a as a parameter and are
generated, not read; the printed instances are kept for comparison.

Date: 2026.10.19

##############################################################################
"""

# Core Library modules
import json
import logging
import os

# Third party modules
import numpy

# First party modules
from PyCuboid.Errors import ColoringError
from PyCuboid.PyGeometry.Cuboid import DimTriple, Freedom, orientations
from PyCuboid.PyPeriodic.PeriodicColoring import PeriodicColoring
from PyCuboid.Settings import DATA_DIR

log = logging.getLogger(__name__)

TABLE_FILE = os.path.join(DATA_DIR, "periodic_tables.json")

# name -> (short side b, stripe count K)
STRIPE_FAMILIES = {
    "e_ax2x1_6col": (2, 6),
    "f_ax3x1_7col": (3, 7),
    "g_ax4x1_7col": (4, 7),
}

TABLE_FIXTURES = ("b_2x1x1_3col", "d_2x2x1_5col", "chi2_2x1x1_5col", "chi3_2x1x1_6col")

FIXTURES = TABLE_FIXTURES + tuple(sorted(STRIPE_FAMILIES))

_cache = {}


def load_tables(path=TABLE_FILE):
    if path not in _cache:
        with open(path) as f:
            _cache[path] = json.load(f)
    return _cache[path]


def parse_layer(rows):
    """Rows of space separated cells into an int array [row, col]; '.' is 0."""
    return numpy.array(
        [[0 if cell == "." else int(cell) for cell in row.split()] for row in rows],
        dtype=numpy.int64,
    )


def layers_xyz(layers, columns="x"):
    """Stack z layers into an array indexed [x, y, z]."""
    stack = numpy.stack([parse_layer(rows) for rows in layers])
    if columns == "x":
        return stack.transpose(2, 1, 0)
    return stack.transpose(1, 2, 0)


def domino_table(kappa0, dims, freedom):
    """
    Per-orientation tables from colors on even-sum cells: a cuboid with an
    odd-sum root takes the color of the next cell along its long side.
    """
    dims = DimTriple.parse(dims)
    if dims.sorted_view != (1, 1, 2):
        raise ColoringError("Error, domino tables need sides 2x1x1.")
    x, y, z = numpy.meshgrid(*[numpy.arange(p) for p in kappa0.shape], indexing="ij")
    even = (x + y + z) % 2 == 0
    if (kappa0[even] < 1).any():
        raise ColoringError("Error, domino table leaves an even cell blank.")
    tables = []
    for o in orientations(dims, freedom):
        axis = o.index(2)
        tables.append(numpy.where(even, kappa0, numpy.roll(kappa0, -1, axis=axis)))
    return numpy.stack(tables)


def knight_layers(base, base_z=1, shift=(2, 1)):
    """
    Domino colors on a cube of side len(base): layer z is base[y][x] read at
    (x + shift[0]*(base_z - z), y + shift[1]*(base_z - z)).
    """
    n = base.shape[0]
    x, y, z = numpy.meshgrid(numpy.arange(n), numpy.arange(n), numpy.arange(n), indexing="ij")
    step = base_z - z
    return base[(y + shift[1] * step) % n, (x + shift[0] * step) % n]


def stripe_coloring(name, a):
    """
    Stripe-shift coloring of [a,b,1] under F1 with K colors:

        1 + ((y - s) // b) mod K,  s = (2*((x mod 2a)//a) + z mod 2)*(2b - 1)

    period (2a, K*b, 2).
    """
    if name not in STRIPE_FAMILIES:
        raise ColoringError("Error, unknown stripe family %r." % name)
    if a is None or int(a) < 1:
        raise ColoringError("Error, parameter a must be an integer and larger than 0.")
    a = int(a)
    b, K = STRIPE_FAMILIES[name]

    def kappa(x, y, z, o):
        s = (2 * ((x % (2 * a)) // a) + z % 2) * (2 * b - 1)
        return 1 + ((y - s) // b) % K

    return PeriodicColoring.from_function(
        "%s(a=%d)" % (name, a), (a, b, 1), Freedom.F1, (2 * a, K * b, 2), kappa
    )


def printed_stripe_table(name):
    """The printed instance of a stripe family as (a, array[x, y, z])."""
    entry = load_tables()["stripe_shift_printed"][name]
    return entry["a"], layers_xyz(entry["layers"], columns="y")


def fixture_coloring(name, a=None):
    """
    Materialize a tabulated periodic coloring.

    Usage:

    pc = fixture_coloring("d_2x2x1_5col")
    pc = fixture_coloring("f_ax3x1_7col", a=5)

    Output: pc is a PeriodicColoring; ColoringError for an unknown name.
    """
    if name in STRIPE_FAMILIES:
        return stripe_coloring(name, a)
    if name not in TABLE_FIXTURES:
        raise ColoringError("Error, unknown periodic coloring %r." % name)
    entry = load_tables()[name]
    dims = DimTriple.parse(entry["dims"])
    freedom = Freedom.parse(entry["freedom"])
    if "knight_shift" in entry:
        kappa0 = knight_layers(
            parse_layer(entry["layers"][0]), entry["base_layer"], entry["knight_shift"]
        )
    else:
        kappa0 = layers_xyz(entry["layers"], entry.get("columns", "x"))
    if entry.get("domino"):
        table = domino_table(kappa0, dims, freedom)
    else:
        table = kappa0[numpy.newaxis]
    pc = PeriodicColoring(name, dims, freedom, kappa0.shape, table)
    if pc.k != entry["colors"]:
        log.warning("%s: table uses %d colors, %d declared", name, pc.k, entry["colors"])
    return pc
