# -*- coding: utf-8 -*-
#  Copyright (c) 2026, the PyCuboid developers
#  All rights reserved.
#  This file is part of the PyCuboid.
#  The contents are covered by the terms of the BSD license
#  which is included in the file license.txt, found at the root
#  of the PyCuboid source tree.
"""
##############################################################################

Smallest palette of a periodic coloring with a given period.

The torus graph has a vertex per (root in the fundamental domain,
orientation) and an edge whenever some translates of the two cuboids touch.
A cuboid touching its own translate is a loop, and then no periodic
coloring with that period exists.

Date: 2026.10.19

##############################################################################
"""

# Core Library modules
import collections
import logging
import math

# Third party modules
import numpy

# First party modules
from PyCuboid.PyChroma.Coloring import chromatic_number, k_colorable
from PyCuboid.PyGeometry.Cuboid import DimTriple, Freedom, orientations
from PyCuboid.PyGraph.ContactGraph import ContactGraph
from PyCuboid.PyPeriodic.PeriodicColoring import PeriodicColoring, touch_offsets

log = logging.getLogger(__name__)

PercoResult = collections.namedtuple("PercoResult", ["value", "coloring", "vertices"])
PercoResult.__doc__ = """
value: the smallest palette (an int), math.inf when the torus graph has a
loop, or None when it exceeds max_k; coloring: a PeriodicColoring attaining
value, or None; vertices: the torus graph size.
"""


def torus_graph(dims, freedom, period):
    """
    Torus contact graph, vertex index o*X*Y*Z + (x*Y + y)*Z + z.

    Output: (graph, loop) where loop is True if some cuboid touches its own
    translate; graph is None in that case.
    """
    dims = DimTriple.parse(dims)
    allowed = orientations(dims, freedom)
    period = tuple(int(p) for p in period)
    if len(period) != 3 or min(period) < 1:
        raise ValueError("Error, period must be three integers larger than 0.")
    cells = int(numpy.prod(period))
    grid = numpy.stack(
        numpy.meshgrid(*[numpy.arange(p) for p in period], indexing="ij"), axis=-1
    ).reshape(-1, 3)
    P = numpy.asarray(period, dtype=numpy.int64)
    adj = [0] * (cells * len(allowed))
    for oi, o in enumerate(allowed):
        for oj, o2 in enumerate(allowed):
            for d in touch_offsets(o, o2):
                folded = (grid + d) % P
                target = oj * cells + numpy.ravel_multi_index(folded.T, period)
                source = oi * cells + numpy.arange(cells)
                if (target == source).any():
                    log.debug("loop at offset %r, orientation %r", tuple(d), o)
                    return None, True
                for s, t in zip(source.tolist(), target.tolist()):
                    adj[s] |= 1 << t
                    adj[t] |= 1 << s
    return ContactGraph(len(adj), adj), False


def perco(dims, freedom, period, max_k=None, budget=None, engine="sat"):
    """
    Smallest number of colors of a proper periodic coloring with the given
    period.

    Usage:

    result = perco((2, 1, 1), 1, (6, 2, 2))

    Input: max_k, when given, first asks whether max_k colors suffice and
    reports value None if not; budget is per k-decision as in chroma.

    Output: result is a PercoResult. SolverTimeout propagates.
    """
    dims = DimTriple.parse(dims)
    freedom = Freedom.parse(freedom)
    g, loop = torus_graph(dims, freedom, period)
    if loop:
        return PercoResult(math.inf, None, len(orientations(dims, freedom)) * int(numpy.prod(period)))
    if max_k is not None:
        if k_colorable(g, int(max_k), budget=budget, engine=engine) is None:
            log.info("perco %s F%d %r exceeds %d", dims, freedom, tuple(period), max_k)
            return PercoResult(None, None, g.n)
    result = chromatic_number(g, budget=budget, engine=engine)
    table = numpy.asarray(result.witness, dtype=numpy.int64).reshape(
        (-1,) + tuple(int(p) for p in period)
    )
    name = "perco(%s,F%d,%s)" % (dims, freedom, "x".join(str(p) for p in period))
    pc = PeriodicColoring(name, dims, freedom, period, table)
    log.info("%s = %d", name, result.chi)
    return PercoResult(result.chi, pc, g.n)
