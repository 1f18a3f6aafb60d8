# -*- coding: utf-8 -*-
#  Copyright (c) 2026, the PyCuboid developers
#  All rights reserved.
#  This file is part of the PyCuboid.
#  The contents are covered by the terms of the BSD license
#  which is included in the file license.txt, found at the root
#  of the PyCuboid source tree.
"""
##############################################################################

Free-corner neighbour bound.

In any finite arrangement, take the cuboids meeting the lowest unit slab.
They all rest on the same floor and their footprints tile part of a plane,
so one of them has no footprint touching its front (y = 0) or right (x = A)
edge. Placed as c0 = [0,A]x[0,B]x[0,C], that cuboid has a free corner:

    every neighbour has root z >= 0 (nothing lies below the floor),
    a neighbour touching the face y = 0 or x = A has root z >= 1.

Its candidate neighbours are the allowed cuboids that touch c0 under these
two rules. The rules are invariant under the reflection (x, y) -> (-y, -x),
so the centers (A,B,C) and (B,A,C) always give the same count.

The bound for one center orientation is the largest number of pairwise
non-colliding candidates (an independence number of the collision graph);
n_bound is the maximum over all allowed center orientations. Every graph
of the class has a vertex of degree at most n_bound, so the chromatic
number is at most n_bound + 1.

Date: 2026.10.19

##############################################################################
"""

# Core Library modules
import collections
import itertools
import logging
import time

# Third party modules
import numpy
from scipy import optimize, sparse

# First party modules
from PyCuboid.Errors import GeometryError, SolverTimeout
from PyCuboid.PyGeometry.Cuboid import (
    Cuboid,
    DimTriple,
    Freedom,
    collide_mask,
    orientations,
    touch_mask,
    unit_cells,
)
from PyCuboid.PyGraph.CliqueSearch import max_independent_set

log = logging.getLogger(__name__)


NeighborCandidate = collections.namedtuple("NeighborCandidate", ["cuboid"])

BoundResult = collections.namedtuple(
    "BoundResult", ["dims", "freedom", "n_value", "per_orientation"]
)


def _free_corner(roots, sides, center_orientation):
    x, y, z = roots[:, 0], roots[:, 1], roots[:, 2]
    on_free_face = (x == center_orientation[0]) | (y + sides[:, 1] == 0)
    return (z >= 0) & ~(on_free_face & (z < 1))


def enumerate_neighbors(center_orientation, dims, freedom, margin=0):
    """
    All candidate neighbours of the center [0,A]x[0,B]x[0,C].

    Usage:

    result = enumerate_neighbors((3, 2, 1), (1, 2, 3), Freedom.F3)

    Input: center_orientation is the oriented side triple (A,B,C) of the
    center, which must be allowed for dims under freedom; margin widens the
    root window by that many units per side.

    Output: result is a list of NeighborCandidate ordered by orientation,
    then root.
    """
    allowed = orientations(dims, freedom)
    center_orientation = tuple(int(v) for v in center_orientation)
    if center_orientation not in allowed:
        raise GeometryError(
            "Error, center %r is not an allowed orientation of %s." % (center_orientation, DimTriple.parse(dims))
        )
    center = Cuboid((0, 0, 0), center_orientation)
    reach = [max(o[k] for o in allowed) for k in range(3)]
    axes = [
        numpy.arange(-reach[k] - margin, center_orientation[k] + margin + 1, dtype=numpy.int64)
        for k in range(3)
    ]
    grid = numpy.stack(numpy.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, 3)
    result = []
    for o in allowed:
        sides = numpy.broadcast_to(numpy.asarray(o, dtype=numpy.int64), grid.shape)
        keep = (
            touch_mask(grid, sides, center)
            & ~collide_mask(grid, sides, center)
            & _free_corner(grid, sides, center_orientation)
        )
        for root in grid[keep]:
            result.append(NeighborCandidate(Cuboid(root.tolist(), o)))
    log.debug("center %r: %d candidates", center_orientation, len(result))
    return result


def collision_adjacency(candidates):
    """Bitset adjacency of the collision graph over the candidates."""
    n = len(candidates)
    adj = [0] * n
    if n == 0:
        return adj
    roots = numpy.array([c.cuboid.root for c in candidates], dtype=numpy.int64)
    sides = numpy.array([c.cuboid.dims for c in candidates], dtype=numpy.int64)
    for i in range(n - 1):
        hits = numpy.nonzero(collide_mask(roots[i + 1 :], sides[i + 1 :], candidates[i].cuboid))[0]
        for j in hits:
            j = int(j) + i + 1
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return adj


def _cell_constraints(candidates):
    """Sparse 0/1 matrix with one row per unit cell covered by two or more candidates."""
    covering = collections.defaultdict(list)
    for i, cand in enumerate(candidates):
        for cell in unit_cells(cand.cuboid):
            covering[cell].append(i)
    rows = [idx for idx in covering.values() if len(idx) > 1]
    data = numpy.ones(sum(len(r) for r in rows))
    row_ind = numpy.fromiter(itertools.chain.from_iterable([k] * len(r) for k, r in enumerate(rows)), dtype=numpy.int64)
    col_ind = numpy.fromiter(itertools.chain.from_iterable(rows), dtype=numpy.int64)
    return sparse.csr_matrix((data, (row_ind, col_ind)), shape=(len(rows), len(candidates)))


def independence_number(candidates, method="milp", budget=None):
    """
    Largest number of pairwise non-colliding candidates.

    Usage:

    result = independence_number(candidates)

    Input: candidates is a sequence of NeighborCandidate; method is "milp"
    (scipy.optimize.milp with one at-most-one row per unit cell, exact since
    integer boxes collide iff they share a cell) or "bnb" (branch and bound on
    the complement of the collision graph); budget seconds or None.

    Output: a non-negative int. SolverTimeout is raised when the budget runs out.
    """
    candidates = list(candidates)
    n = len(candidates)
    if n == 0:
        return 0
    if method == "bnb":
        deadline = None if budget is None else time.monotonic() + budget
        return len(max_independent_set(collision_adjacency(candidates), deadline=deadline))
    if method != "milp":
        raise ValueError("Error, method must be 'milp' or 'bnb'.")
    A = _cell_constraints(candidates)
    if A.shape[0] == 0:
        return n
    options = {} if budget is None else {"time_limit": budget}
    res = optimize.milp(
        c=-numpy.ones(n),
        constraints=optimize.LinearConstraint(A, -numpy.inf, 1),
        integrality=numpy.ones(n),
        bounds=optimize.Bounds(0, 1),
        options=options,
    )
    if res.status == 1:
        raise SolverTimeout("Independence number did not finish within its budget (%s)." % res.message)
    if res.status != 0:
        raise RuntimeError("Error, milp failed: %s" % res.message)
    return int(round(-res.fun))


def n_bound(dims, freedom, method="milp", budget=None):
    """
    Free-corner neighbour bound over every allowed center orientation.

    Usage:

    result = n_bound((1, 1, 2), Freedom.F2)

    Output: result is a BoundResult with n_value the maximum of
    per_orientation, a dict orientation -> independence number.
    """
    dims = DimTriple.parse(dims)
    freedom = Freedom.parse(freedom)
    per = collections.OrderedDict()
    for center in orientations(dims, freedom):
        per[center] = independence_number(
            enumerate_neighbors(center, dims, freedom), method=method, budget=budget
        )
        log.debug("n bound %s F%d center %r: %d", dims, freedom, center, per[center])
    return BoundResult(dims, freedom, max(per.values()), per)


def chi_upper_bound(result):
    """Chromatic number bound n_value + 1 of a BoundResult."""
    return result.n_value + 1


def n_table(freedom, c, a_max, b_min=1, method="milp", budget=None):
    """
    Rows (a, b, n) of n_bound([a,b,c]) for b_min <= b <= a <= a_max.

    Usage:

    rows = n_table(Freedom.F2, 2, 4)
    """
    if a_max < 1 or c < 1:
        raise ValueError("Error, parameters a_max and c must be integers larger than 0.")
    rows = []
    for a in range(1, a_max + 1):
        for b in range(b_min, a + 1):
            rows.append((a, b, n_bound((a, b, c), freedom, method=method, budget=budget).n_value))
    return rows


if __name__ == "__main__":

    print(n_bound((1, 1, 1), 3))
    print(n_bound((1, 1, 2), 2))
