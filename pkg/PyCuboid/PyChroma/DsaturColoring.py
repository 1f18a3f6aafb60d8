# -*- coding: utf-8 -*-
#  Copyright (c) 2026, the PyCuboid developers
#  All rights reserved.
#  This file is part of the PyCuboid.
#  The contents are covered by the terms of the BSD license
#  which is included in the file license.txt, found at the root
#  of the PyCuboid source tree.
"""
##############################################################################

k-colorability by DSATUR backtracking.

The next vertex is the uncolored one seeing the most distinct colors
(ties: higher degree, then lower index). Colors are tried in increasing
order, and at most one color beyond those already in use, so permuted
palettes are never revisited.

Date: 2026.10.19

##############################################################################
"""

# Core Library modules
import logging
import time

# First party modules
from PyCuboid.Errors import SolverTimeout
from PyCuboid.PyGraph.CliqueSearch import bits_iter, popcount

log = logging.getLogger(__name__)


def dsatur_k_colorable(g, k, budget=None, clique=(), hint=None):
    """
    Decide whether g has a proper k-coloring.

    Same contract as sat_k_colorable; hint only orders the candidate colors.
    """
    n = g.n
    adj = g.adj
    if len(clique) > k:
        return None
    deadline = None if budget is None else time.monotonic() + budget
    colors = [0] * n
    # bit c-1 of seen[v] set when a neighbour of v has color c
    seen = [0] * n
    degree = [popcount(a) for a in adj]
    state = {"nodes": 0}

    def assign(v, c):
        colors[v] = c
        changed = []
        for w in bits_iter(adj[v]):
            if not (seen[w] >> (c - 1)) & 1:
                seen[w] |= 1 << (c - 1)
                changed.append(w)
        return changed

    def unassign(v, c, changed):
        colors[v] = 0
        for w in changed:
            seen[w] &= ~(1 << (c - 1))

    for pos, v in enumerate(clique):
        assign(v, pos + 1)
    used0 = len(clique)

    def pick():
        best, key = -1, None
        for v in range(n):
            if colors[v]:
                continue
            cand = (popcount(seen[v]), degree[v], -v)
            if key is None or cand > key:
                best, key = v, cand
        return best

    def search(done, used):
        if done == n:
            return True
        state["nodes"] += 1
        if deadline is not None and state["nodes"] % 512 == 0:
            if time.monotonic() > deadline:
                raise SolverTimeout("k=%d decision did not finish within %.1f seconds." % (k, budget))
        v = pick()
        top = min(k, used + 1)
        order = list(range(1, top + 1))
        if hint is not None and 1 <= hint[v] <= top:
            order.remove(hint[v])
            order.insert(0, hint[v])
        for c in order:
            if (seen[v] >> (c - 1)) & 1:
                continue
            changed = assign(v, c)
            if search(done + 1, max(used, c)):
                return True
            unassign(v, c, changed)
        return False

    found = search(used0, used0)
    log.debug("dsatur k=%d %s after %d nodes", k, "sat" if found else "unsat", state["nodes"])
    return list(colors) if found else None
