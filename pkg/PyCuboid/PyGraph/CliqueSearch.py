# -*- coding: utf-8 -*-
#  Copyright (c) 2026, the PyCuboid developers
#  All rights reserved.
#  This file is part of the PyCuboid.
#  The contents are covered by the terms of the BSD license
#  which is included in the file license.txt, found at the root
#  of the PyCuboid source tree.
"""
##############################################################################

Exact maximum clique search on adjacency bitsets.

A graph on n vertices is a list adj of Python ints where bit j of adj[i] is
set iff i and j are adjacent. The search is a branch and bound with a
greedy coloring bound: vertices of the candidate set are colored greedily,
and a branch is cut once the current clique plus the color number of its
candidates cannot beat the best clique found so far.

Maximum independent sets are maximum cliques of the complement.

Date: 2026.10.19

##############################################################################
"""

# Core Library modules
import logging
import time

# First party modules
from PyCuboid.Errors import SolverTimeout

log = logging.getLogger(__name__)


def popcount(x):
    return bin(x).count("1")


def bits_iter(x):
    """Indices of the set bits of x, lowest first."""
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


def complement(adj):
    n = len(adj)
    full = (1 << n) - 1
    return [(full ^ adj[v]) & ~(1 << v) for v in range(n)]


def greedy_clique(adj):
    """A maximal clique grown from every start vertex; the largest is returned."""
    n = len(adj)
    order = sorted(range(n), key=lambda v: popcount(adj[v]), reverse=True)
    best = []
    for s in order:
        clique = [s]
        cand = adj[s]
        while cand:
            v = max(bits_iter(cand), key=lambda x: popcount(adj[x] & cand))
            clique.append(v)
            cand &= adj[v]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def _color_sort(cand, adj):
    """
    Greedy sequential coloring of the candidate set.

    Returns (order, bounds) with bounds[i] the color number of order[i];
    order is nondecreasing in color.
    """
    order = []
    bounds = []
    uncolored = cand
    color = 0
    while uncolored:
        color += 1
        q = uncolored
        while q:
            v = (q & -q).bit_length() - 1
            q &= ~(1 << v)
            q &= ~adj[v]
            uncolored &= ~(1 << v)
            order.append(v)
            bounds.append(color)
    return order, bounds


def max_clique(adj, deadline=None, lower=None):
    """
    One maximum clique of the graph given by adjacency bitsets.

    Usage:

    result = max_clique(adj, deadline)

    Input: adj is a list of int bitsets; deadline is an absolute
    time.monotonic() value or None; lower optionally seeds the incumbent.

    Output: result is a sorted list of vertex indices. SolverTimeout is
    raised when the deadline passes.
    """
    n = len(adj)
    if n == 0:
        return []
    best = list(lower) if lower else greedy_clique(adj)
    state = {"best": best, "nodes": 0}

    def expand(clique, cand):
        order, bounds = _color_sort(cand, adj)
        for i in range(len(order) - 1, -1, -1):
            if len(clique) + bounds[i] <= len(state["best"]):
                return
            state["nodes"] += 1
            if deadline is not None and state["nodes"] % 256 == 0:
                if time.monotonic() > deadline:
                    raise SolverTimeout("Clique search exceeded its time budget.")
            v = order[i]
            clique.append(v)
            sub = cand & adj[v]
            if sub:
                expand(clique, sub)
            elif len(clique) > len(state["best"]):
                state["best"] = list(clique)
            clique.pop()
            cand &= ~(1 << v)

    expand([], (1 << n) - 1)
    log.debug("clique search: n=%d omega=%d nodes=%d", n, len(state["best"]), state["nodes"])
    return sorted(state["best"])


def max_independent_set(adj, deadline=None):
    """One maximum independent set, as a maximum clique of the complement."""
    return max_clique(complement(adj), deadline=deadline)
