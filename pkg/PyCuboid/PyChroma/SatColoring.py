# -*- coding: utf-8 -*-
#  Copyright (c) 2026, the PyCuboid developers
#  All rights reserved.
#  This file is part of the PyCuboid.
#  The contents are covered by the terms of the BSD license
#  which is included in the file license.txt, found at the root
#  of the PyCuboid source tree.
"""
##############################################################################

k-colorability as propositional satisfiability.

Variable v*k + i (i = 1..k) is true if vertex v takes color i. Every vertex
gets the clause (v_1 or ... or v_k) and every edge vw gets not(v_i and w_i)
for each color i. A solution is read back by giving each vertex its smallest
true color.

The budget is enforced by a timer thread that interrupts the solver.

Date: 2026.10.19

##############################################################################
"""

# Core Library modules
import logging
import threading
import time

# Third party modules
from pysat.solvers import Solver, SolverNames

# First party modules
from PyCuboid.Errors import SolverTimeout
from PyCuboid.Settings import GetSolverName

log = logging.getLogger(__name__)


def var(v, i, k):
    """Variable of vertex v (0-based) having color i (1-based)."""
    return v * k + i


def encode(g, k, clique=()):
    """
    CNF clauses of the k-coloring problem of g.

    clique, when given, is a sequence of pairwise adjacent vertices fixed to
    colors 1, 2, ... in order by unit clauses.
    """
    clauses = []
    for v in range(g.n):
        clauses.append([var(v, i, k) for i in range(1, k + 1)])
    for v, w in g.edges():
        for i in range(1, k + 1):
            clauses.append([-var(v, i, k), -var(w, i, k)])
    for pos, v in enumerate(clique):
        clauses.append([var(v, pos + 1, k)])
    return clauses


def decode(model, n, k):
    truth = set(lit for lit in model if lit > 0)
    colors = []
    for v in range(n):
        for i in range(1, k + 1):
            if var(v, i, k) in truth:
                colors.append(i)
                break
        else:
            raise RuntimeError("Error, solver model leaves vertex %d uncolored." % v)
    return colors


def _supported(name):
    known = set()
    for aliases in vars(SolverNames).values():
        if isinstance(aliases, (list, tuple)):
            known.update(aliases)
    return name in known


def sat_k_colorable(g, k, budget=None, clique=(), hint=None, solver=None):
    """
    Decide whether g has a proper k-coloring.

    Usage:

    result = sat_k_colorable(g, k, budget)

    Input: g is a ContactGraph; k the palette size; budget seconds or None;
    clique vertices to fix to colors 1..len(clique); hint an optional coloring
    whose colors are tried first; solver a python-sat backend name.

    Output: result is a list of colors in 1..k, or None when no k-coloring
    exists. SolverTimeout is raised when the budget runs out.
    """
    name = GetSolverName(solver)
    if not _supported(name):
        raise ValueError("Error, unknown SAT backend %r." % name)
    if len(clique) > k:
        return None
    clauses = encode(g, k, clique)
    start = time.time()
    with Solver(name=name, bootstrap_with=clauses) as s:
        if hint is not None:
            phases = [var(v, c, k) for v, c in enumerate(hint) if 1 <= c <= k]
            try:
                s.set_phases(phases)
            except NotImplementedError:
                log.debug("backend %s ignores phase hints", name)
        timer = None
        if budget is not None:
            timer = threading.Timer(budget, s.interrupt)
            timer.daemon = True
            timer.start()
        try:
            status = s.solve_limited(expect_interrupt=True)
        finally:
            if timer is not None:
                timer.cancel()
        elapsed = time.time() - start
        if status is None:
            log.debug("k=%d interrupted after %.2fs", k, elapsed)
            raise SolverTimeout(
                "k=%d decision did not finish within %.1f seconds." % (k, budget)
            )
        log.debug(
            "k=%d %s in %.2fs (%d vars, %d clauses)",
            k,
            "sat" if status else "unsat",
            elapsed,
            g.n * k,
            len(clauses),
        )
        if not status:
            return None
        return decode(s.get_model(), g.n, k)
