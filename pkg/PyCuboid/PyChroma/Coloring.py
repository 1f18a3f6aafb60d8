# -*- coding: utf-8 -*-
#  Copyright (c) 2026, the PyCuboid developers
#  All rights reserved.
#  This file is part of the PyCuboid.
#  The contents are covered by the terms of the BSD license
#  which is included in the file license.txt, found at the root
#  of the PyCuboid source tree.
"""
##############################################################################

Proper colorings of contact graphs and exact chromatic numbers.

Colors are 1-based. chromatic_number starts from a greedy saturation
coloring and lowers the palette one color at a time, each step being an
exact k-colorability decision, until the decision is unsat or the palette
equals the clique number.

The decision engine is "sat" (python-sat over the clause encoding) or
"dsatur" (backtracking); both give the same answers.

Date: 2026.10.19

##############################################################################
"""

# Core Library modules
import collections
import logging
import time

# Third party modules
import networkx

# First party modules
from PyCuboid.Errors import ColoringError
from PyCuboid.PyChroma.DsaturColoring import dsatur_k_colorable
from PyCuboid.PyChroma.SatColoring import sat_k_colorable
from PyCuboid.PyGraph.ContactGraph import max_clique
from PyCuboid.Settings import GetTimeLimit

log = logging.getLogger(__name__)

ENGINES = {"sat": sat_k_colorable, "dsatur": dsatur_k_colorable}


class Coloring(tuple):
    """One positive color index per vertex."""

    def __new__(cls, colors):
        colors = [int(c) for c in colors]
        for c in colors:
            if c < 1:
                raise ColoringError("Error, colors must be integers larger than 0 (got %d)." % c)
        return super(Coloring, cls).__new__(cls, colors)

    @property
    def num_colors(self):
        return len(set(self))

    @property
    def max_color(self):
        return max(self) if self else 0

    def compact(self):
        """Relabel the colors in use to 1..num_colors in order of first appearance."""
        rank = {c: i + 1 for i, c in enumerate(dict.fromkeys(self))}
        return Coloring(rank[c] for c in self)

    def __repr__(self):
        return "Coloring(%s)" % list(self)


class ColoringCheck(collections.namedtuple("ColoringCheck", ["ok", "edge"])):
    """Verdict of verify_coloring; edge is the first monochromatic edge or None."""

    __slots__ = ()

    def __bool__(self):
        return self.ok

    __nonzero__ = __bool__


ChromaResult = collections.namedtuple(
    "ChromaResult", ["chi", "witness", "clique", "greedy", "decisions"]
)
ChromaResult.__doc__ = """
chi: the chromatic number; witness: a proper Coloring with exactly chi colors;
clique: the maximum clique used as lower bound; greedy: the starting color
count; decisions: (k, verdict, seconds) for every exact decision made.
"""


def verify_coloring(g, col):
    """
    Check that no edge of g joins two vertices of equal color.

    Usage:

    result = verify_coloring(g, col)

    Input: g is a ContactGraph, col a sequence of positive colors.

    Output: result is a ColoringCheck; ColoringError is raised when the
    length of col differs from the vertex count.
    """
    col = Coloring(col)
    if len(col) != g.n:
        raise ColoringError(
            "Error, coloring has %d entries but the graph has %d vertices." % (len(col), g.n)
        )
    for i, j in g.edges():
        if col[i] == col[j]:
            return ColoringCheck(False, (i, j))
    return ColoringCheck(True, None)


def to_networkx(g):
    G = networkx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def greedy_bound(g):
    """Saturation-degree greedy coloring (an upper bound on chi)."""
    if g.n == 0:
        return Coloring([])
    found = networkx.greedy_color(to_networkx(g), strategy="saturation_largest_first")
    return Coloring(found[v] + 1 for v in range(g.n))


def k_colorable(
    g,
    k,
    budget=None,
    engine="sat",
    symmetry_breaking=True,
    hint=None,
    clique=None,
    solver=None,
):
    """
    Exact k-colorability decision.

    Usage:

    result = k_colorable(g, k, budget)

    Input: g is a ContactGraph; k an integer larger than 0; budget seconds
    (None reads PYCUBOID_TIME_LIMIT, a value <= 0 disables it); engine "sat"
    or "dsatur"; symmetry_breaking fixes a maximum clique to colors 1..w;
    hint a coloring tried first; clique a precomputed maximum clique.

    Output: result is a Coloring with colors in 1..k or None (unsat).
    SolverTimeout is raised when the budget is exhausted.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError("Error, parameter k must be an integer and larger than 0.")
    if engine not in ENGINES:
        raise ValueError("Error, engine must be one of %s." % ", ".join(sorted(ENGINES)))
    budget = GetTimeLimit(budget)
    if g.n == 0:
        return Coloring([])
    fixed = ()
    if symmetry_breaking:
        if clique is None:
            deadline = None if budget is None else time.monotonic() + budget
            clique = max_clique(g, deadline=deadline)
        fixed = tuple(clique)
    if engine == "sat":
        colors = sat_k_colorable(g, k, budget=budget, clique=fixed, hint=hint, solver=solver)
    else:
        colors = dsatur_k_colorable(g, k, budget=budget, clique=fixed, hint=hint)
    return None if colors is None else Coloring(colors)


def chromatic_number(g, budget=None, engine="sat", symmetry_breaking=True, solver=None, hint=None):
    """
    Exact chromatic number with a witness.

    Usage:

    result = chromatic_number(g, budget)

    Input: g is a ContactGraph; budget seconds per k-decision (see
    k_colorable); engine and solver as for k_colorable; hint a proper
    coloring used instead of the greedy one when it has fewer colors.

    Output: result is a ChromaResult. An empty graph has chi 0.
    """
    budget = GetTimeLimit(budget)
    if g.n == 0:
        return ChromaResult(0, Coloring([]), [], 0, [])
    best = greedy_bound(g)
    greedy = best.num_colors
    if hint is not None and len(hint) == g.n and verify_coloring(g, hint):
        if Coloring(hint).num_colors < greedy:
            best = Coloring(hint).compact()
    deadline = None if budget is None else time.monotonic() + budget
    clique = max_clique(g, deadline=deadline)
    omega = len(clique)
    decisions = []
    log.debug("chi search: n=%d greedy=%d omega=%d", g.n, greedy, omega)
    k = best.num_colors - 1
    while k >= omega:
        start = time.time()
        found = k_colorable(
            g,
            k,
            budget=budget if budget is not None else 0,
            engine=engine,
            symmetry_breaking=symmetry_breaking,
            hint=best,
            clique=clique,
            solver=solver,
        )
        decisions.append((k, "sat" if found is not None else "unsat", time.time() - start))
        if found is None:
            break
        best = found.compact()
        k = best.num_colors - 1
    witness = best.compact()
    log.info("chi=%d (greedy %d, clique %d, %d decisions)", witness.num_colors, greedy, omega, len(decisions))
    return ChromaResult(witness.num_colors, witness, clique, greedy, decisions)


def parity_coloring(cfg):
    """
    Color by (x mod 2, y mod 2, z mod 2) of the root.

    Proper for any configuration whose cuboids all have odd sides: two
    touching odd boxes differ in parity along the axis where they abut.
    """
    for i, cub in enumerate(cfg):
        if any(d % 2 == 0 for d in cub.dims):
            raise ColoringError("Error, cuboid %d has an even side; parity coloring needs odd sides." % i)
    return Coloring(1 + (x % 2) + 2 * (y % 2) + 4 * (z % 2) for (x, y, z) in (c.root for c in cfg))


if __name__ == "__main__":

    from PyCuboid.PyGraph.ContactGraph import ContactGraph

    g = ContactGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    print(greedy_bound(g), chromatic_number(g, budget=10))
