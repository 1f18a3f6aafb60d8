# -*- coding: utf-8 -*-
#  Copyright (c) 2026, the PyCuboid developers
#  All rights reserved.
#  This file is part of the PyCuboid.
#  The contents are covered by the terms of the BSD license
#  which is included in the file license.txt, found at the root
#  of the PyCuboid source tree.
"""
Critical subconfigurations.

A configuration is critical when deleting any one cuboid lowers its
chromatic number. Deleting a vertex lowers chi by at most one, so a
deletion keeps chi = K exactly when the rest is not (K-1)-colorable.
"""

# Core Library modules
import logging

# First party modules
from PyCuboid.Errors import SearchError
from PyCuboid.PyChroma.Coloring import chromatic_number, k_colorable
from PyCuboid.PyGraph.ContactGraph import build_contact_graph

log = logging.getLogger(__name__)


def _keeps_chi(g, chi_target, budget, engine):
    if chi_target <= 1:
        return g.n > 0
    return k_colorable(g, chi_target - 1, budget=budget, engine=engine) is None


def criticality_reduce(cfg, chi_target, budget=None, engine="sat", check=True):
    """
    Remove cuboids while the chromatic number stays chi_target.

    Usage:

    result = criticality_reduce(cfg, 5)

    Input: cfg is a Configuration with chromatic number chi_target; budget
    seconds per decision. Deletions are tried in index order, and the scan
    restarts from index 0 after each removal.

    Output: result is a critical Configuration keeping the original order.
    SearchError is raised when cfg does not have chromatic number chi_target.
    """
    g = build_contact_graph(cfg)
    if check:
        chi = chromatic_number(g, budget=budget, engine=engine).chi
        if chi != chi_target:
            raise SearchError(
                "Error, configuration has chromatic number %d, not %d." % (chi, chi_target)
            )
    keep = list(range(len(cfg)))
    i = 0
    while i < len(keep):
        trial = keep[:i] + keep[i + 1 :]
        if _keeps_chi(g.subgraph(trial), chi_target, budget, engine):
            log.debug("removed cuboid %d, %d left", keep[i], len(trial))
            keep = trial
            i = 0
        else:
            i += 1
    log.info("critical subconfiguration: %d of %d cuboids", len(keep), len(cfg))
    return cfg.subset(keep)


def is_critical(cfg, chi_target, budget=None, engine="sat"):
    """True if every single deletion leaves a (chi_target-1)-colorable configuration."""
    g = build_contact_graph(cfg)
    for i in range(len(cfg)):
        rest = g.subgraph([j for j in range(len(cfg)) if j != i])
        if _keeps_chi(rest, chi_target, budget, engine):
            return False
    return True
