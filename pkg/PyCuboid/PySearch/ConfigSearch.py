# -*- coding: utf-8 -*-
#  Copyright (c) 2026, the PyCuboid developers
#  All rights reserved.
#  This file is part of the PyCuboid.
#  The contents are covered by the terms of the BSD license
#  which is included in the file license.txt, found at the root
#  of the PyCuboid source tree.
"""
##############################################################################

Pseudorandom search for configurations with a large chromatic number.

A trial seeds a few pairwise non-touching cuboids in the box [0,M]^3 and
then keeps adding one cuboid at a position of maximal score:

    algorithm 1  score = number of distinct colors among the would-be
                 neighbours; the configuration is recolored exactly after
                 every placement, and the trial stops once chi reaches the
                 target
    algorithm 2  score = number of would-be neighbours; chi is computed once
                 at the end

Positions are all (root, orientation) pairs inside the box that collide
with nothing placed so far, in lexicographic order of root then
orientation; ties are drawn with the trial's PCG64 generator. A trial that
overshoots the target drops its most recent cuboids, and a trial that hits
it returns a critical subconfiguration.

Date: 2026.10.19

##############################################################################
"""

# Core Library modules
import collections
import logging
import os

# Third party modules
import numpy

# First party modules
from PyCuboid.Errors import SearchError
from PyCuboid.PyChroma.Coloring import chromatic_number
from PyCuboid.PyFormat.Appendix import ConfigDocument, dump_json
from PyCuboid.PyGeometry.Cuboid import (
    Configuration,
    Cuboid,
    DimTriple,
    Freedom,
    collide_mask,
    orientations,
    touch_mask,
)
from PyCuboid.PyGraph.ContactGraph import build_contact_graph
from PyCuboid.PySearch.Criticality import criticality_reduce

log = logging.getLogger(__name__)


class SearchRandom(object):
    """Seeded PCG64 generator; identical seeds give identical draws on every platform."""

    def __init__(self, seed=0):
        self.seed = int(seed)
        self.rng = numpy.random.Generator(numpy.random.PCG64(self.seed))

    def index(self, n):
        """Uniform integer in [0, n)."""
        return int(self.rng.integers(n))

    def integers(self, low, high):
        """Uniform integers in [low, high) elementwise."""
        return self.rng.integers(low, high)

    def choice(self, items):
        return items[self.index(len(items))]


class SearchParams(object):
    """
    Parameters of one search trial (seed) or a series of trials (seed,
    seed+1, ...).
    """

    def __init__(
        self,
        dims,
        freedom,
        chi0,
        n0,
        box=None,
        n00=3,
        seed=0,
        algorithm=2,
        trials=1,
        budget=None,
        engine="sat",
    ):
        self.dims = DimTriple.parse(dims)
        self.freedom = Freedom.parse(freedom)
        self.box = 4 * max(self.dims) if box is None else int(box)
        self.chi0 = int(chi0)
        self.n0 = int(n0)
        self.n00 = int(n00)
        self.seed = int(seed)
        self.algorithm = int(algorithm)
        self.trials = int(trials)
        self.budget = budget
        self.engine = engine
        self.check()

    def check(self):
        if self.algorithm not in (1, 2):
            raise SearchError("Error, parameter algorithm must be 1 or 2.")
        if self.n00 < 0 or self.n0 < 1:
            raise SearchError("Error, parameters n00 and n0 must be integers, n0 larger than 0.")
        if self.n00 > self.n0:
            raise SearchError("Error, parameter n00 must not exceed n0.")
        if self.chi0 < 1:
            raise SearchError("Error, parameter chi0 must be an integer and larger than 0.")
        if self.box < max(self.dims):
            raise SearchError("Error, box %d is smaller than the longest side %d." % (self.box, max(self.dims)))
        if self.trials < 1:
            raise SearchError("Error, parameter trials must be an integer and larger than 0.")

    def with_seed(self, seed):
        params = SearchParams.__new__(SearchParams)
        params.__dict__.update(self.__dict__)
        params.seed = int(seed)
        return params

    def __repr__(self):
        return "SearchParams(dims=%s, F%d, box=%d, n00=%d, n0=%d, chi0=%d, seed=%d, algorithm=%d)" % (
            self.dims,
            self.freedom,
            self.box,
            self.n00,
            self.n0,
            self.chi0,
            self.seed,
            self.algorithm,
        )


SearchStep = collections.namedtuple("SearchStep", ["step", "root", "orientation", "score", "chi"])


def trace_line(s):
    """'step x,y,z a,b,c score chi' with chi '-' when not computed."""
    return "%d %s %s %d %s" % (
        s.step,
        ",".join(str(v) for v in s.root),
        ",".join(str(v) for v in s.orientation),
        s.score,
        "-" if s.chi is None else str(s.chi),
    )


SearchOutcome = collections.namedtuple(
    "SearchOutcome", ["found", "configuration", "chi", "seed", "trace", "coloring"]
)


def placements(dims, freedom, box):
    """
    All (root, sides) fitting in [0,box]^3, lexicographic by root then
    orientation index.
    """
    allowed = orientations(dims, freedom)
    roots, sides, keys = [], [], []
    for oi, o in enumerate(allowed):
        axes = [numpy.arange(0, box - o[k] + 1, dtype=numpy.int64) for k in range(3)]
        grid = numpy.stack(numpy.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, 3)
        roots.append(grid)
        sides.append(numpy.broadcast_to(numpy.asarray(o, dtype=numpy.int64), grid.shape))
        keys.append(numpy.full(len(grid), oi))
    roots = numpy.concatenate(roots)
    sides = numpy.concatenate(sides)
    keys = numpy.concatenate(keys)
    order = numpy.lexsort((keys, roots[:, 2], roots[:, 1], roots[:, 0]))
    return roots[order], sides[order]


def seed_nontouching(dims, freedom, box, n00, rng, retries=1000):
    """
    n00 cuboids in [0,box]^3 that pairwise neither collide nor touch.

    Usage:

    cfg = seed_nontouching((2, 2, 1), 1, 20, 5, SearchRandom(7))

    Output: a Configuration; SearchError when a cuboid cannot be placed
    within retries draws.
    """
    dims = DimTriple.parse(dims)
    allowed = orientations(dims, freedom)
    if n00 < 0:
        raise SearchError("Error, parameter n00 must be an integer, not negative.")
    if box < max(dims):
        raise SearchError("Error, box %d is smaller than the longest side %d." % (box, max(dims)))
    placed = []
    for count in range(n00):
        roots = numpy.array([c.root for c in placed], dtype=numpy.int64).reshape(-1, 3)
        sides = numpy.array([c.dims for c in placed], dtype=numpy.int64).reshape(-1, 3)
        for attempt in range(retries):
            o = allowed[rng.index(len(allowed))]
            root = rng.integers(0, box - numpy.asarray(o) + 1)
            cub = Cuboid(root.tolist(), o)
            if not (collide_mask(roots, sides, cub) | touch_mask(roots, sides, cub)).any():
                placed.append(cub)
                break
        else:
            raise SearchError(
                "Error, could not place seed cuboid %d of %d in a box of side %d." % (count + 1, n00, box)
            )
    return Configuration(dims, freedom, placed)


class _PlacementScan(object):
    """Live placement candidates with their contacts to the placed cuboids."""

    def __init__(self, params):
        self.roots, self.sides = placements(params.dims, params.freedom, params.box)
        self.alive = numpy.ones(len(self.roots), dtype=bool)
        self.counts = numpy.zeros(len(self.roots), dtype=numpy.int64)
        self.contacts = []

    def add(self, cub):
        self.alive &= ~collide_mask(self.roots, self.sides, cub)
        hits = touch_mask(self.roots, self.sides, cub)
        self.counts += hits
        self.contacts.append(hits)

    def color_scores(self, coloring):
        seen = collections.defaultdict(lambda: numpy.zeros(len(self.roots), dtype=bool))
        for hits, c in zip(self.contacts, coloring):
            seen[c] |= hits
        score = numpy.zeros(len(self.roots), dtype=numpy.int64)
        for mask in seen.values():
            score += mask
        return score


def run_search(params):
    """
    One search trial.

    Usage:

    outcome = run_search(SearchParams((2, 2, 1), 1, chi0=5, n0=60, box=12, seed=3))

    Output: outcome is a SearchOutcome; found is True when a configuration
    with chromatic number chi0 was reached, and configuration is then
    critical. Identical params give identical outcomes and traces.
    """
    rng = SearchRandom(params.seed)
    cfg = seed_nontouching(params.dims, params.freedom, params.box, params.n00, rng)
    scan = _PlacementScan(params)
    for cub in cfg:
        scan.add(cub)
    trace = []
    coloring = None
    chi = None
    if params.algorithm == 1:
        result = chromatic_number(build_contact_graph(cfg, check=False), budget=params.budget, engine=params.engine)
        chi, coloring = result.chi, result.witness
    while len(cfg) < params.n0 and not (params.algorithm == 1 and chi >= params.chi0):
        if not scan.alive.any():
            log.info("seed %d: box saturated at %d cuboids", params.seed, len(cfg))
            break
        score = scan.color_scores(coloring) if params.algorithm == 1 else scan.counts
        live = numpy.nonzero(scan.alive)[0]
        best = score[live].max()
        ties = live[score[live] == best]
        pick = int(ties[rng.index(len(ties))])
        cub = Cuboid(scan.roots[pick].tolist(), scan.sides[pick].tolist())
        cfg = cfg.with_cuboid(cub)
        scan.add(cub)
        if params.algorithm == 1:
            hint = list(coloring) + [coloring.max_color + 1 if coloring else 1]
            result = chromatic_number(
                build_contact_graph(cfg, check=False), budget=params.budget, engine=params.engine, hint=hint
            )
            chi, coloring = result.chi, result.witness
        step = SearchStep(len(cfg), tuple(cub.root), tuple(cub.dims), int(best), chi)
        trace.append(step)
        log.debug("seed %d: %s", params.seed, trace_line(step))
    if params.algorithm == 2 or chi is None:
        result = chromatic_number(build_contact_graph(cfg, check=False), budget=params.budget, engine=params.engine)
        chi, coloring = result.chi, result.witness
    while chi > params.chi0 and len(cfg) > params.n00:
        cfg = cfg.without(len(cfg) - 1)
        result = chromatic_number(build_contact_graph(cfg, check=False), budget=params.budget, engine=params.engine)
        chi, coloring = result.chi, result.witness
    found = chi == params.chi0
    if found:
        cfg = criticality_reduce(cfg, chi, budget=params.budget, engine=params.engine, check=False)
        coloring = chromatic_number(build_contact_graph(cfg, check=False), budget=params.budget, engine=params.engine).witness
    log.info("seed %d: found=%s chi=%d n=%d", params.seed, found, chi, len(cfg))
    return SearchOutcome(found, cfg, chi, params.seed, trace, coloring)


def run_trials(params, out_dir=None):
    """
    Run params.trials trials with seeds params.seed, params.seed+1, ...

    Output: dict seed -> SearchOutcome. With out_dir, every trial writes
    seed<S>.trace and, when found, seed<S>.json.
    """
    outcomes = collections.OrderedDict()
    if out_dir is not None and not os.path.isdir(out_dir):
        os.makedirs(out_dir)
    for t in range(params.trials):
        seed = params.seed + t
        outcome = run_search(params.with_seed(seed))
        outcomes[seed] = outcome
        if out_dir is None:
            continue
        with open(os.path.join(out_dir, "seed%d.trace" % seed), "w") as f:
            for step in outcome.trace:
                f.write(trace_line(step) + "\n")
        if outcome.found:
            doc = ConfigDocument.from_configuration(
                outcome.configuration,
                colors=outcome.coloring,
                chi=outcome.chi,
                name="search-seed%d" % seed,
            )
            with open(os.path.join(out_dir, "seed%d.json" % seed), "w") as f:
                f.write(dump_json(doc))
    return outcomes
