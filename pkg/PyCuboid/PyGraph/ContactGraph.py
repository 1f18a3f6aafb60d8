# -*- coding: utf-8 -*-
#  Copyright (c) 2026, the PyCuboid developers
#  All rights reserved.
#  This file is part of the PyCuboid.
#  The contents are covered by the terms of the BSD license
#  which is included in the file license.txt, found at the root
#  of the PyCuboid source tree.
"""
##############################################################################

Contact graphs of cuboid configurations.

A configuration is checked by a Validator running small Validation steps
(orientation, collision); each violation is a log record collected by a
LogHandler, and the first record becomes the report. The contact graph has
one vertex per cuboid in input order and an edge for every touching pair;
adjacency is kept as Python int bitsets.

Date: 2026.10.19

##############################################################################
"""

# Core Library modules
import logging

# Third party modules
import numpy

# First party modules
from PyCuboid.Errors import ConfigurationError
from PyCuboid.PyGeometry.Cuboid import collide_mask, touch, touch_mask
from PyCuboid.PyGraph.CliqueSearch import bits_iter, max_clique as _max_clique_bits
from PyCuboid.PyGraph.CliqueSearch import popcount

log = logging.getLogger(__name__)

#: The default format for violation messages.
SIMPLE_FORMAT = "%(levelname)s: [%(check)s] %(message)s"


# ==============================================================================
# validation
# ==============================================================================
class LogHandler(logging.Handler):
    """A logging Handler that stores records until flushed."""

    def __init__(self):
        logging.Handler.__init__(self)
        self.logs = []

    @property
    def logmessages(self):
        return [self.format(record) for record in self.logs]

    def emit(self, record):
        self.logs.append(record)

    def flush(self):
        self.acquire()
        try:
            self.logs = []
        finally:
            self.release()


class Validation(object):
    """Base class of the configuration checks."""

    def __init__(self, log):
        self.log = logging.LoggerAdapter(log, {"check": type(self).__name__})

    def __call__(self, cfg):
        self.log.debug("Running %s", type(self).__name__)
        self.run(cfg)

    def run(self, cfg):
        raise NotImplementedError("Validation subclasses must implement the run method")


class OrientationValidation(Validation):
    """Every cuboid must use one of the oriented side triples allowed by the freedom class."""

    def run(self, cfg):
        allowed = set(cfg.allowed)
        for i, cub in enumerate(cfg):
            if tuple(cub.dims) not in allowed:
                self.log.error(
                    "Cuboid %(i)d has sides %(sides)s, not allowed for %(dims)s under F%(freedom)d",
                    {
                        "kind": "orientation",
                        "indices": (i,),
                        "i": i,
                        "sides": list(cub.dims),
                        "dims": str(cfg.dims),
                        "freedom": int(cfg.freedom),
                    },
                )


class CollisionValidation(Validation):
    """Interiors must be pairwise disjoint."""

    def run(self, cfg):
        roots, dims = cfg.arrays()
        for i in range(len(cfg) - 1):
            hits = numpy.nonzero(collide_mask(roots[i + 1 :], dims[i + 1 :], cfg[i]))[0]
            for j in hits:
                j = int(j) + i + 1
                self.log.error(
                    "Cuboids %(i)d and %(j)d collide",
                    {"kind": "collision", "indices": (i, j), "i": i, "j": j},
                )


VALIDATIONS = (OrientationValidation, CollisionValidation)


class ValidationReport(object):
    """
    Outcome of validate_configuration.

    ok is True for a valid configuration; otherwise kind and indices describe
    the first violation and messages lists every violation found.
    """

    def __init__(self, records=(), messages=()):
        records = list(records)
        self.ok = not records
        self.kind = records[0].args["kind"] if records else None
        self.indices = tuple(records[0].args["indices"]) if records else ()
        self.violations = [(r.args["kind"], tuple(r.args["indices"])) for r in records]
        self.messages = list(messages)

    def __bool__(self):
        return self.ok

    __nonzero__ = __bool__

    def __repr__(self):
        if self.ok:
            return "ValidationReport(ok)"
        return "ValidationReport(%s %r, %d violation(s))" % (
            self.kind,
            self.indices,
            len(self.violations),
        )


class Validator(object):
    """Runs the configuration checks and collects what they log."""

    def __init__(self, validations=VALIDATIONS, log_format=SIMPLE_FORMAT):
        self.log = logging.getLogger(__name__ + ".Validator")
        self.log.setLevel(logging.DEBUG)
        self.log.propagate = False
        self.log_format = log_format
        self.validations = [validation(self.log) for validation in validations]

    def __call__(self, cfg):
        return self.validate(cfg)

    def validate(self, cfg):
        handler = LogHandler()
        handler.setLevel(logging.WARNING)
        handler.setFormatter(logging.Formatter(self.log_format))
        self.log.addHandler(handler)
        try:
            for validation in self.validations:
                validation(cfg)
            return ValidationReport(handler.logs, handler.logmessages)
        finally:
            self.log.removeHandler(handler)
            handler.close()


def validate_configuration(cfg):
    """
    Check that a configuration is interior-disjoint and uses only allowed
    orientations.

    Usage:

    report = validate_configuration(cfg)

    Input: cfg is a Configuration.

    Output: report is a ValidationReport; bool(report) is True iff valid.
    """
    return Validator().validate(cfg)


# ==============================================================================
# contact graph
# ==============================================================================
class ContactGraph(object):
    """
    Immutable symmetric irreflexive graph on 0..n-1 stored as bitsets.

    adj[i] has bit j set iff i and j are adjacent.
    """

    __slots__ = ("_n", "_adj")

    def __init__(self, n, adj):
        adj = tuple(int(a) for a in adj)
        if len(adj) != n:
            raise ValueError("Error, adjacency needs one bitset per vertex.")
        for i, a in enumerate(adj):
            if (a >> i) & 1:
                raise ValueError("Error, vertex %d has a self-loop." % i)
            if a >> n:
                raise ValueError("Error, vertex %d has a neighbour outside 0..%d." % (i, n - 1))
            for j in bits_iter(a):
                if not (adj[j] >> i) & 1:
                    raise ValueError("Error, adjacency is not symmetric at (%d, %d)." % (i, j))
        self._n = n
        self._adj = adj

    @classmethod
    def from_edges(cls, n, edges):
        adj = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError("Error, vertex %d has a self-loop." % i)
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(n, adj)

    @property
    def n(self):
        return self._n

    @property
    def adj(self):
        return self._adj

    def __len__(self):
        return self._n

    def __eq__(self, other):
        return isinstance(other, ContactGraph) and self._adj == other._adj

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._adj)

    def __repr__(self):
        return "ContactGraph(n=%d, edges=%d)" % (self._n, self.num_edges())

    def has_edge(self, i, j):
        return bool((self._adj[i] >> j) & 1)

    def neighbors(self, i):
        return list(bits_iter(self._adj[i]))

    def degree(self, i):
        return popcount(self._adj[i])

    def degree_sequence(self):
        return [popcount(a) for a in self._adj]

    def edges(self):
        """Edges (i, j) with i < j in lexicographic order."""
        result = []
        for i, a in enumerate(self._adj):
            for j in bits_iter(a >> (i + 1)):
                result.append((i, i + 1 + j))
        return result

    def num_edges(self):
        return sum(self.degree_sequence()) // 2

    def subgraph(self, keep):
        """Induced subgraph on the vertices in keep, renumbered in the given order."""
        keep = list(keep)
        pos = {v: k for k, v in enumerate(keep)}
        adj = []
        for v in keep:
            a = 0
            for w in bits_iter(self._adj[v]):
                if w in pos:
                    a |= 1 << pos[w]
            adj.append(a)
        return ContactGraph(len(keep), adj)


def build_contact_graph(cfg, method="vectorised", check=True):
    """
    Contact graph of a configuration.

    Usage:

    g = build_contact_graph(cfg)

    Input: cfg is a Configuration; method is "vectorised" (numpy row scans)
    or "pairwise" (scalar touch over every pair); check validates cfg first.

    Output: g is a ContactGraph; ConfigurationError is raised for an invalid
    cfg.
    """
    if check:
        report = validate_configuration(cfg)
        if not report:
            raise ConfigurationError(
                "Error, configuration is not valid: %s" % "; ".join(report.messages), report
            )
    n = len(cfg)
    adj = [0] * n
    if method == "pairwise":
        for i in range(n):
            for j in range(i + 1, n):
                if touch(cfg[i], cfg[j]):
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
    elif method == "vectorised":
        roots, dims = cfg.arrays()
        for i in range(n - 1):
            hits = numpy.nonzero(touch_mask(roots[i + 1 :], dims[i + 1 :], cfg[i]))[0]
            for j in hits:
                j = int(j) + i + 1
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    else:
        raise ValueError("Error, method must be 'vectorised' or 'pairwise'.")
    g = ContactGraph(n, adj)
    log.debug("contact graph: %r", g)
    return g


def max_clique(g, deadline=None):
    """Vertices of one maximum clique of g, sorted."""
    return _max_clique_bits(list(g.adj), deadline=deadline)


def clique_number(g, deadline=None):
    """
    Exact clique number of a nonempty graph.

    For graphs of valid 3-D configurations the value is at most 4.
    """
    if g.n == 0:
        raise ValueError("Error, clique number needs a nonempty graph.")
    return len(max_clique(g, deadline=deadline))


def _closed_meet(p, q):
    return all(
        p.root[k] <= q.root[k] + q.dims[k] and q.root[k] <= p.root[k] + p.dims[k]
        for k in range(3)
    )


def common_point(boxes):
    """
    A point shared by pairwise intersecting closed boxes.

    Usage:

    point = common_point(boxes)

    Input: boxes is a sequence of Cuboid.

    Output: the componentwise maximum of the lower corners as a 3-tuple of
    ints when every pair meets on every axis, otherwise None.
    """
    boxes = list(boxes)
    if not boxes:
        return None
    for i in range(len(boxes)):
        for j in range(i + 1, len(boxes)):
            if not _closed_meet(boxes[i], boxes[j]):
                return None
    return tuple(max(b.root[k] for b in boxes) for k in range(3))


if __name__ == "__main__":

    from PyCuboid.PyGeometry.Cuboid import Configuration, Cuboid

    cfg = Configuration((1, 1, 1), 1, [Cuboid((0, 0, 0), (1, 1, 1)), Cuboid((1, 0, 0), (1, 1, 1))])
    print(validate_configuration(cfg))
    g = build_contact_graph(cfg)
    print(g, g.edges(), clique_number(g))
