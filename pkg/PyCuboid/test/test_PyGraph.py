# -*- coding: utf-8 -*-
#  Copyright (c) 2026, the PyCuboid developers
#  All rights reserved.
#  This file is part of the PyCuboid.
#  The contents are covered by the terms of the BSD license
#  which is included in the file license.txt, found at the root
#  of the PyCuboid source tree.
"""
The script is used for testing.

Date: 2026.10.19
"""

# Core Library modules
import itertools
import logging

# Third party modules
import networkx
import numpy
import pytest

# First party modules
from PyCuboid.Errors import ConfigurationError
from PyCuboid.PyFormat.Appendix import list_fixtures, load_fixture
from PyCuboid.PyGeometry.Cuboid import Configuration, Cuboid
from PyCuboid.PyGraph.CliqueSearch import max_clique as max_clique_bits
from PyCuboid.PyGraph.CliqueSearch import max_independent_set, popcount
from PyCuboid.PyGraph.ContactGraph import (
    ContactGraph,
    Validator,
    build_contact_graph,
    clique_number,
    common_point,
    max_clique,
    validate_configuration,
)
from PyCuboid.test.randomconfig import random_configuration


def _fixture(name):
    return load_fixture(name).configuration()


# ==============================================================================
# validation
# ==============================================================================
def test_validate_fixtures():
    for name in list_fixtures():
        report = validate_configuration(_fixture(name))
        assert report.ok, name


def test_validate_collision():
    cfg = Configuration((1, 1, 1), 1, [Cuboid((0, 0, 0), (1, 1, 1)), Cuboid((0, 0, 0), (1, 1, 1))])
    report = validate_configuration(cfg)
    assert not report
    assert report.kind == "collision"
    assert report.indices == (0, 1)
    with pytest.raises(ConfigurationError) as info:
        build_contact_graph(cfg)
    assert info.value.report.kind == "collision"


def test_violations_are_reported_not_logged(caplog):
    caplog.set_level(logging.DEBUG)
    cfg = Configuration((1, 1, 1), 1, [Cuboid((0, 0, 0), (1, 1, 1)), Cuboid((0, 0, 0), (1, 1, 1))])
    report = validate_configuration(cfg)
    assert len(report.messages) == 1
    assert not [r for r in caplog.records if r.name.endswith(".Validator")]
    assert Validator().log.propagate is False


def test_validate_orientation():
    cfg = Configuration((2, 1, 1), 3, [Cuboid((0, 0, 0), (3, 1, 1))])
    report = validate_configuration(cfg)
    assert report.kind == "orientation"
    assert report.indices == (0,)
    # (1,2,1) needs freedom 3
    cfg = Configuration((2, 1, 1), 2, [Cuboid((0, 0, 0), (1, 1, 2))])
    assert validate_configuration(cfg).kind == "orientation"


def test_validate_reports_every_violation():
    cfg = Configuration(
        (1, 1, 1),
        1,
        [Cuboid((0, 0, 0), (1, 1, 1)), Cuboid((0, 0, 0), (1, 1, 1)), Cuboid((5, 5, 5), (2, 1, 1))],
    )
    report = validate_configuration(cfg)
    assert len(report.violations) == 2
    assert len(report.messages) == 2


# ==============================================================================
# graph type
# ==============================================================================
def test_graph_type():
    g = ContactGraph.from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    assert g.n == 4
    assert g.edges() == [(0, 1), (0, 2), (1, 2), (2, 3)]
    assert g.num_edges() == 4
    assert g.degree_sequence() == [2, 2, 3, 1]
    assert g.has_edge(3, 2) and not g.has_edge(0, 3)
    sub = g.subgraph([3, 2, 1])
    assert sub.edges() == [(0, 1), (1, 2)]
    with pytest.raises(ValueError):
        ContactGraph(2, [0b10, 0])
    with pytest.raises(ValueError):
        ContactGraph.from_edges(2, [(1, 1)])


def test_build_small():
    unit = (1, 1, 1)
    cfg = Configuration(unit, 1, [Cuboid((0, 0, 0), unit)])
    assert build_contact_graph(cfg).num_edges() == 0
    cfg = Configuration(unit, 1, [Cuboid((0, 0, 0), unit), Cuboid((0, 0, 1), unit)])
    assert build_contact_graph(cfg).edges() == [(0, 1)]
    assert build_contact_graph(Configuration(unit, 1, [])).n == 0


def test_build_methods_agree():
    for name in ("221", "821", "421alt", "611"):
        cfg = _fixture(name)
        assert build_contact_graph(cfg) == build_contact_graph(cfg, method="pairwise")
    assert build_contact_graph(_fixture("221")).n == 11


def test_build_is_reorder_invariant():
    cfg = _fixture("421")
    perm = numpy.random.default_rng(3).permutation(len(cfg)).tolist()
    shuffled = Configuration(cfg.dims, cfg.freedom, [cfg[i] for i in perm])
    g = build_contact_graph(cfg)
    h = build_contact_graph(shuffled)
    assert sorted(tuple(sorted((perm[i], perm[j]))) for i, j in h.edges()) == g.edges()


# ==============================================================================
# cliques
# ==============================================================================
def test_clique_number_fixture():
    assert clique_number(build_contact_graph(_fixture("821"))) == 4
    unit = (1, 1, 1)
    assert clique_number(build_contact_graph(Configuration(unit, 1, [Cuboid((0, 0, 0), unit)]))) == 1
    with pytest.raises(ValueError):
        clique_number(ContactGraph(0, []))


def test_max_clique_is_a_clique():
    g = build_contact_graph(_fixture("421"))
    clique = max_clique(g)
    for i, j in itertools.combinations(clique, 2):
        assert g.has_edge(i, j)


@pytest.mark.timeout(600)
def test_clique_bound_on_random_configurations():
    rng = numpy.random.default_rng(7)
    for trial in range(1000):
        dims = tuple(int(v) for v in rng.integers(1, 4, 3))
        freedom = int(rng.integers(1, 4))
        cfg = random_configuration(rng, dims, freedom, 14, 7)
        g = build_contact_graph(cfg)
        if g.n == 0:
            continue
        omega = clique_number(g)
        assert omega <= 4
        if trial % 10 == 0:
            G = networkx.Graph(g.edges())
            G.add_nodes_from(range(g.n))
            assert omega == max(len(c) for c in networkx.find_cliques(G))


def test_clique_search_against_networkx():
    rng = numpy.random.default_rng(1)
    for _ in range(50):
        n = int(rng.integers(1, 16))
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
        g = ContactGraph.from_edges(n, edges)
        G = networkx.Graph(edges)
        G.add_nodes_from(range(n))
        expect = max(len(c) for c in networkx.find_cliques(G))
        assert len(max_clique_bits(list(g.adj))) == expect
        mis = max_independent_set(list(g.adj))
        assert len(mis) == max(len(c) for c in networkx.find_cliques(networkx.complement(G)))
        assert all(not g.has_edge(i, j) for i, j in itertools.combinations(mis, 2))


def test_popcount():
    assert popcount(0) == 0
    assert popcount(0b101101) == 4


# ==============================================================================
# common point of boxes
# ==============================================================================
def test_common_point_examples():
    boxes = [
        Cuboid((0, 0, 0), (2, 2, 2)),
        Cuboid((1, 1, 1), (2, 2, 2)),
        Cuboid((1, 0, 0), (1, 2, 3)),
    ]
    assert common_point(boxes) == (1, 1, 1)
    assert common_point([Cuboid((0, 0, 0), (1, 1, 1)), Cuboid((3, 0, 0), (1, 1, 1))]) is None
    assert common_point([]) is None


def test_common_point_random():
    rng = numpy.random.default_rng(19)
    for _ in range(200):
        boxes = []
        for _ in range(int(rng.integers(2, 7))):
            lo = rng.integers(-3, 1, 3)
            hi = rng.integers(0, 4, 3)
            boxes.append(Cuboid.from_corners(lo.tolist(), numpy.maximum(hi, lo + 1).tolist()))
        # every box contains the origin
        point = common_point(boxes)
        assert point is not None
        for b in boxes:
            assert all(b.lo[k] <= point[k] <= b.hi[k] for k in range(3))
