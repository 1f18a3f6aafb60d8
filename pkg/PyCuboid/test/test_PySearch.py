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
import logging
import os

# Third party modules
import pytest

# First party modules
from PyCuboid.Errors import SearchError
from PyCuboid.PyChroma.Coloring import chromatic_number, verify_coloring
from PyCuboid.PyFormat.Appendix import load_fixture
from PyCuboid.PyGeometry.Cuboid import Cuboid
from PyCuboid.PyGraph.ContactGraph import build_contact_graph, validate_configuration
from PyCuboid.PySearch.ConfigSearch import (
    SearchParams,
    SearchRandom,
    placements,
    run_search,
    run_trials,
    seed_nontouching,
    trace_line,
)
from PyCuboid.PySearch.Criticality import criticality_reduce, is_critical


def _fixture(name):
    return load_fixture(name).configuration()


# ==============================================================================
# criticality
# ==============================================================================
@pytest.mark.timeout(120)
@pytest.mark.parametrize("name,chi", [("221", 5), ("421", 6)])
def test_listings_are_critical(name, chi):
    assert is_critical(_fixture(name), chi, budget=60)


@pytest.mark.timeout(120)
def test_reduce_drops_a_far_cuboid():
    cfg = _fixture("221")
    padded = cfg.with_cuboid(Cuboid((100, 100, 100), (2, 2, 1)))
    assert not is_critical(padded, 5, budget=60)
    reduced = criticality_reduce(padded, 5, budget=60)
    assert reduced == cfg
    assert criticality_reduce(cfg, 5, budget=60) == cfg


def test_reduce_checks_chi():
    with pytest.raises(SearchError):
        criticality_reduce(_fixture("221"), 4, budget=60)


# ==============================================================================
# seeding and placements
# ==============================================================================
def test_placements_order():
    roots, sides = placements((2, 1, 1), 2, 3)
    keys = [tuple(r) + (0 if tuple(s) == (2, 1, 1) else 1,) for r, s in zip(roots.tolist(), sides.tolist())]
    assert keys == sorted(keys)
    assert len(roots) == 36
    assert (roots + sides).max() <= 3


def test_seed_nontouching():
    assert len(seed_nontouching((2, 2, 1), 1, 20, 0, SearchRandom(0))) == 0
    for n00 in (2, 5):
        cfg = seed_nontouching((2, 2, 1), 1, 20, n00, SearchRandom(7))
        assert len(cfg) == n00
        assert validate_configuration(cfg)
        assert build_contact_graph(cfg).num_edges() == 0
    with pytest.raises(SearchError):
        seed_nontouching((2, 2, 1), 1, 2, 3, SearchRandom(0), retries=20)


def test_search_random_is_reproducible():
    a, b = SearchRandom(42), SearchRandom(42)
    assert [a.index(1000) for _ in range(20)] == [b.index(1000) for _ in range(20)]


def test_params_check():
    with pytest.raises(SearchError):
        SearchParams((2, 2, 1), 1, chi0=5, n0=2, n00=3)
    with pytest.raises(SearchError):
        SearchParams((2, 2, 1), 1, chi0=5, n0=10, algorithm=3)
    with pytest.raises(SearchError):
        SearchParams((2, 2, 1), 1, chi0=0, n0=10)
    with pytest.raises(SearchError):
        SearchParams((4, 2, 1), 1, chi0=5, n0=10, box=3)
    params = SearchParams((2, 2, 1), 1, chi0=5, n0=10)
    assert params.box == 8
    assert params.with_seed(9).seed == 9 and params.seed == 0


# ==============================================================================
# search runs
# ==============================================================================
def test_trivial_search():
    out = run_search(SearchParams((1, 1, 1), 1, chi0=2, n0=1, n00=1, box=4))
    assert not out.found
    assert len(out.configuration) == 1
    assert out.chi == 1
    out = run_search(SearchParams((1, 1, 1), 1, chi0=1, n0=1, n00=1, box=4))
    assert out.found and out.chi == 1


@pytest.mark.timeout(120)
def test_algorithm_one_tracks_chi():
    params = SearchParams((1, 1, 1), 1, chi0=3, n0=14, n00=3, box=4, algorithm=1, seed=5, budget=30)
    out = run_search(params)
    # unit cubes are two-colorable by parity
    assert not out.found
    assert out.chi <= 2
    chis = [s.chi for s in out.trace]
    assert all(c is not None for c in chis)
    assert all(0 <= b - a <= 1 for a, b in zip(chis, chis[1:]))
    assert validate_configuration(out.configuration)


@pytest.mark.timeout(120)
def test_algorithm_two_is_deterministic():
    params = SearchParams((2, 2, 1), 1, chi0=5, n0=30, n00=3, box=12, seed=11, budget=30)
    first = run_search(params)
    second = run_search(params)
    assert [trace_line(s) for s in first.trace] == [trace_line(s) for s in second.trace]
    assert first.configuration == second.configuration
    assert validate_configuration(first.configuration)
    assert all(s.chi is None for s in first.trace)
    if first.found:
        assert first.chi == 5
    else:
        assert first.chi < 5
    g = build_contact_graph(first.configuration)
    assert verify_coloring(g, first.coloring)


@pytest.mark.timeout(120)
def test_search_without_reaching_target():
    out = run_search(SearchParams((8, 2, 1), 2, chi0=7, n0=8, n00=3, box=16, seed=1, budget=30))
    assert not out.found
    assert out.chi < 7


@pytest.mark.timeout(300)
def test_run_trials_writes_traces(tmpdir):
    params = SearchParams((2, 2, 1), 1, chi0=5, n0=20, n00=3, box=12, seed=3, trials=2, budget=30)
    outcomes = run_trials(params, out_dir=str(tmpdir))
    assert list(outcomes) == [3, 4]
    for seed, outcome in outcomes.items():
        path = os.path.join(str(tmpdir), "seed%d.trace" % seed)
        assert os.path.exists(path)
        with open(path) as f:
            assert f.read().splitlines() == [trace_line(s) for s in outcome.trace]
        assert os.path.exists(os.path.join(str(tmpdir), "seed%d.json" % seed)) == outcome.found


@pytest.mark.slow
@pytest.mark.timeout(3600)
def test_search_sweep_for_critical_configurations(caplog):
    caplog.set_level(logging.INFO)
    params = SearchParams((2, 2, 1), 1, chi0=5, n0=40, n00=3, box=12, seed=0, trials=20, budget=120)
    outcomes = run_trials(params)
    found = [o for o in outcomes.values() if o.found]
    if not found:
        logging.getLogger(__name__).info("no chi=5 configuration in %d trials", len(outcomes))
    for outcome in found:
        g = build_contact_graph(outcome.configuration)
        assert chromatic_number(g, budget=120).chi == 5
        assert is_critical(outcome.configuration, 5, budget=120)
