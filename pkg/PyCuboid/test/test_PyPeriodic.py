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
import math

# Third party modules
import numpy
import pytest

# First party modules
from PyCuboid.Errors import ColoringError
from PyCuboid.PyChroma.Coloring import verify_coloring
from PyCuboid.PyGraph.ContactGraph import build_contact_graph
from PyCuboid.PyPeriodic.Fixtures import (
    FIXTURES,
    STRIPE_FAMILIES,
    fixture_coloring,
    knight_layers,
    load_tables,
    parse_layer,
    printed_stripe_table,
    stripe_coloring,
)
from PyCuboid.PyPeriodic.Formulas import formula_coloring, product_coloring
from PyCuboid.PyPeriodic.Perco import perco, torus_graph
from PyCuboid.PyPeriodic.PeriodicColoring import (
    PeriodicColoring,
    inherit_coloring,
    touch_offsets,
    verify_periodic,
)
from PyCuboid.test.randomconfig import random_configuration


# ==============================================================================
# the periodic coloring type
# ==============================================================================
def test_periodic_type():
    pc = formula_coloring("checkerboard2", (1, 1, 1))
    assert pc.k == 2 and pc.num_colors == 2
    assert pc.period == (2, 2, 2)
    assert pc.color((3, 4, -1), (1, 1, 1)) == pc.color((1, 0, 1), (1, 1, 1))
    with pytest.raises(ColoringError):
        pc.color((0, 0, 0), (2, 1, 1))
    with pytest.raises(ColoringError):
        PeriodicColoring("blank", (1, 1, 1), 1, (1, 1, 1), [[[[0]]]])
    with pytest.raises(ColoringError):
        PeriodicColoring("shape", (1, 1, 1), 1, (2, 1, 1), [[[[1]]]])


def test_touch_offsets_unit_cube():
    offsets = sorted(tuple(int(v) for v in d) for d in touch_offsets((1, 1, 1), (1, 1, 1)))
    assert offsets == [(-1, 0, 0), (0, -1, 0), (0, 0, -1), (0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_verify_finds_counterexamples():
    constant = PeriodicColoring("const", (1, 1, 1), 1, (1, 1, 1), [[[[1]]]])
    check = verify_periodic(constant)
    assert not check.ok
    assert not check
    assert check.color == 1
    table = formula_coloring("checkerboard2", (1, 1, 1)).table.copy()
    table[0, 0, 0, 0] = 2
    broken = PeriodicColoring("broken", (1, 1, 1), 1, (2, 2, 2), table)
    for margin in (0, 1):
        check = verify_periodic(broken, margin=margin)
        assert not check
        assert check.color == 2


# ==============================================================================
# closed-form colorings
# ==============================================================================
@pytest.mark.parametrize(
    "name,dims,k,period",
    [
        ("checkerboard2", (1, 1, 1), 2, (2, 2, 2)),
        ("stripes4_ax1x1", (3, 1, 1), 4, (6, 2, 2)),
        ("stripes4_ax1x1", (4, 1, 1), 4, (8, 2, 2)),
        ("stripes4_ax1x1", (7, 1, 1), 4, (14, 2, 2)),
        ("octant8_F1", (2, 2, 2), 8, (4, 4, 4)),
        ("octant8_F1", (3, 2, 1), 8, (6, 4, 2)),
        ("oddxy8_F2", (3, 3, 2), 8, (2, 2, 4)),
        ("allodd8_F3", (3, 1, 1), 8, (2, 2, 2)),
    ],
)
def test_formula_colorings(name, dims, k, period):
    pc = formula_coloring(name, dims)
    assert pc.k == k
    assert pc.period == period
    assert verify_periodic(pc)
    assert verify_periodic(pc, margin=1)


def test_formula_preconditions():
    with pytest.raises(ColoringError):
        formula_coloring("oddxy8_F2", (2, 3, 1))
    with pytest.raises(ColoringError, match=r"got \[2,1,1\]"):
        formula_coloring("oddxy8_F2", (2, 1, 1))
    with pytest.raises(ColoringError):
        formula_coloring("checkerboard2", (2, 1, 1))
    with pytest.raises(ColoringError, match=r"all sides odd \(got \[2,1,1\]\)"):
        formula_coloring("allodd8_F3", (2, 1, 1))
    with pytest.raises(ColoringError):
        formula_coloring("rainbow", (1, 1, 1))


# ==============================================================================
# tabulated colorings
# ==============================================================================
@pytest.mark.timeout(120)
@pytest.mark.parametrize(
    "name,k,period",
    [
        ("b_2x1x1_3col", 3, (6, 2, 2)),
        ("d_2x2x1_5col", 5, (10, 10, 2)),
        ("chi2_2x1x1_5col", 5, (10, 10, 2)),
        ("chi3_2x1x1_6col", 6, (12, 12, 12)),
    ],
)
def test_table_fixtures(name, k, period):
    pc = fixture_coloring(name)
    assert pc.k == k
    assert pc.period == period
    assert verify_periodic(pc)


def test_fixture_names():
    assert len(FIXTURES) == 7
    with pytest.raises(ColoringError):
        fixture_coloring("h_2x2x2_9col")
    with pytest.raises(ColoringError):
        fixture_coloring("e_ax2x1_6col")


def test_knight_layer_matches_printed_layer():
    entry = load_tables()["chi3_2x1x1_6col"]
    kappa0 = knight_layers(parse_layer(entry["layers"][0]), entry["base_layer"], entry["knight_shift"])
    printed = parse_layer(entry["printed_next_layer"]).T
    filled = printed > 0
    assert filled.any()
    assert numpy.array_equal(kappa0[:, :, 0][filled], printed[filled])


@pytest.mark.parametrize("name", sorted(STRIPE_FAMILIES))
def test_stripe_generator_matches_printed_table(name):
    a, printed = printed_stripe_table(name)
    pc = stripe_coloring(name, a)
    assert pc.table[0].shape == printed.shape
    assert numpy.array_equal(pc.table[0], printed)


@pytest.mark.timeout(120)
@pytest.mark.parametrize("name", sorted(STRIPE_FAMILIES))
def test_stripe_families(name):
    b, K = STRIPE_FAMILIES[name]
    a, _ = printed_stripe_table(name)
    for size in (a, a + 3):
        pc = fixture_coloring(name, a=size)
        assert pc.k == K
        assert pc.period == (2 * size, K * b, 2)
        assert verify_periodic(pc)


# ==============================================================================
# product colorings
# ==============================================================================
@pytest.mark.timeout(120)
def test_orientation_class_products():
    base = formula_coloring("octant8_F1", (3, 2, 1))
    f2 = product_coloring(base, "orientation_class", 2)
    assert f2.num_colors == 16
    assert verify_periodic(f2)
    f3 = product_coloring(base, "orientation_class", 3)
    assert f3.num_colors == 48
    assert verify_periodic(f3)
    assert product_coloring(formula_coloring("checkerboard2", (1, 1, 1)), "orientation_class").num_colors == 2


def test_z_parity_layers():
    pc = product_coloring(fixture_coloring("d_2x2x1_5col"), "z_parity_layers")
    assert pc.num_colors == 10
    assert pc.period == (10, 10, 2)
    assert verify_periodic(pc)
    with pytest.raises(ColoringError):
        product_coloring(formula_coloring("octant8_F1", (2, 2, 2)), "z_parity_layers")
    with pytest.raises(ColoringError):
        product_coloring(pc, "checkerboard")


# ==============================================================================
# inheritance by configurations
# ==============================================================================
@pytest.mark.timeout(300)
def test_inherited_colorings_are_proper():
    rng = numpy.random.default_rng(31)
    sources = [
        (fixture_coloring("d_2x2x1_5col"), (2, 2, 1), 1),
        (fixture_coloring("chi2_2x1x1_5col"), (2, 1, 1), 2),
        (fixture_coloring("chi3_2x1x1_6col"), (2, 1, 1), 3),
        (formula_coloring("allodd8_F3", (3, 1, 1)), (3, 1, 1), 3),
        (formula_coloring("octant8_F1", (3, 2, 1)), (3, 2, 1), 1),
    ]
    for trial in range(200):
        pc, dims, freedom = sources[trial % len(sources)]
        cfg = random_configuration(rng, dims, freedom, 20, 8)
        col = inherit_coloring(pc, cfg)
        assert verify_coloring(build_contact_graph(cfg), col)
        assert max(col) <= pc.k


def test_inherit_needs_congruent_dims():
    pc = formula_coloring("checkerboard2", (1, 1, 1))
    cfg = random_configuration(numpy.random.default_rng(0), (2, 1, 1), 1, 3, 5)
    with pytest.raises(ColoringError):
        inherit_coloring(pc, cfg)


# ==============================================================================
# perco
# ==============================================================================
def test_torus_graph():
    g, loop = torus_graph((1, 1, 1), 1, (2, 2, 2))
    assert not loop
    assert g.n == 8
    assert set(g.degree_sequence()) == {3}
    g, loop = torus_graph((2, 1, 1), 1, (1, 1, 1))
    assert loop and g is None


@pytest.mark.timeout(120)
def test_perco_small():
    res = perco((1, 1, 1), 1, (2, 2, 2))
    assert res.value == 2
    assert verify_periodic(res.coloring)
    res = perco((2, 1, 1), 1, (6, 2, 2))
    assert res.value == 3
    assert verify_periodic(res.coloring)
    assert perco((2, 1, 1), 1, (1, 1, 1)).value == math.inf
    assert perco((2, 1, 1), 1, (6, 2, 2), max_k=2).value is None


@pytest.mark.slow
@pytest.mark.timeout(600)
@pytest.mark.parametrize(
    "dims,freedom,period,expect",
    [
        ((2, 2, 1), 1, (10, 10, 2), 5),
        ((2, 1, 1), 2, (10, 10, 2), 5),
    ],
)
def test_perco_slow(dims, freedom, period, expect):
    res = perco(dims, freedom, period, budget=600)
    assert res.value == expect
    assert verify_periodic(res.coloring)
