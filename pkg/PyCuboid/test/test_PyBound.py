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

# Third party modules
import pytest

# First party modules
from PyCuboid.Errors import GeometryError
from PyCuboid.PyBound.NeighborBound import (
    NeighborCandidate,
    chi_upper_bound,
    enumerate_neighbors,
    independence_number,
    n_bound,
    n_table,
)
from PyCuboid.PyGeometry.Cuboid import Cuboid, Freedom, collide, touch

N2_TABLE = [
    ((1, 1, 2), 5),
    ((1, 2, 2), 8),
    ((1, 3, 2), 11),
    ((2, 2, 2), 7),
    ((2, 3, 2), 9),
    ((3, 3, 2), 7),
]

N3_TABLE = [
    ((1, 1, 1), 3),
    ((2, 1, 1), 7),
    ((2, 2, 1), 11),
    ((3, 2, 1), 16),
    ((2, 2, 2), 7),
    ((3, 2, 2), 10),
    ((3, 3, 3), 7),
]

# n2([a,b,2]) for a + b <= 8, beyond the rows above
N2_TABLE_WIDE = [
    ((4, 1, 2), 14),
    ((5, 1, 2), 17),
    ((6, 1, 2), 20),
    ((7, 1, 2), 23),
    ((4, 2, 2), 10),
    ((5, 2, 2), 12),
    ((6, 2, 2), 13),
    ((4, 3, 2), 9),
    ((5, 3, 2), 10),
    ((4, 4, 2), 7),
]

# n3([a,b,c]) for a <= 4, beyond the rows above
N3_TABLE_WIDE = [
    ((3, 1, 1), 11),
    ((4, 1, 1), 15),
    ((4, 2, 1), 21),
    ((3, 3, 1), 19),
    ((4, 3, 1), 23),
    ((4, 4, 1), 27),
    ((4, 2, 2), 13),
    ((3, 3, 2), 12),
    ((4, 3, 2), 14),
    ((4, 4, 2), 15),
    ((4, 3, 3), 10),
    ((4, 4, 3), 12),
]


def _largest_packing(candidates):
    for r in range(len(candidates), 0, -1):
        for subset in itertools.combinations(candidates, r):
            if not any(collide(p.cuboid, q.cuboid) for p, q in itertools.combinations(subset, 2)):
                return r
    return 0


# ==============================================================================
# candidates
# ==============================================================================
def test_unit_cube_candidates():
    cands = enumerate_neighbors((1, 1, 1), (1, 1, 1), Freedom.F3)
    # the floor stays free, as do the front and right faces
    assert sorted(c.cuboid.root for c in cands) == [(-1, 0, 0), (0, 0, 1), (0, 1, 0)]


def test_candidates_keep_the_corner_free():
    for center_sides in [(1, 2, 3), (3, 2, 1)]:
        center = Cuboid((0, 0, 0), center_sides)
        cands = enumerate_neighbors(center_sides, (1, 2, 3), Freedom.F3)
        assert cands
        for cand in cands:
            x, y, z = cand.cuboid.root
            assert touch(cand.cuboid, center)
            assert not collide(cand.cuboid, center)
            assert z >= 0
            if x == center_sides[0] or y + cand.cuboid.dims[1] == 0:
                assert z >= 1


def test_flat_center_has_no_front_or_right_neighbours():
    cands = enumerate_neighbors((3, 2, 1), (1, 2, 3), Freedom.F3)
    assert not [c for c in cands if c.cuboid.root[0] == 3]
    assert not [c for c in cands if c.cuboid.root[1] + c.cuboid.dims[1] == 0]


def test_window_is_wide_enough():
    for dims, freedom in [((2, 1, 1), 3), ((3, 2, 1), 2), ((1, 3, 2), 2)]:
        for center in n_bound(dims, freedom).per_orientation:
            tight = set(enumerate_neighbors(center, dims, freedom))
            wide = set(enumerate_neighbors(center, dims, freedom, margin=2))
            assert tight == wide


def test_center_must_be_allowed():
    with pytest.raises(GeometryError):
        enumerate_neighbors((1, 2, 4), (4, 2, 1), Freedom.F2)


# ==============================================================================
# independence numbers
# ==============================================================================
def test_independence_number_small_sets():
    assert independence_number([]) == 0
    overlapping = [NeighborCandidate(Cuboid((x, 0, 0), (3, 1, 1))) for x in range(3)]
    assert independence_number(overlapping) == 1
    assert independence_number(overlapping, method="bnb") == 1
    apart = [NeighborCandidate(Cuboid((3 * x, 0, 0), (3, 1, 1))) for x in range(3)]
    assert independence_number(apart) == 3
    with pytest.raises(ValueError):
        independence_number(apart, method="lp")


def test_independence_number_against_exhaustive_search():
    for center, dims, freedom in [((2, 1, 1), (2, 1, 1), 3), ((1, 1, 2), (1, 1, 2), 2), ((2, 2, 1), (2, 2, 1), 1)]:
        cands = enumerate_neighbors(center, dims, freedom)[:12]
        expect = _largest_packing(cands)
        assert independence_number(cands) == expect
        assert independence_number(cands, method="bnb") == expect


@pytest.mark.timeout(120)
def test_methods_agree():
    for dims, freedom in [((1, 1, 2), 2), ((2, 1, 1), 3), ((2, 2, 1), 1)]:
        assert n_bound(dims, freedom).n_value == n_bound(dims, freedom, method="bnb").n_value


# ==============================================================================
# bound tables
# ==============================================================================
@pytest.mark.timeout(300)
def test_center_orientations_differ():
    res = n_bound((1, 2, 3), Freedom.F3)
    # upright center: 16 neighbours; lying flat: 10
    assert res.per_orientation[(1, 2, 3)] == 16
    assert res.per_orientation[(3, 2, 1)] == 10
    assert res.n_value == 16
    assert chi_upper_bound(res) == 17


@pytest.mark.timeout(300)
def test_mirrored_centers_agree():
    for dims, freedom in [((1, 2, 3), Freedom.F3), ((1, 3, 2), Freedom.F2), ((3, 2, 2), Freedom.F3)]:
        per = n_bound(dims, freedom).per_orientation
        for (a, b, c), value in per.items():
            assert per[(b, a, c)] == value


@pytest.mark.timeout(300)
def test_n2_ignores_height_above_two():
    values = [n_bound((2, 1, c), Freedom.F2).n_value for c in (2, 3, 4)]
    assert values == [8, 8, 8]


@pytest.mark.timeout(300)
@pytest.mark.parametrize("dims,expect", N2_TABLE)
def test_n2_table(dims, expect):
    assert n_bound(dims, Freedom.F2).n_value == expect


@pytest.mark.timeout(300)
@pytest.mark.parametrize("dims,expect", N3_TABLE)
def test_n3_table(dims, expect):
    assert n_bound(dims, Freedom.F3).n_value == expect


@pytest.mark.slow
@pytest.mark.timeout(1200)
@pytest.mark.parametrize("dims,expect", N2_TABLE_WIDE)
def test_n2_table_wide(dims, expect):
    assert n_bound(dims, Freedom.F2).n_value == expect


@pytest.mark.slow
@pytest.mark.timeout(1200)
@pytest.mark.parametrize("dims,expect", N3_TABLE_WIDE)
def test_n3_table_wide(dims, expect):
    assert n_bound(dims, Freedom.F3).n_value == expect


@pytest.mark.timeout(120)
def test_n_table_rows():
    assert n_table(Freedom.F3, 1, 2) == [(1, 1, 3), (2, 1, 7), (2, 2, 11)]
    with pytest.raises(ValueError):
        n_table(Freedom.F3, 0, 2)
