# -*- coding: utf-8 -*-
#  Copyright (c) 2026, the PyCuboid developers
#  All rights reserved.
#  This file is part of the PyCuboid.
#  The contents are covered by the terms of the BSD license
#  which is included in the file license.txt, found at the root
#  of the PyCuboid source tree.
"""
##############################################################################

Integer box arithmetic for congruent axis-parallel cuboids.

A cuboid is stored by its root (minimal corner) and its oriented side
lengths, so it occupies [x,x+a']x[y,y+b']x[z,z+c']. A dimension triple
together with a freedom class fixes which oriented side triples are
allowed:

    F1  only (a,b,c)
    F2  (a,b,c) and (b,a,c)
    F3  all six axis permutations of (a,b,c)

Two cuboids collide when their open interiors meet, and touch when they
do not collide but their intersection is a non-degenerate rectangle.

Date: 2026.10.19

##############################################################################
"""

# Core Library modules
import collections
import enum
import itertools

# Third party modules
import numpy

# First party modules
from PyCuboid.Errors import GeometryError
from PyCuboid.Settings import MAX_COORD


class Freedom(enum.IntEnum):
    F1 = 1
    F2 = 2
    F3 = 3

    @classmethod
    def parse(cls, value):
        """Accept 1/2/3, 'F2', '2' or a Freedom member."""
        if isinstance(value, cls):
            return value
        text = str(value).strip().upper()
        if text.startswith("F"):
            text = text[1:]
        try:
            return cls(int(text))
        except ValueError:
            raise GeometryError(
                "Error, freedom must be one of 1, 2, 3 (got %r)." % (value,)
            )


class DimTriple(collections.namedtuple("DimTriple", ["a", "b", "c"])):
    """The side lengths (a,b,c) in the order they are given."""

    __slots__ = ()

    def __new__(cls, a, b, c):
        sides = []
        for side in (a, b, c):
            if isinstance(side, bool) or int(side) != side or side < 1:
                raise GeometryError(
                    "Error, side lengths must be integers larger than 0 (got %r)."
                    % ((a, b, c),)
                )
            sides.append(int(side))
        return super(DimTriple, cls).__new__(cls, *sides)

    @classmethod
    def parse(cls, value):
        """Build from a sequence or a text such as '8,2,1'."""
        if isinstance(value, cls):
            return value
        if isinstance(value, str):
            parts = [p for p in value.replace("x", ",").split(",") if p.strip()]
            try:
                value = [int(p) for p in parts]
            except ValueError:
                raise GeometryError("Error, cannot read dims from %r." % value)
        if len(value) != 3:
            raise GeometryError("Error, dims need exactly three sides.")
        return cls(*value)

    @property
    def sorted_view(self):
        return tuple(sorted(self))

    def __str__(self):
        return "[%d,%d,%d]" % self


class Cuboid(collections.namedtuple("Cuboid", ["root", "dims"])):
    """
    Closed integer box [x,x+a']x[y,y+b']x[z,z+c'].

    The coordinate magnitude, including the far faces, is bounded by 2**31-1.
    """

    __slots__ = ()

    def __new__(cls, root, dims):
        root = tuple(int(v) for v in root)
        dims = tuple(int(v) for v in dims)
        if len(root) != 3 or len(dims) != 3:
            raise GeometryError("Error, a cuboid needs a 3-vector root and 3 sides.")
        if min(dims) < 1:
            raise GeometryError("Error, cuboid sides must be larger than 0 (got %r)." % (dims,))
        for x, d in zip(root, dims):
            if abs(x) > MAX_COORD or abs(x + d) > MAX_COORD:
                raise GeometryError(
                    "Error, coordinate overflow: faces of %r + %r exceed %d." % (root, dims, MAX_COORD)
                )
        return super(Cuboid, cls).__new__(cls, root, dims)

    @classmethod
    def from_corners(cls, lo, hi):
        """Normalize a corner pair (either order per axis) to root + dims."""
        root = [min(u, v) for u, v in zip(lo, hi)]
        far = [max(u, v) for u, v in zip(lo, hi)]
        return cls(root, [f - r for r, f in zip(root, far)])

    @property
    def lo(self):
        return self.root

    @property
    def hi(self):
        return tuple(x + d for x, d in zip(self.root, self.dims))

    @property
    def volume(self):
        return self.dims[0] * self.dims[1] * self.dims[2]

    def translated(self, offset):
        return Cuboid([x + o for x, o in zip(self.root, offset)], self.dims)

    def __str__(self):
        lo, hi = self.lo, self.hi
        return "[%d,%d]x[%d,%d]x[%d,%d]" % (lo[0], hi[0], lo[1], hi[1], lo[2], hi[2])


class Configuration(object):
    """
    An ordered collection of cuboids declared congruent to dims under a
    freedom class. Disjointness is not enforced here; see
    PyCuboid.PyGraph.ContactGraph.validate_configuration.
    """

    def __init__(self, dims, freedom, cuboids=()):
        self.dims = DimTriple.parse(dims)
        self.freedom = Freedom.parse(freedom)
        self.cuboids = tuple(
            c if isinstance(c, Cuboid) else Cuboid(*c) for c in cuboids
        )

    def __len__(self):
        return len(self.cuboids)

    def __iter__(self):
        return iter(self.cuboids)

    def __getitem__(self, index):
        return self.cuboids[index]

    def __eq__(self, other):
        return (
            isinstance(other, Configuration)
            and self.dims == other.dims
            and self.freedom == other.freedom
            and self.cuboids == other.cuboids
        )

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "Configuration(dims=%s, freedom=%d, n=%d)" % (
            self.dims,
            self.freedom,
            len(self.cuboids),
        )

    @property
    def allowed(self):
        return orientations(self.dims, self.freedom)

    def subset(self, keep):
        """Configuration of the cuboids whose indices are in keep, order kept."""
        return Configuration(self.dims, self.freedom, [self.cuboids[i] for i in keep])

    def without(self, index):
        return self.subset([i for i in range(len(self.cuboids)) if i != index])

    def with_cuboid(self, cuboid):
        return Configuration(self.dims, self.freedom, self.cuboids + (cuboid,))

    def arrays(self):
        """(roots, dims) as (n,3) int64 arrays."""
        roots = numpy.array([c.root for c in self.cuboids], dtype=numpy.int64).reshape(-1, 3)
        dims = numpy.array([c.dims for c in self.cuboids], dtype=numpy.int64).reshape(-1, 3)
        return roots, dims


def orientations(dims, freedom):
    """
    The oriented side triples permitted for dims under freedom.

    Usage:

    result = orientations((2, 1, 1), Freedom.F3)

    Output: a list of distinct triples, [(2,1,1), (1,2,1), (1,1,2)] here;
    equal sides collapse to a single orientation.
    """
    a, b, c = DimTriple.parse(dims)
    freedom = Freedom.parse(freedom)
    if freedom == Freedom.F1:
        candidates = [(a, b, c)]
    elif freedom == Freedom.F2:
        candidates = [(a, b, c), (b, a, c)]
    else:
        candidates = list(itertools.permutations((a, b, c)))
    result = []
    for o in candidates:
        if o not in result:
            result.append(o)
    return result


def congruent(p, dims):
    """True if the sides of p are a permutation of dims."""
    return tuple(sorted(p.dims)) == DimTriple.parse(dims).sorted_view


def _overlaps(p, q):
    return [
        min(p.root[i] + p.dims[i], q.root[i] + q.dims[i]) - max(p.root[i], q.root[i])
        for i in range(3)
    ]


def collide(p, q):
    """True iff the open interiors of p and q intersect."""
    return all(v > 0 for v in _overlaps(p, q))


def touch(p, q):
    """
    True iff p and q have disjoint interiors and meet in a non-degenerate
    rectangle: one axis has abutting faces, the other two overlap with
    positive length.
    """
    ov = _overlaps(p, q)
    zeros = sum(1 for v in ov if v == 0)
    positive = sum(1 for v in ov if v > 0)
    return zeros == 1 and positive == 2


def unit_cells(p):
    """The integer unit cells (by minimal corner) covered by p."""
    (x, y, z), (a, b, c) = p.root, p.dims
    return itertools.product(range(x, x + a), range(y, y + b), range(z, z + c))


def _overlap_arrays(roots, dims, p):
    roots = numpy.asarray(roots, dtype=numpy.int64).reshape(-1, 3)
    dims = numpy.asarray(dims, dtype=numpy.int64).reshape(-1, 3)
    lo = numpy.asarray(p.root, dtype=numpy.int64)
    hi = lo + numpy.asarray(p.dims, dtype=numpy.int64)
    return numpy.minimum(roots + dims, hi) - numpy.maximum(roots, lo)


def collide_mask(roots, dims, p):
    """Vectorised collide(q_i, p) over rows (roots[i], dims[i])."""
    ov = _overlap_arrays(roots, dims, p)
    return (ov > 0).all(axis=1)


def touch_mask(roots, dims, p):
    """Vectorised touch(q_i, p) over rows (roots[i], dims[i])."""
    ov = _overlap_arrays(roots, dims, p)
    return ((ov == 0).sum(axis=1) == 1) & ((ov > 0).sum(axis=1) == 2)


def rescale(cfg, target):
    """
    Stretch a freedom-1 configuration to larger sides without changing its
    contact graph.

    Each root coordinate is written q*old + r with 0 <= r < old and sent to
    q*new + r, axis by axis.

    Usage:

    result = rescale(cfg, (5, 3, 2))

    Input: cfg is a Configuration with freedom F1, target is a DimTriple
    not smaller than cfg.dims on any axis.

    Output: result is a Configuration over target, same cuboid order.
    """
    target = DimTriple.parse(target)
    if cfg.freedom != Freedom.F1:
        raise GeometryError("Error, rescale needs a freedom 1 configuration.")
    if any(t < d for t, d in zip(target, cfg.dims)):
        raise GeometryError(
            "Error, target %s is smaller than %s on some axis." % (target, cfg.dims)
        )
    cuboids = []
    for cub in cfg:
        root = []
        for x, old, new in zip(cub.root, cfg.dims, target):
            q, r = divmod(x, old)
            root.append(q * new + r)
        cuboids.append(Cuboid(root, target))
    return Configuration(target, Freedom.F1, cuboids)


if __name__ == "__main__":

    p = Cuboid((-1, -8, 0), (2, 8, 1))
    q = Cuboid((-1, 0, 0), (2, 8, 1))
    print(p, q, "touch:", touch(p, q), "collide:", collide(p, q))
    print(orientations((4, 2, 1), 2))
