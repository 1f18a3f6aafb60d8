# -*- coding: utf-8 -*-
#  Copyright (c) 2026, the PyCuboid developers
#  All rights reserved.
#  This file is part of the PyCuboid.
#  The contents are covered by the terms of the BSD license
#  which is included in the file license.txt, found at the root
#  of the PyCuboid source tree.
"""
##############################################################################

Writers for configuration documents: JSON, the bracketed list format, and
Wavefront OBJ with a companion MTL palette.

An exploded view moves every cuboid along one axis by gap times its lower
coordinate on that axis, so z1 -> (gap+1)*z1 and z2 -> gap*z1 + z2.

Date: 2026.10.19

##############################################################################
"""

# Core Library modules
import logging

# First party modules
from PyCuboid.Errors import FormatError
from PyCuboid.PyFormat.Appendix import ConfigDocument, dump_json
from PyCuboid.Settings import PaletteName, PaletteRGB

log = logging.getLogger(__name__)

FORMATS = ("json", "maple", "obj")

AXES = {"x": 0, "y": 1, "z": 2}

# corner k has bit 0 -> x, bit 1 -> y, bit 2 -> z at the upper face
_QUADS = [
    (0, 2, 3, 1),  # z low
    (4, 5, 7, 6),  # z high
    (0, 1, 5, 4),  # y low
    (2, 6, 7, 3),  # y high
    (0, 4, 6, 2),  # x low
    (1, 3, 7, 5),  # x high
]


def parse_explode(text):
    """'z:4' -> (2, 4)."""
    try:
        axis, gap = text.split(":")
        return AXES[axis.strip().lower()], int(gap)
    except (ValueError, KeyError):
        raise FormatError("Error, explode must look like 'z:4' (got %r)." % text)


def explode(doc, axis, gap):
    """A copy of doc with each cuboid translated by gap*min[axis] along axis."""
    if isinstance(axis, str):
        axis = AXES[axis]
    cuboids = []
    for lo, hi, color in doc.cuboids:
        shift = gap * lo[axis]
        lo2, hi2 = list(lo), list(hi)
        lo2[axis] += shift
        hi2[axis] += shift
        cuboids.append((lo2, hi2, color))
    return ConfigDocument(
        doc.dims, doc.freedom, cuboids, chi=doc.chi, name=doc.name, title=doc.title, note=doc.note
    )


def to_maple(doc):
    """List format without blanks; a missing color is written as 1."""
    return "[%s]" % ",".join(
        "[%d,%d,%d,%d,%d,%d,%d]" % (lo[0], hi[0], lo[1], hi[1], lo[2], hi[2], 1 if c is None else c)
        for lo, hi, c in doc.cuboids
    )


def to_obj(doc, mtllib=None):
    """
    One closed box per cuboid: 8 vertices and 12 triangles, material named
    after the cuboid's color.
    """
    lines = ["# %d cuboids" % len(doc)]
    if mtllib:
        lines.append("mtllib %s" % mtllib)
    for n, (lo, hi, color) in enumerate(doc.cuboids):
        lines.append("o cuboid%d" % n)
        lines.append("usemtl %s" % PaletteName(1 if color is None else color))
        for k in range(8):
            corner = [hi[a] if (k >> a) & 1 else lo[a] for a in range(3)]
            lines.append("v %d %d %d" % tuple(corner))
        base = 8 * n + 1
        for q in _QUADS:
            a, b, c, d = [base + v for v in q]
            lines.append("f %d %d %d" % (a, b, c))
            lines.append("f %d %d %d" % (a, c, d))
    return "\n".join(lines) + "\n"


def to_mtl(doc):
    """Materials for every color used by doc."""
    used = sorted(set(1 if c is None else c for _, _, c in doc.cuboids))
    lines = []
    for color in used:
        lines.append("newmtl %s" % PaletteName(color))
        lines.append("Kd %.4f %.4f %.4f" % tuple(PaletteRGB(color)))
        lines.append("")
    return "\n".join(lines)


def export(doc, format, explode_spec=None, mtllib=None):
    """
    Render a ConfigDocument.

    Usage:

    text = export(doc, "obj", explode_spec=(2, 4))

    Input: format is one of json, maple, obj; explode_spec an (axis, gap)
    pair applied first.

    Output: text; FormatError for an unknown format.
    """
    if format not in FORMATS:
        raise FormatError("Error, format must be one of %s (got %r)." % (", ".join(FORMATS), format))
    if explode_spec is not None:
        doc = explode(doc, *explode_spec)
    if format == "json":
        return dump_json(doc)
    if format == "maple":
        return to_maple(doc)
    return to_obj(doc, mtllib=mtllib)
