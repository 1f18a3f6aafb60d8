# -*- coding: utf-8 -*-
#  Copyright (c) 2026, the PyCuboid developers
#  All rights reserved.
#  This file is part of the PyCuboid.
#  The contents are covered by the terms of the BSD license
#  which is included in the file license.txt, found at the root
#  of the PyCuboid source tree.
"""
##############################################################################

Configuration documents and their text formats.

List format: a bracketed list of 7-tuples [x1,x2,y1,y2,z1,z2,color], any
whitespace allowed, e.g.

    [[0,1,0,1,0,1,1],[1,2,0,1,0,1,2]]

The list carries no dims or freedom, so they are passed in. An interval
given as max,min is swapped with a warning.

JSON format:

    {"dims": [a,b,c], "freedom": 1|2|3, "chi": K,
     "cuboids": [{"min": [x,y,z], "max": [x,y,z], "color": k}, ...]}

with optional "name", "title" and "note" keys. The shipped listings live in
data/configurations/<name>.json.

Date: 2026.10.19

##############################################################################
"""

# Core Library modules
import collections
import glob
import json
import logging
import os
import re

# First party modules
from PyCuboid.Errors import FormatError, GeometryError
from PyCuboid.PyGeometry.Cuboid import Configuration, Cuboid, DimTriple, Freedom
from PyCuboid.Settings import DATA_DIR

log = logging.getLogger(__name__)

FIXTURE_DIR = os.path.join(DATA_DIR, "configurations")

_TUPLE = re.compile(r"\[([^\[\]]*)\]")


class AppendixRecord(collections.namedtuple("AppendixRecord", ["x1", "x2", "y1", "y2", "z1", "z2", "color"])):
    """One list-format tuple, in the order it is written."""

    __slots__ = ()

    @property
    def reversed_axes(self):
        return [axis for axis, (u, v) in zip("xyz", self.intervals()) if u > v]

    def intervals(self):
        return [(self.x1, self.x2), (self.y1, self.y2), (self.z1, self.z2)]

    def normalized(self):
        lo = [min(u, v) for u, v in self.intervals()]
        hi = [max(u, v) for u, v in self.intervals()]
        return AppendixRecord(lo[0], hi[0], lo[1], hi[1], lo[2], hi[2], self.color)

    def corners(self):
        r = self.normalized()
        return (r.x1, r.y1, r.z1), (r.x2, r.y2, r.z2)


class ConfigDocument(object):
    """
    A configuration with its metadata and optional stored colors.

    cuboids is a list of (min corner, max corner, color or None).
    """

    def __init__(self, dims, freedom, cuboids, chi=None, name=None, title=None, note=None):
        self.dims = DimTriple.parse(dims)
        self.freedom = Freedom.parse(freedom)
        self.chi = None if chi is None else int(chi)
        self.name = name
        self.title = title
        self.note = note
        self.cuboids = []
        for lo, hi, color in cuboids:
            lo, hi = tuple(int(v) for v in lo), tuple(int(v) for v in hi)
            if any(u > v for u, v in zip(lo, hi)):
                raise FormatError("Error, cuboid min %r exceeds max %r." % (lo, hi))
            if color is not None and int(color) < 1:
                raise FormatError("Error, colors must be integers larger than 0 (got %r)." % color)
            self.cuboids.append((lo, hi, None if color is None else int(color)))

    def __len__(self):
        return len(self.cuboids)

    def __eq__(self, other):
        return isinstance(other, ConfigDocument) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "ConfigDocument(%s, dims=%s, F%d, n=%d)" % (self.name, self.dims, self.freedom, len(self))

    @property
    def colors(self):
        """Stored colors, or None unless every cuboid has one."""
        colors = [c for _, _, c in self.cuboids]
        if any(c is None for c in colors):
            return None
        return colors

    def configuration(self):
        try:
            return Configuration(
                self.dims, self.freedom, [Cuboid.from_corners(lo, hi) for lo, hi, _ in self.cuboids]
            )
        except GeometryError as e:
            raise FormatError("Error, %s: %s" % (self.name or "document", e))

    @classmethod
    def from_configuration(cls, cfg, colors=None, chi=None, name=None, title=None, note=None):
        colors = [None] * len(cfg) if colors is None else list(colors)
        return cls(
            cfg.dims,
            cfg.freedom,
            [(c.lo, c.hi, k) for c, k in zip(cfg, colors)],
            chi=chi,
            name=name,
            title=title,
            note=note,
        )

    def to_dict(self):
        data = collections.OrderedDict()
        for key in ("name", "title"):
            if getattr(self, key) is not None:
                data[key] = getattr(self, key)
        data["dims"] = list(self.dims)
        data["freedom"] = int(self.freedom)
        if self.chi is not None:
            data["chi"] = self.chi
        if self.note is not None:
            data["note"] = self.note
        cuboids = []
        for lo, hi, color in self.cuboids:
            entry = collections.OrderedDict([("min", list(lo)), ("max", list(hi))])
            if color is not None:
                entry["color"] = color
            cuboids.append(entry)
        data["cuboids"] = cuboids
        return data

    @classmethod
    def from_dict(cls, data):
        try:
            cuboids = [
                (entry["min"], entry["max"], entry.get("color")) for entry in data["cuboids"]
            ]
            return cls(
                data["dims"],
                data["freedom"],
                cuboids,
                chi=data.get("chi"),
                name=data.get("name"),
                title=data.get("title"),
                note=data.get("note"),
            )
        except (KeyError, TypeError) as e:
            raise FormatError("Error, malformed configuration document: missing or bad %s." % e)
        except GeometryError as e:
            raise FormatError("Error, malformed configuration document: %s" % e)


def parse_records(text):
    """
    Read the list format into AppendixRecords, as written.

    FormatError for an empty list, a tuple that is not 7 integers, or text
    outside the bracket grammar.
    """
    body = re.sub(r"\s+", "", text)
    if not (body.startswith("[") and body.endswith("]")):
        raise FormatError("Error, a configuration list must be enclosed in brackets.")
    inner = body[1:-1]
    records = []
    pos = 0
    for m in _TUPLE.finditer(inner):
        gap = inner[pos : m.start()]
        if gap != ("," if records else ""):
            raise FormatError("Error, unexpected text %r before tuple %d." % (gap, len(records) + 1))
        fields = m.group(1).split(",")
        if len(fields) != 7:
            raise FormatError("Error, tuple %d has %d entries, 7 expected." % (len(records) + 1, len(fields)))
        try:
            records.append(AppendixRecord(*[int(v) for v in fields]))
        except ValueError:
            raise FormatError("Error, tuple %d has a non-integer entry: %r." % (len(records) + 1, m.group(1)))
        pos = m.end()
    if inner[pos:]:
        raise FormatError("Error, unexpected text %r after the last tuple." % inner[pos:])
    if not records:
        raise FormatError("Error, the configuration list is empty.")
    return records


def parse_appendix(text, dims, freedom, chi=None, name=None):
    """
    Parse the list format into a normalized ConfigDocument.

    Usage:

    doc = parse_appendix("[[0,1,0,1,0,1,1]]", (1, 1, 1), 1)
    """
    cuboids = []
    for i, rec in enumerate(parse_records(text)):
        if rec.reversed_axes:
            log.warning("tuple %d has reversed %s interval(s); swapped", i, ",".join(rec.reversed_axes))
        lo, hi = rec.corners()
        cuboids.append((lo, hi, rec.color))
    return ConfigDocument(dims, freedom, cuboids, chi=chi, name=name)


def load_json(text):
    try:
        data = json.loads(text)
    except ValueError as e:
        raise FormatError("Error, invalid JSON: %s" % e)
    if not isinstance(data, dict):
        raise FormatError("Error, a configuration document must be a JSON object.")
    return ConfigDocument.from_dict(data)


def dump_json(doc):
    return json.dumps(doc.to_dict(), indent=2) + "\n"


def read_document(path, dims=None, freedom=None, chi=None):
    """
    Load a JSON document or a list-format file; the list format needs dims
    and freedom.
    """
    with open(path) as f:
        text = f.read()
    if text.lstrip().startswith("{"):
        doc = load_json(text)
        if dims is not None and DimTriple.parse(dims) != doc.dims:
            raise FormatError("Error, %s declares dims %s, not %s." % (path, doc.dims, DimTriple.parse(dims)))
        if freedom is not None and Freedom.parse(freedom) != doc.freedom:
            raise FormatError("Error, %s declares freedom %d, not %s." % (path, doc.freedom, freedom))
        return doc
    if dims is None or freedom is None:
        raise FormatError("Error, %s is in list format; dims and freedom are required." % path)
    name = os.path.splitext(os.path.basename(path))[0]
    return parse_appendix(text, dims, freedom, chi=chi, name=name)


def list_fixtures():
    """Names of the shipped configuration listings."""
    return sorted(
        os.path.splitext(os.path.basename(p))[0] for p in glob.glob(os.path.join(FIXTURE_DIR, "*.json"))
    )


def load_fixture(name):
    path = os.path.join(FIXTURE_DIR, "%s.json" % name)
    if not os.path.exists(path):
        raise FormatError("Error, no configuration listing named %r." % name)
    with open(path) as f:
        return load_json(f.read())
