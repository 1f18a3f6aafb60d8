# -*- coding: utf-8 -*-
#  Copyright (c) 2026, the PyCuboid developers
#  All rights reserved.
#  This file is part of the PyCuboid.
#  The contents are covered by the terms of the BSD license
#  which is included in the file license.txt, found at the root
#  of the PyCuboid source tree.
"""
A class collecting the configuration tools (validation, contact graph,
chromatic number, criticality, export) behind one object.

Date: 2026.10.19
"""

# First party modules
from PyCuboid.PyChroma.Coloring import chromatic_number, parity_coloring, verify_coloring
from PyCuboid.PyFormat.Appendix import ConfigDocument, load_fixture, read_document
from PyCuboid.PyFormat.Export import export
from PyCuboid.PyGeometry.Cuboid import Configuration, rescale
from PyCuboid.PyGraph.ContactGraph import build_contact_graph, clique_number, validate_configuration
from PyCuboid.PyPeriodic.PeriodicColoring import inherit_coloring
from PyCuboid.PySearch.Criticality import criticality_reduce, is_critical


class PyConfiguration:
    """
    Wraps one configuration, with its stored colors and declared chromatic
    number when it was read from a document.
    """

    Version = 1.0

    def __init__(self, configuration, colors=None, chi=None, name=None):
        if isinstance(configuration, ConfigDocument):
            doc = configuration
            configuration = doc.configuration()
            colors = doc.colors if colors is None else colors
            chi = doc.chi if chi is None else chi
            name = doc.name if name is None else name
        if not isinstance(configuration, Configuration):
            raise TypeError("You must construct a PyConfiguration from a Configuration or ConfigDocument.")
        self.Configuration = configuration
        self.Colors = None if colors is None else list(colors)
        self.DeclaredChi = chi
        self.Name = name
        self._graph = None

    @classmethod
    def FromFixture(cls, name):
        """
        A shipped listing, e.g. PyConfiguration.FromFixture("221").
        """
        return cls(load_fixture(name))

    @classmethod
    def FromFile(cls, path, dims=None, freedom=None):
        return cls(read_document(path, dims, freedom))

    def Validate(self):
        """
        Usage:

        result = Validate()

        Output: a ValidationReport, true when valid.
        """
        return validate_configuration(self.Configuration)

    def GetContactGraph(self):
        if self._graph is None:
            self._graph = build_contact_graph(self.Configuration)
        return self._graph

    def GetCliqueNumber(self):
        return clique_number(self.GetContactGraph())

    def CheckColoring(self, colors=None):
        """
        Check the stored colors, or the given ones.

        Usage:

        result = CheckColoring()
        """
        colors = self.Colors if colors is None else colors
        if colors is None:
            raise ValueError("Error, no coloring stored or given.")
        return verify_coloring(self.GetContactGraph(), colors)

    def GetChromaticNumber(self, budget=None, engine="sat"):
        """
        Usage:

        result = GetChromaticNumber(budget=60)

        Output: a ChromaResult.
        """
        return chromatic_number(self.GetContactGraph(), budget=budget, engine=engine)

    def GetParityColoring(self):
        return parity_coloring(self.Configuration)

    def GetPeriodicColoring(self, pc):
        """Colors inherited from a PeriodicColoring."""
        return inherit_coloring(pc, self.Configuration)

    def GetCritical(self, chi, budget=None):
        """A critical subconfiguration, wrapped."""
        return PyConfiguration(criticality_reduce(self.Configuration, chi, budget=budget), name=self.Name)

    def IsCritical(self, chi, budget=None):
        return is_critical(self.Configuration, chi, budget=budget)

    def Rescale(self, target):
        return PyConfiguration(rescale(self.Configuration, target), colors=self.Colors, chi=self.DeclaredChi)

    def Export(self, format="json", explode=None):
        doc = ConfigDocument.from_configuration(
            self.Configuration, colors=self.Colors, chi=self.DeclaredChi, name=self.Name
        )
        return export(doc, format, explode_spec=explode)


if __name__ == "__main__":

    cfg = PyConfiguration.FromFixture("221")
    print(cfg.Validate(), cfg.CheckColoring(), cfg.GetCliqueNumber())
    print(cfg.GetChromaticNumber().chi)
