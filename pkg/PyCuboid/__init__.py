# -*- coding: utf-8 -*-
"""
PyCuboid
========

	PyCuboid builds contact graphs of configurations of congruent integer
	cuboids and colors them: exact chromatic numbers, maximum cliques,
	free-corner neighbour bounds, periodic colorings of the whole lattice,
	and a pseudorandom search for configurations that need many colors.

Using
-----

	Just write in Python

	>>> from PyCuboid.Pyconfiguration import PyConfiguration
	>>> cfg = PyConfiguration.FromFixture("221")
	>>> cfg.GetChromaticNumber().chi
	5

	or from the shell

	$ pycuboid chroma 221 --assert-chi 5

"""

__version__ = "1.0"
