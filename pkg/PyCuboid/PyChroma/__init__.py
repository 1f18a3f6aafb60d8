# -*- coding: utf-8 -*-
"""
construct a package!
"""
