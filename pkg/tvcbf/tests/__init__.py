# -*- coding: utf-8 -*-
"""Tests of the package as a whole."""
