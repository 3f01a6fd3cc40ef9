# -*- coding: utf-8 -*-
"""Tests of the simulator, scenario files, traces and the command line."""
