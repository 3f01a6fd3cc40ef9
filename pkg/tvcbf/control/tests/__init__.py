# -*- coding: utf-8 -*-
"""Tests of the nominal controller, barrier constraints and safety filter."""
