#!/usr/bin/env python3 -u
# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Nominal car-following control, barrier constraints and the safety filter."""
from typing import List

from tvcbf.control._constraints import (
    h1_constraint,
    h2_constraint,
    h3_constraint_deg1,
    h3_constraint_deg2,
)
from tvcbf.control._filter import MODES, FilterDiagnostics, SafetyFilter
from tvcbf.control._gains import PolePlacementGain, pole_placement_gain, select_lambdas
from tvcbf.control._pid import PIDGains, nominal_control, nominal_mu

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = [
    "MODES",
    "FilterDiagnostics",
    "PIDGains",
    "PolePlacementGain",
    "SafetyFilter",
    "h1_constraint",
    "h2_constraint",
    "h3_constraint_deg1",
    "h3_constraint_deg2",
    "nominal_control",
    "nominal_mu",
    "pole_placement_gain",
    "select_lambdas",
]
