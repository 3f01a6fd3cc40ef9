#!/usr/bin/env python3 -u
# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Exact solver for the scalar safety-filter QP.

The decision variable of the filter is the scalar synthetic input μ, so the QP
``argmin |μ - μ_nom|²`` subject to linear inequalities reduces to clamping onto
an interval.
"""
from typing import List

from tvcbf.qp._constraint import ConstraintLabel, MuConstraint
from tvcbf.qp._interval import FeasibleInterval, project, reduce_constraints

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = [
    "ConstraintLabel",
    "FeasibleInterval",
    "MuConstraint",
    "project",
    "reduce_constraints",
]
