#!/usr/bin/env python3 -u
# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
""":mod:`tvcbf` implements piecewise time-varying control barrier functions.

The package provides the barrier machinery (β-cascades, safe-input constraints,
jump-validity checks), a traffic-signal barrier built from logistic pieces, a
longitudinal vehicle model, a regulated adaptive cruise controller with a
scalar QP safety filter, and a closed-loop simulator with a command line.
"""
__version__: str = "0.1.0"
