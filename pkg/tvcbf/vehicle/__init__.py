#!/usr/bin/env python3 -u
# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Longitudinal vehicle dynamics, integration and lead vehicle profiles."""
from typing import List

from tvcbf.vehicle._dynamics import (
    LongitudinalMuModel,
    dynamics_deriv,
    force_to_mu,
    mu_to_force,
    step,
)
from tvcbf.vehicle._lead import LeadProfile, lead_velocity
from tvcbf.vehicle._params import GRAVITY, VehicleParams, friction_force
from tvcbf.vehicle._state import VehicleState

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = [
    "GRAVITY",
    "LeadProfile",
    "LongitudinalMuModel",
    "VehicleParams",
    "VehicleState",
    "dynamics_deriv",
    "force_to_mu",
    "friction_force",
    "lead_velocity",
    "mu_to_force",
    "step",
]
