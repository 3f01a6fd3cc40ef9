#!/usr/bin/env python3 -u
# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Piecewise time-varying control barrier function machinery."""
from typing import List

from tvcbf.cbf._class_k import BaseClassK, LinearClassK
from tvcbf.cbf._dynamics import (
    BaseControlAffineSystem,
    DoubleIntegrator,
    SingleIntegrator,
)
from tvcbf.cbf._hocbf import beta_cascade, hocbf_mu_constraint
from tvcbf.cbf._jump import JumpValidityReport, check_all_jumps, check_jump_validity
from tvcbf.cbf._piece import AffineTimeCBFPiece, BaseCBFPiece
from tvcbf.cbf._piecewise import PiecewiseTVCBF

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = [
    "AffineTimeCBFPiece",
    "BaseCBFPiece",
    "BaseClassK",
    "BaseControlAffineSystem",
    "DoubleIntegrator",
    "JumpValidityReport",
    "LinearClassK",
    "PiecewiseTVCBF",
    "SingleIntegrator",
    "beta_cascade",
    "check_all_jumps",
    "check_jump_validity",
    "hocbf_mu_constraint",
]
