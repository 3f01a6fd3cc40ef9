#!/usr/bin/env python3 -u
# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Traffic signals and the time-varying barrier that encodes them."""
from typing import List

from tvcbf.traffic._cbf import (
    TrafficCBF,
    build_traffic_cbf,
    candidate_barrier,
    conservative_softmin_bound,
    regulated_safe_set_contains,
    soft_minimum,
)
from tvcbf.traffic._sigmoid import (
    SigmoidDerivatives,
    SigmoidSignalPiece,
    TrafficCBFParams,
    sigmoid_derivs,
)
from tvcbf.traffic._signal import (
    SignalBroadcast,
    SignalState,
    SignalTiming,
    broadcast,
    next_signal_index,
    signal_state,
)

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = [
    "SigmoidDerivatives",
    "SigmoidSignalPiece",
    "SignalBroadcast",
    "SignalState",
    "SignalTiming",
    "TrafficCBF",
    "TrafficCBFParams",
    "broadcast",
    "build_traffic_cbf",
    "candidate_barrier",
    "conservative_softmin_bound",
    "next_signal_index",
    "regulated_safe_set_contains",
    "sigmoid_derivs",
    "signal_state",
    "soft_minimum",
]
