#!/usr/bin/env python3 -u
# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Scenario files, closed-loop simulation, traces and their audits."""
from typing import List

from tvcbf.sim._config import (
    SCENARIO_DIR,
    ScenarioConfig,
    dump_config,
    load_config,
    resolve_scenario,
)
from tvcbf.sim._run import run
from tvcbf.sim._trace import TRACE_COLUMNS, TraceRecord, export_trace, read_trace
from tvcbf.sim._verify import (
    BrakingEvent,
    HardConstraintReport,
    RedLightViolation,
    TraceSummary,
    preemptive_braking_events,
    summarize,
    verify_hard_constraints,
)

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = [
    "SCENARIO_DIR",
    "TRACE_COLUMNS",
    "BrakingEvent",
    "HardConstraintReport",
    "RedLightViolation",
    "ScenarioConfig",
    "TraceRecord",
    "TraceSummary",
    "dump_config",
    "export_trace",
    "load_config",
    "preemptive_braking_events",
    "read_trace",
    "resolve_scenario",
    "run",
    "summarize",
    "verify_hard_constraints",
]
