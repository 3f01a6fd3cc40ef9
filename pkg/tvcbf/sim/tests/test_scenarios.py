# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""End-to-end checks of the bundled scenarios.

tests in this module:

    test_corridor_hard_constraints
    test_randomized_corridors_never_run_a_red_light
    test_corridor_input_bounds
    test_corridor_preemptive_braking
    test_corridor_sigmoid_barrier_less_conservative_than_softmin
    test_signal_free_tracks_the_lead
"""
from typing import List

import numpy as np
import pytest
from skbase.utils import check_random_state

from tvcbf.sim import (
    ScenarioConfig,
    load_config,
    preemptive_braking_events,
    run,
    verify_hard_constraints,
)
from tvcbf.traffic import build_traffic_cbf, conservative_softmin_bound
from tvcbf.vehicle import LeadProfile

__author__: List[str] = ["tvcbf developers"]


@pytest.fixture(scope="module")
def corridor():
    """Configuration and trace of the full corridor run."""
    config = load_config("corridor")
    return config, run(config)


def test_corridor_hard_constraints(corridor):
    """Test spacing, speed limit and red lights over the 300 s corridor run."""
    config, trace = corridor
    assert len(trace) == config.n_steps
    report = verify_hard_constraints(trace, config, tol=1e-3)
    assert report.min_h1 >= -1e-3
    assert report.max_speed_excess <= 1e-3
    assert report.min_h3 >= -1e-3
    assert report.red_light_violations == ()
    assert report.infeasible_steps == 0
    assert report.ok
    # the ego gets past the first stop line
    assert trace[-1].x_f > 1000.0


def _random_corridor(seed, mode):
    """Four signals 500 m apart with random offsets and a random lead."""
    rng = check_random_state(seed)
    signals = tuple(
        (500.0 * i, rng.uniform(0.0, 50.0), 25.0, 5.0, 20.0) for i in range(1, 5)
    )
    accel = rng.uniform(0.5, 1.0)
    cruise = rng.uniform(17.0, 20.0)
    t_cruise = cruise / accel
    breakpoints = [(0.0, accel), (t_cruise, 0.0)]
    t_brake = t_cruise + rng.uniform(2.0, 20.0)
    for _ in range(2):
        breakpoints += [(t_brake, -0.4), (t_brake + 2.5, 0.4), (t_brake + 5.0, 0.0)]
        t_brake += rng.uniform(10.0, 30.0)
    return ScenarioConfig(
        signals=signals,
        lead=LeadProfile(breakpoints=tuple(breakpoints)),
        horizon=100.0,
        mode=mode,
    )


@pytest.mark.parametrize("seed", range(50))
def test_randomized_corridors_never_run_a_red_light(seed):
    """Test random signal offsets and lead profiles in both filter modes.

    An ego caught between stopping and clearing the line at yellow may leave
    the relative degree 1 safe set, so the margins are only checked on runs
    without an infeasible step; no run may cross a stop line on red.
    """
    for mode in ("constrained_input", "unconstrained_input"):
        config = _random_corridor(seed, mode)
        trace = run(config)
        assert len(trace) == config.n_steps
        report = verify_hard_constraints(trace, config, tol=1e-3)
        assert report.red_light_violations == (), (mode, report.red_light_violations)
        if mode == "constrained_input" and report.infeasible_steps == 0:
            assert report.ok, report


def test_corridor_input_bounds(corridor):
    """Test that every applied input lies in the admissible box."""
    config, trace = corridor
    params = config.vehicle_params
    mass = params.mass
    for r in trace:
        assert r.mu >= -params.a_min - 1e-9
        assert r.u <= params.a_max * mass + 1e-6


def test_corridor_preemptive_braking(corridor):
    """Test that the ego slows down before every red light it would run."""
    config, trace = corridor
    events = preemptive_braking_events(trace, config)
    reached = [e for e in events if e.would_cross]
    assert len(reached) >= 1
    a_min = config.vehicle_params.a_min
    for event in reached:
        assert event.decel_duration >= 1.0
        assert event.min_mu >= -a_min - 1e-9
        assert event.gap >= 0.0


def test_corridor_sigmoid_barrier_less_conservative_than_softmin():
    """Test the room the sigmoid barrier leaves on green next to the soft-min."""
    config = load_config("corridor")
    signals = config.signal_timings()
    s0 = config.vehicle_params.s0
    cbf = build_traffic_cbf(signals, config.traffic_params(), degree=2)
    t = 10.0
    for x_f in np.linspace(0.0, 990.0, 12):
        to_line = 1000.0 - x_f
        assert conservative_softmin_bound(signals, 0, t, x_f) <= to_line
        h = cbf.evaluate(t, [x_f, 10.0, x_f + 30.0, 10.0, 0.0])
        # sigmoid still at its plateau: room up to the next stop line
        assert h - (to_line - s0) == pytest.approx(1000.0, rel=1e-6)


def test_signal_free_tracks_the_lead():
    """Test that spacing error and relative speed settle after 60 s."""
    config = load_config("signal_free")
    trace = run(config)
    report = verify_hard_constraints(trace, config)
    assert report.ok
    assert report.infeasible_steps == 0
    settled = [r for r in trace if r.t >= 60.0]
    assert settled
    for r in settled:
        assert abs(r.h1) < 0.1
        assert abs(r.v_l - r.v_f) < 0.1
