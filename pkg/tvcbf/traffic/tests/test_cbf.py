# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Tests of the sigmoid bound and the traffic signal barrier.

tests in this module:

    test_sigmoid_derivatives_match_finite_differences
    test_sigmoid_is_stable_far_from_midpoint
    test_piece_forms_by_relative_degree
    test_traffic_barrier_jumps_are_valid
    test_degree_one_barrier_initial_value
    test_build_traffic_cbf_checks_horizon
    test_traffic_cbf_rejects_unsorted_signals
    test_barrier_set_respects_red_light
    test_softmin_bound_is_conservative
    test_soft_minimum_edge_cases
    test_candidate_barrier_and_regulated_set
"""
from typing import List

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from skbase.utils import check_random_state

from tvcbf._exceptions import ConstructionError, HorizonError
from tvcbf.cbf import check_all_jumps
from tvcbf.traffic import (
    SigmoidSignalPiece,
    SignalTiming,
    TrafficCBF,
    TrafficCBFParams,
    build_traffic_cbf,
    candidate_barrier,
    conservative_softmin_bound,
    regulated_safe_set_contains,
    sigmoid_derivs,
    soft_minimum,
)
from tvcbf.vehicle import LongitudinalMuModel

__author__: List[str] = ["tvcbf developers"]

SIGNALS = [
    SignalTiming.from_offset(1000.0 * i, offset=7.0 * (i - 1), horizon=300.0)
    for i in range(1, 7)
]
RED_CHECK_CBF = TrafficCBF(signals=SIGNALS, degree=2)


@pytest.mark.parametrize("t", [0.0, 20.0, 26.0, 27.5, 29.0, 35.0])
def test_sigmoid_derivatives_match_finite_differences(t):
    """Test the closed-form derivatives against central differences."""
    eps = 1e-5
    plus = sigmoid_derivs(t + eps, 1000.0, 27.5, 6.0)
    minus = sigmoid_derivs(t - eps, 1000.0, 27.5, 6.0)
    here = sigmoid_derivs(t, 1000.0, 27.5, 6.0)
    assert here.first == pytest.approx(
        (plus.value - minus.value) / (2 * eps), rel=1e-6, abs=1e-4
    )
    assert here.second == pytest.approx(
        (plus.first - minus.first) / (2 * eps), rel=1e-6, abs=1e-4
    )


def test_sigmoid_is_stable_far_from_midpoint():
    """Test finite values and correct limits for large |t - m|."""
    early = sigmoid_derivs(-1e5, 1000.0, 27.5, 6.0)
    late = sigmoid_derivs(1e5, 1000.0, 27.5, 6.0)
    assert early.value == 1000.0
    assert np.isfinite([*early, *late]).all()
    assert late.value == 0.0
    assert early.first <= 0.0 and late.first <= 0.0


def test_piece_forms_by_relative_degree():
    """Test value and gradient of the degree 1 and degree 2 barrier forms."""
    x = np.array([100.0, 10.0, 130.0, 12.0, 0.0])
    kwargs = {"position": 1000.0, "next_position": 2000.0, "midpoint": 27.5}
    deg2 = SigmoidSignalPiece(rel_degree=2, s0=4.5, **kwargs)
    deg1 = SigmoidSignalPiece(rel_degree=1, gamma=4.0, **kwargs)
    h_t = sigmoid_derivs(27.5, 1000.0, 27.5, 6.0).value

    assert deg2.evaluate(27.5, x) == pytest.approx(h_t + 1000.0 - 100.0 - 4.5)
    assert deg1.evaluate(27.5, x) == pytest.approx(h_t + 1000.0 - 100.0 - 40.0)
    np.testing.assert_array_equal(deg2.state_gradient(0.0, x), [-1, 0, 0, 0, 0])
    np.testing.assert_array_equal(deg1.state_gradient(0.0, x), [-1, -4, 0, 0, 0])
    assert deg2.get_tag("rel_degree") == 2
    assert deg1.get_tag("rel_degree") == 1
    with pytest.raises(ConstructionError):
        SigmoidSignalPiece(position=1000.0, next_position=1000.0)


@pytest.mark.parametrize("degree", [1, 2])
def test_traffic_barrier_jumps_are_valid(degree):
    """Test that every cycle switch enlarges the barrier set.

    Values jump up by about the signal spacing; the first order drops by no more
    than numerical noise.
    """
    rng = check_random_state(3)
    samples = np.column_stack(
        [
            rng.uniform(-100.0, 1000.0, 200),
            rng.uniform(0.0, 16.67, 200),
            rng.uniform(0.0, 1200.0, 200),
            rng.uniform(0.0, 16.67, 200),
            rng.uniform(-50.0, 50.0, 200),
        ]
    )
    cbf = build_traffic_cbf(SIGNALS, horizon=300.0, degree=degree)
    dynamics = LongitudinalMuModel() if degree == 2 else None
    tol = [1e-6, 1e-3] if degree == 2 else 1e-6
    for i in range(len(SIGNALS)):
        reports = check_all_jumps(
            cbf.region_cbf(i), samples, tol=tol, dynamics=dynamics
        )
        assert len(reports) > 0
        for report in reports:
            assert report.valid
            assert report.worst_margin[0] >= 100.0


def test_degree_one_barrier_initial_value():
    """Test the degree 1 barrier at the initial state of the corridor run."""
    cbf = build_traffic_cbf(SIGNALS, horizon=300.0, degree=1)
    value = cbf.evaluate(0.0, [0.0, 0.0, 4.5, 0.0, 0.0])
    assert 1995.0 <= value <= 2000.0
    terms = cbf.time_derivs(0.0, 0.0)
    assert terms.value == pytest.approx(1000.0)
    assert terms.first <= 0.0
    assert cbf.region_index(1000.5) == 1


def test_build_traffic_cbf_checks_horizon():
    """Test that signals not covering the horizon are rejected."""
    short = [SignalTiming(cycles=((0.0, 25.0, 30.0),), end=50.0)]
    late = [SignalTiming(cycles=((1.0, 25.0, 30.0),))]
    assert build_traffic_cbf(short, horizon=50.0).region_cbf(0).t_end == 50.0
    with pytest.raises(ConstructionError):
        build_traffic_cbf(short, horizon=60.0)
    with pytest.raises(ConstructionError):
        build_traffic_cbf(late, horizon=10.0)


def test_traffic_cbf_rejects_unsorted_signals():
    """Test that stop lines must be strictly increasing."""
    with pytest.raises(ConstructionError):
        TrafficCBF(signals=[SIGNALS[1], SIGNALS[0]])
    with pytest.raises(ConstructionError):
        TrafficCBF(signals=SIGNALS, degree=3)


@settings(max_examples=300, deadline=None)
@given(
    t=st.floats(30.0, 49.999),
    x_f=st.floats(-100.0, 1000.0),
    v_f=st.floats(0.0, 16.67),
)
def test_barrier_set_respects_red_light(t, x_f, v_f):
    """Test that inside the barrier set the ego stays before a red stop line.

    Slack is the residual of the sigmoid after its midpoint.
    """
    x = [x_f, v_f, x_f + 20.0, v_f, 0.0]
    if RED_CHECK_CBF.evaluate(t, x) >= 0.0:
        assert regulated_safe_set_contains(SIGNALS, 0, t, x_f, s0=4.5, slack=1e-3)
        assert x_f <= 1000.0 - 4.5 + 1e-3


def test_softmin_bound_is_conservative():
    """Test that the soft-minimum limit stays below the current stop line.

    The grid covers every region with 13 times and 13 positions each, over a
    thousand points in all.
    """
    checked = 0
    for i, signal in enumerate(SIGNALS):
        line = signal.position
        for t in np.linspace(0.0, 299.0, 13):
            for x_f in np.linspace(line - 1000.0, line - 0.01, 13):
                bound = conservative_softmin_bound(SIGNALS, i, t, x_f)
                assert bound <= line - x_f
                assert bound <= candidate_barrier(SIGNALS, i, t, x_f)
                checked += 1
    assert checked >= 1000
    with pytest.raises(HorizonError):
        conservative_softmin_bound(SIGNALS, 0, 1e6, 0.0)


def test_soft_minimum_edge_cases():
    """Test single terms, equal terms and ordering against the hard minimum."""
    assert soft_minimum([7.0]) == pytest.approx(7.0)
    assert soft_minimum([2.0, 2.0]) == pytest.approx(2.0 - np.log(2.0))
    assert soft_minimum([1.0, 50.0]) <= 1.0
    assert soft_minimum([1.0, 50.0]) == pytest.approx(1.0, abs=1e-12)


def test_candidate_barrier_and_regulated_set():
    """Test the discontinuous limit and the regulated set by signal state."""
    params = TrafficCBFParams()
    assert candidate_barrier(SIGNALS, 0, 10.0, 100.0) == 1900.0
    assert candidate_barrier(SIGNALS, 0, 35.0, 100.0) == 900.0
    assert candidate_barrier(SIGNALS, 5, 10.0, 5100.0) == 900.0
    last_green = 15.0
    assert candidate_barrier(SIGNALS, 5, last_green, 5100.0) == pytest.approx(
        6000.0 + params.default_spacing - 5100.0
    )
    assert regulated_safe_set_contains(SIGNALS, 0, 10.0, 999.0)
    assert regulated_safe_set_contains(SIGNALS, 0, 35.0, 995.5)
    assert not regulated_safe_set_contains(SIGNALS, 0, 35.0, 995.6)
    assert not regulated_safe_set_contains(SIGNALS, 0, 10.0, 1996.0)
    assert regulated_safe_set_contains(SIGNALS, 0, 35.0, 995.6, slack=0.2)
