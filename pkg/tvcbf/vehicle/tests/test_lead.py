# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Tests of the lead vehicle profile.

tests in this module:

    test_lead_velocity_constant_acceleration
    test_lead_velocity_zero_profile_is_constant
    test_lead_velocity_clips_at_zero
    test_lead_velocity_before_first_breakpoint
    test_lead_profile_rejects_unordered_breakpoints
"""
from typing import List

import pytest

from tvcbf._exceptions import ConstructionError
from tvcbf.vehicle import LeadProfile, lead_velocity

__author__: List[str] = ["tvcbf developers"]


def test_lead_velocity_constant_acceleration():
    """Test exact integration of a constant acceleration."""
    v, a = lead_velocity(LeadProfile(breakpoints=((0.0, 1.0),)), 10.0)
    assert v == 10.0
    assert a == 1.0


@pytest.mark.parametrize("t", [0.0, 3.5, 100.0])
def test_lead_velocity_zero_profile_is_constant(t):
    """Test that an all-zero profile keeps the initial speed."""
    profile = LeadProfile(breakpoints=((0.0, 0.0), (5.0, 0.0)), initial_speed=7.0)
    assert lead_velocity(profile, t) == (7.0, 0.0)


def test_lead_velocity_clips_at_zero():
    """Test that deceleration past zero holds the lead at rest."""
    profile = LeadProfile(breakpoints=((0.0, -2.0), (10.0, 0.5)), initial_speed=4.0)
    assert lead_velocity(profile, 1.0) == (2.0, -2.0)
    assert lead_velocity(profile, 5.0) == (0.0, 0.0)
    # accelerating again starts from zero, not from the unclipped -16 m/s
    assert lead_velocity(profile, 12.0) == (1.0, 0.5)


def test_lead_velocity_before_first_breakpoint():
    """Test that the lead keeps its initial speed before the first breakpoint."""
    profile = LeadProfile(breakpoints=((10.0, 1.0),), initial_speed=2.0)
    assert lead_velocity(profile, 5.0) == (2.0, 0.0)
    assert profile.acceleration(5.0) == 0.0


def test_lead_profile_rejects_unordered_breakpoints():
    """Test that breakpoint times must increase strictly."""
    with pytest.raises(ConstructionError):
        LeadProfile(breakpoints=((0.0, 1.0), (0.0, 2.0)))
    with pytest.raises(ConstructionError):
        LeadProfile(breakpoints=())
    with pytest.raises(ConstructionError):
        LeadProfile(initial_speed=-1.0)
