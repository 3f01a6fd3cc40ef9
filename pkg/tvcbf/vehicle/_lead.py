# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Exogenous lead vehicle driven by a piecewise constant acceleration."""
from bisect import bisect_right
from typing import List, Tuple

from skbase.base import BaseObject

from tvcbf._exceptions import ConstructionError
from tvcbf.utils import check_finite, check_nonnegative

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = ["LeadProfile", "lead_velocity"]


class LeadProfile(BaseObject):
    """Piecewise constant acceleration profile of the lead vehicle.

    The acceleration ``a_k`` applies on ``[t_k, t_{k+1})``; the last value holds
    for all later times and the acceleration is zero before ``t_0``. The speed is
    clipped at zero, after which a negative acceleration has no effect.

    Parameters
    ----------
    breakpoints : tuple of (float, float), default=((0.0, 0.0),)
        Pairs ``(t_k, a_k)`` with strictly increasing ``t_k`` in s and ``a_k``
        in m/s².
    initial_speed : float, default=0.0
        Lead speed before the first breakpoint, in m/s.

    Examples
    --------
    >>> from tvcbf.vehicle import LeadProfile
    >>> profile = LeadProfile(breakpoints=((0.0, 1.0), (10.0, 0.0)))
    >>> profile.velocity(10.0)
    (10.0, 0.0)
    >>> profile.velocity(5.0)
    (5.0, 1.0)
    """

    _tags = {"object_type": "lead_profile"}

    def __init__(self, breakpoints=((0.0, 0.0),), initial_speed=0.0):
        self.breakpoints = breakpoints
        self.initial_speed = initial_speed
        super().__init__()

        check_nonnegative(initial_speed, name="initial_speed", error=ConstructionError)
        if len(breakpoints) == 0:
            raise ConstructionError("LeadProfile needs at least one breakpoint")
        times = [float(t) for t, _ in breakpoints]
        accels = [float(a) for _, a in breakpoints]
        check_finite(times, name="breakpoint times", error=ConstructionError)
        check_finite(accels, name="breakpoint accelerations", error=ConstructionError)
        if any(t1 >= t2 for t1, t2 in zip(times[:-1], times[1:])):
            raise ConstructionError(
                f"breakpoint times must be strictly increasing, found {times}"
            )
        self._times = times
        self._accels = accels
        # speed at the start of each segment
        speeds = [float(initial_speed)]
        for k in range(len(times) - 1):
            speeds.append(max(0.0, speeds[-1] + accels[k] * (times[k + 1] - times[k])))
        self._speeds = speeds

    def acceleration(self, t: float) -> float:
        """Return the commanded acceleration at ``t``, ignoring the speed clip."""
        k = bisect_right(self._times, t) - 1
        return 0.0 if k < 0 else self._accels[k]

    def velocity(self, t: float) -> Tuple[float, float]:
        """Return ``(V_l, accel)`` at ``t`` by exact integration.

        ``accel`` is the acceleration actually applied, zero while the lead is
        stopped under a braking command.
        """
        k = bisect_right(self._times, t) - 1
        if k < 0:
            return float(self.initial_speed), 0.0
        a = self._accels[k]
        v = max(0.0, self._speeds[k] + a * (t - self._times[k]))
        if v == 0.0 and a < 0:
            a = 0.0
        return v, a

    @classmethod
    def get_test_params(cls, parameter_set="default"):
        """Return testing parameter settings for the lead profile.

        Parameters
        ----------
        parameter_set : str, default="default"
            Name of the set of test parameters to return.

        Returns
        -------
        params : list of dict
        """
        params1 = {"breakpoints": ((0.0, 1.0), (10.0, 0.0))}
        params2 = {
            "breakpoints": ((0.0, 0.3), (60.0, 0.0), (154.0, -0.5), (170.0, 0.0)),
            "initial_speed": 0.0,
        }
        return [params1, params2]


def lead_velocity(profile: LeadProfile, t: float) -> Tuple[float, float]:
    """Return the lead speed and applied acceleration at ``t``.

    Examples
    --------
    >>> from tvcbf.vehicle import LeadProfile, lead_velocity
    >>> lead_velocity(LeadProfile(breakpoints=((0.0, 1.0),)), 10.0)
    (10.0, 1.0)
    >>> lead_velocity(LeadProfile(breakpoints=((0.0, -1.0),), initial_speed=2.0), 5.0)
    (0.0, 0.0)
    """
    return profile.velocity(t)
