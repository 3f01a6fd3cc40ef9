# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Longitudinal vehicle parameters and the resistive force model."""
from typing import List

from skbase.base import BaseObject

from tvcbf._exceptions import ConstructionError, DomainError
from tvcbf.utils import check_nonnegative, check_positive

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = ["GRAVITY", "VehicleParams", "friction_force"]

GRAVITY = 9.8


class VehicleParams(BaseObject):
    """Physical and policy parameters of the ego vehicle.

    Parameters
    ----------
    mass : float, default=1650.0
        Vehicle mass in kg.
    c0, c1, c2 : float, default=0.1, 5.0, 0.25
        Resistive force coefficients, F_r = c0 + c1 V + c2 V², in N, N/(m/s)
        and N/(m/s)².
    headway : float, default=1.4
        Time headway h of the constant time headway policy, in s.
    s0 : float, default=4.5
        Standstill gap S0, in m. Also the safe distance kept from a stop line.
    a_max : float, default=1.96
        Maximum acceleration magnitude, 0.2 g, in m/s².
    a_min : float, default=3.92
        Maximum braking magnitude, 0.4 g, in m/s². Stored positive.
    v_max : float, default=16.67
        Speed limit, in m/s (60 km/h).

    Examples
    --------
    >>> from tvcbf.vehicle import VehicleParams
    >>> params = VehicleParams()
    >>> params.mass, params.a_min
    (1650.0, 3.92)
    >>> round(params.stop_headway, 6)
    4.252551
    """

    _tags = {"object_type": "vehicle_params"}

    def __init__(
        self,
        mass=1650.0,
        c0=0.1,
        c1=5.0,
        c2=0.25,
        headway=1.4,
        s0=4.5,
        a_max=1.96,
        a_min=3.92,
        v_max=16.67,
    ):
        self.mass = mass
        self.c0 = c0
        self.c1 = c1
        self.c2 = c2
        self.headway = headway
        self.s0 = s0
        self.a_max = a_max
        self.a_min = a_min
        self.v_max = v_max
        super().__init__()

        for name in ["mass", "headway", "a_max", "a_min", "v_max"]:
            check_positive(getattr(self, name), name=name, error=ConstructionError)
        for name in ["c0", "c1", "c2", "s0"]:
            check_nonnegative(getattr(self, name), name=name, error=ConstructionError)

    @property
    def stop_headway(self) -> float:
        """Worst case stopping headway γ = V_max / a_min, in s."""
        return self.v_max / self.a_min

    @property
    def input_bounds(self):
        """Admissible force interval ``(-a_min * m, a_max * m)``, in N."""
        return (-self.a_min * self.mass, self.a_max * self.mass)

    @classmethod
    def get_test_params(cls, parameter_set="default"):
        """Return testing parameter settings for the vehicle parameters.

        Parameters
        ----------
        parameter_set : str, default="default"
            Name of the set of test parameters to return.

        Returns
        -------
        params : list of dict
        """
        return [{}, {"mass": 1000.0, "c0": 0.0, "c1": 0.0, "c2": 0.0, "v_max": 20.0}]


def friction_force(params: VehicleParams, v_f: float) -> float:
    """Return the resistive force F_r = c0 + c1 V_f + c2 V_f², in N.

    Parameters
    ----------
    params : VehicleParams
    v_f : float
        Ego speed in m/s, non-negative.

    Raises
    ------
    DomainError
        If ``v_f`` is negative.

    Examples
    --------
    >>> from tvcbf.vehicle import VehicleParams, friction_force
    >>> friction_force(VehicleParams(), 0.0)
    0.1
    >>> round(friction_force(VehicleParams(), 10.0), 9)
    75.1
    """
    if v_f < 0:
        raise DomainError(f"friction_force needs a non-negative speed, found {v_f}")
    return params.c0 + params.c1 * v_f + params.c2 * v_f * v_f
