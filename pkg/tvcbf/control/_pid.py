# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Nominal PID car-following law."""
from typing import List

from skbase.base import BaseObject

from tvcbf._exceptions import ConstructionError
from tvcbf.utils import check_finite
from tvcbf.vehicle import VehicleParams, VehicleState, friction_force

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = ["PIDGains", "nominal_control", "nominal_mu"]


class PIDGains(BaseObject):
    """Gains of the nominal law μ_nom = k1 V_r + k2 δ + k3 ∫δ.

    Parameters
    ----------
    k1 : float, default=7.12
        Gain on the relative speed V_r, in 1/s.
    k2 : float, default=3.24
        Gain on the spacing error δ, in 1/s².
    k3 : float, default=0.4
        Gain on the integrated spacing error, in 1/s³.
    """

    _tags = {"object_type": "pid_gains"}

    def __init__(self, k1=7.12, k2=3.24, k3=0.4):
        self.k1 = k1
        self.k2 = k2
        self.k3 = k3
        super().__init__()

        for name in ["k1", "k2", "k3"]:
            check_finite(getattr(self, name), name=name, error=ConstructionError)

    @classmethod
    def get_test_params(cls, parameter_set="default"):
        """Return testing parameter settings for the gains.

        Parameters
        ----------
        parameter_set : str, default="default"
            Name of the set of test parameters to return.

        Returns
        -------
        params : list of dict
        """
        return [{}, {"k1": 1.0, "k2": 0.5, "k3": 0.0}]


def nominal_mu(state: VehicleState, gains: PIDGains, params: VehicleParams) -> float:
    """Return the nominal synthetic input k1 V_r + k2 δ + k3 e, in m/s²."""
    return (
        gains.k1 * state.relative_speed
        + gains.k2 * state.spacing_error(params)
        + gains.k3 * state.e
    )


def nominal_control(
    state: VehicleState, gains: PIDGains, params: VehicleParams
) -> float:
    """Return the nominal traction force u_nom = F_r(V_f) + m μ_nom, in N.

    Parameters
    ----------
    state : VehicleState
        Current state; ``state.e`` holds the integrated spacing error.
    gains : PIDGains
    params : VehicleParams

    Returns
    -------
    float

    Examples
    --------
    >>> from tvcbf.control import PIDGains, nominal_control
    >>> from tvcbf.vehicle import VehicleParams, VehicleState
    >>> state = VehicleState(x_f=0.0, v_f=0.0, x_l=4.5, v_l=1.0)
    >>> round(nominal_control(state, PIDGains(), VehicleParams()), 6)
    11748.1
    """
    return friction_force(params, state.v_f) + params.mass * nominal_mu(
        state, gains, params
    )
