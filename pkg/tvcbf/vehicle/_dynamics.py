# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Longitudinal car-following dynamics and their fixed step integration.

The state is ``(X_f, V_f, X_l, V_l, e)`` with

    Ẋ_f = V_f,  V̇_f = (u - F_r(V_f)) / m,  Ẋ_l = V_l,  V̇_l = a_l,
    ė = X_l - X_f - h V_f - S0.

The lead acceleration a_l is exogenous. Written with the synthetic input
μ = (u - F_r) / m the system is control affine in μ, see
:class:`LongitudinalMuModel`.
"""
import math
from typing import List

import numpy as np

from tvcbf._exceptions import NumericError
from tvcbf.cbf import BaseControlAffineSystem
from tvcbf.vehicle._params import VehicleParams, friction_force
from tvcbf.vehicle._state import VehicleState

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = [
    "LongitudinalMuModel",
    "dynamics_deriv",
    "mu_to_force",
    "force_to_mu",
    "step",
]


def mu_to_force(params: VehicleParams, v_f: float, mu: float) -> float:
    """Return u = F_r(V_f) + m μ."""
    return friction_force(params, v_f) + params.mass * mu


def force_to_mu(params: VehicleParams, v_f: float, u: float) -> float:
    """Return μ = (u - F_r(V_f)) / m."""
    return (u - friction_force(params, v_f)) / params.mass


def _deriv(params, y, u, lead_accel, integrate_error):
    x_f, v_f, x_l, v_l, _ = y
    # intermediate stages may dip below zero speed while braking to a stop;
    # positions only ever move forward
    v = v_f if v_f > 0.0 else 0.0
    v_l = v_l if v_l > 0.0 else 0.0
    f_r = params.c0 + params.c1 * v + params.c2 * v * v
    e_dot = x_l - x_f - params.headway * v - params.s0 if integrate_error else 0.0
    return (v, (u - f_r) / params.mass, v_l, lead_accel, e_dot)


def dynamics_deriv(
    params: VehicleParams,
    state: VehicleState,
    u: float,
    lead_accel: float,
    integrate_error: bool = True,
) -> np.ndarray:
    """Return the state derivative ``(Ẋ_f, V̇_f, Ẋ_l, V̇_l, ė)``.

    Parameters
    ----------
    params : VehicleParams
    state : VehicleState
    u : float
        Traction force in N.
    lead_accel : float
        Lead acceleration in m/s².
    integrate_error : bool, default=True
        If False, ė is zero (integrator frozen).

    Returns
    -------
    np.ndarray of shape (5,)

    Examples
    --------
    >>> from tvcbf.vehicle import VehicleParams, VehicleState, dynamics_deriv
    >>> params = VehicleParams()
    >>> state = VehicleState(x_f=0.0, v_f=0.0, x_l=4.5, v_l=0.0, e=0.0)
    >>> dynamics_deriv(params, state, u=0.1, lead_accel=0.0)
    array([0., 0., 0., 0., 0.])
    """
    return np.array(_deriv(params, tuple(state), u, lead_accel, integrate_error))


def step(
    params: VehicleParams,
    state: VehicleState,
    u: float,
    lead_accel: float,
    dt: float,
    integrate_error: bool = True,
) -> VehicleState:
    """Advance the state by one classical Runge-Kutta step of length ``dt``.

    ``u`` and ``lead_accel`` are held constant over the step. The stages move
    the positions with the speeds clipped at zero, and both speeds are clipped
    at zero afterwards, so neither vehicle ever moves backwards.

    Parameters
    ----------
    params : VehicleParams
    state : VehicleState
    u : float
        Traction force in N.
    lead_accel : float
        Lead acceleration in m/s².
    dt : float
        Step length in s, positive.
    integrate_error : bool, default=True
        If False, the spacing error integral is held.

    Returns
    -------
    VehicleState

    Raises
    ------
    ValueError
        If ``dt`` is not positive.
    NumericError
        If the new state is not finite.
    """
    if not dt > 0:
        raise ValueError(f"dt must be > 0, found {dt}")
    y = tuple(state)
    k1 = _deriv(params, y, u, lead_accel, integrate_error)
    y2 = tuple(yi + 0.5 * dt * ki for yi, ki in zip(y, k1))
    k2 = _deriv(params, y2, u, lead_accel, integrate_error)
    y3 = tuple(yi + 0.5 * dt * ki for yi, ki in zip(y, k2))
    k3 = _deriv(params, y3, u, lead_accel, integrate_error)
    y4 = tuple(yi + dt * ki for yi, ki in zip(y, k3))
    k4 = _deriv(params, y4, u, lead_accel, integrate_error)
    new = [
        yi + dt / 6.0 * (a + 2.0 * b + 2.0 * c + d)
        for yi, a, b, c, d in zip(y, k1, k2, k3, k4)
    ]
    if not all(math.isfinite(v) for v in new):
        raise NumericError(f"non-finite state after integration step: {new}")
    new[1] = max(new[1], 0.0)
    new[3] = max(new[3], 0.0)
    return VehicleState(*new)


class LongitudinalMuModel(BaseControlAffineSystem):
    """Car-following dynamics in the synthetic input μ, as a control-affine system.

    With state ``x = (X_f, V_f, X_l, V_l, e)`` the drift is
    ``f = (V_f, 0, V_l, a_l, X_l - X_f - h V_f - S0)`` and the input gain is
    ``g = (0, 1, 0, 0, 0)``.

    Parameters
    ----------
    vehicle : VehicleParams, optional
        Vehicle parameters; defaults to ``VehicleParams()``.
    lead_accel : float, default=0.0
        Lead acceleration, treated as constant.

    Examples
    --------
    >>> from tvcbf.vehicle import LongitudinalMuModel
    >>> model = LongitudinalMuModel()
    >>> model(0.0, [0.0, 2.0, 10.0, 3.0, 0.0], mu=1.0).tolist()
    [2.0, 1.0, 3.0, 0.0, 2.7]
    """

    def __init__(self, vehicle=None, lead_accel=0.0):
        self.vehicle = vehicle
        self.lead_accel = lead_accel
        super().__init__()
        self._vehicle = VehicleParams() if vehicle is None else vehicle

    def _n_states(self):
        return 5

    def _drift(self, t, x):
        p = self._vehicle
        return np.array(
            [x[1], 0.0, x[3], self.lead_accel, x[2] - x[0] - p.headway * x[1] - p.s0]
        )

    def _input_gain(self, t, x):
        return np.array([0.0, 1.0, 0.0, 0.0, 0.0])

    def _drift_jacobian(self, t, x):
        jac = np.zeros((5, 5))
        jac[0, 1] = 1.0
        jac[2, 3] = 1.0
        jac[4, :3] = (-1.0, -self._vehicle.headway, 1.0)
        return jac

    @classmethod
    def get_test_params(cls, parameter_set="default"):
        """Return testing parameter settings for the μ-form model.

        Parameters
        ----------
        parameter_set : str, default="default"
            Name of the set of test parameters to return.

        Returns
        -------
        params : list of dict
        """
        return [{}, {"vehicle": VehicleParams(headway=2.0), "lead_accel": -0.5}]
