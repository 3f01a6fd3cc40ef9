# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Sigmoid time-varying bound and the barrier pieces built on it.

Within cycle j of signal i the admissible position limit slides smoothly from
the next stop line down to the current one,

    h_t(t) = D / (1 + exp(τ (t - m))),    D = p_{i+1} - p_i,

with the midpoint m halfway through the yellow-red window. The ego barrier is
``h_t + p_i - X_f - S0`` (relative degree 2) or ``h_t + p_i - X_f - γ V_f``
(relative degree 1).
"""
import math
from typing import List, NamedTuple

import numpy as np
from skbase.base import BaseObject

from tvcbf._exceptions import ConstructionError
from tvcbf.cbf import BaseCBFPiece
from tvcbf.utils import check_nonnegative, check_positive

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = [
    "SigmoidDerivatives",
    "SigmoidSignalPiece",
    "TrafficCBFParams",
    "sigmoid_derivs",
]


class SigmoidDerivatives(NamedTuple):
    """Value and first two time derivatives of the sigmoid bound."""

    value: float
    first: float
    second: float


def sigmoid_derivs(
    t: float, amplitude: float, midpoint: float, tau: float
) -> SigmoidDerivatives:
    """Evaluate ``A / (1 + exp(τ (t - m)))`` and its first two time derivatives.

    The logistic factor and its complement are formed without cancellation, so
    the result stays finite and accurate far from the midpoint.

    Parameters
    ----------
    t : float
        Time in s.
    amplitude : float
        Height A of the step, the distance to the next stop line.
    midpoint : float
        Midpoint m of the transition.
    tau : float
        Steepness τ, positive.

    Returns
    -------
    SigmoidDerivatives

    Examples
    --------
    >>> from tvcbf.traffic import sigmoid_derivs
    >>> d = sigmoid_derivs(10.0, 1000.0, 10.0, 6.0)
    >>> d.value, d.first, d.second
    (500.0, -1500.0, 0.0)
    >>> sigmoid_derivs(1e6, 1000.0, 10.0, 6.0).value
    0.0
    """
    z = tau * (t - midpoint)
    if z >= 0.0:
        ez = math.exp(-z)
        s = ez / (1.0 + ez)
        q = 1.0 / (1.0 + ez)
    else:
        ez = math.exp(z)
        s = 1.0 / (1.0 + ez)
        q = ez / (1.0 + ez)
    sq = s * q
    return SigmoidDerivatives(
        value=amplitude * s,
        first=-tau * amplitude * sq,
        second=tau * tau * amplitude * sq * (q - s),
    )


class TrafficCBFParams(BaseObject):
    """Shape parameters of the traffic signal barrier.

    Parameters
    ----------
    tau : float, default=6.0
        Sigmoid steepness τ, in 1/s.
    s0 : float, default=4.5
        Distance kept before a red stop line, in m.
    gamma : float or None, default=None
        Stopping headway γ = V_max / a_min of the relative degree 1 barrier.
        None takes the value of ``VehicleParams()``.
    default_spacing : float, default=1000.0
        Distance from the last stop line to the virtual one behind it, in m.

    Examples
    --------
    >>> from tvcbf.traffic import TrafficCBFParams
    >>> round(TrafficCBFParams().gamma_, 6)
    4.252551
    """

    _tags = {"object_type": "traffic_cbf_params"}

    def __init__(self, tau=6.0, s0=4.5, gamma=None, default_spacing=1000.0):
        self.tau = tau
        self.s0 = s0
        self.gamma = gamma
        self.default_spacing = default_spacing
        super().__init__()

        check_positive(tau, name="tau", error=ConstructionError)
        check_nonnegative(s0, name="s0", error=ConstructionError)
        check_positive(default_spacing, name="default_spacing", error=ConstructionError)
        if gamma is None:
            from tvcbf.vehicle import VehicleParams

            self.gamma_ = VehicleParams().stop_headway
        else:
            self.gamma_ = check_nonnegative(
                gamma, name="gamma", error=ConstructionError
            )

    @classmethod
    def from_vehicle(cls, vehicle, tau=6.0, default_spacing=1000.0):
        """Take S0 and γ = V_max / a_min from a ``VehicleParams``."""
        return cls(
            tau=tau,
            s0=vehicle.s0,
            gamma=vehicle.stop_headway,
            default_spacing=default_spacing,
        )

    @classmethod
    def get_test_params(cls, parameter_set="default"):
        """Return testing parameter settings for the barrier shape.

        Parameters
        ----------
        parameter_set : str, default="default"
            Name of the set of test parameters to return.

        Returns
        -------
        params : list of dict
        """
        return [{}, {"tau": 2.0, "s0": 0.0, "gamma": 1.0, "default_spacing": 500.0}]


class SigmoidSignalPiece(BaseCBFPiece):
    """Barrier piece of one signal region during one signal cycle.

    The state is ``x = (X_f, V_f, X_l, V_l, e)``; only the first two components
    enter the barrier.

    Parameters
    ----------
    position : float, default=1000.0
        Current stop line p_i, in m.
    next_position : float, default=2000.0
        Next stop line p_{i+1}, in m; greater than ``position``.
    midpoint : float, default=27.5
        Midpoint m of the sigmoid, in s.
    tau : float, default=6.0
        Sigmoid steepness, in 1/s.
    s0 : float, default=4.5
        Standstill margin used by the relative degree 2 form.
    gamma : float, default=0.0
        Speed weight γ used by the relative degree 1 form.
    t_start, t_end : float, default=0.0, 50.0
        Cycle interval ``[g_j, g_{j+1})``.
    rel_degree : int, default=2
        2 for ``h_t + p_i - X_f - S0``, 1 for ``h_t + p_i - X_f - γ V_f``.

    Examples
    --------
    >>> from tvcbf.traffic import SigmoidSignalPiece
    >>> piece = SigmoidSignalPiece(position=1000.0, next_position=2000.0)
    >>> round(piece.evaluate(0.0, [0.0, 0.0, 4.5, 0.0, 0.0]), 6)
    1995.5
    >>> piece.state_gradient(0.0, [0.0, 0.0, 4.5, 0.0, 0.0]).tolist()
    [-1.0, 0.0, 0.0, 0.0, 0.0]
    """

    def __init__(
        self,
        position=1000.0,
        next_position=2000.0,
        midpoint=27.5,
        tau=6.0,
        s0=4.5,
        gamma=0.0,
        t_start=0.0,
        t_end=50.0,
        rel_degree=2,
    ):
        self.position = position
        self.next_position = next_position
        self.midpoint = midpoint
        self.tau = tau
        self.s0 = s0
        self.gamma = gamma
        self.t_start = t_start
        self.t_end = t_end
        self.rel_degree = rel_degree
        super().__init__()

        if not next_position > position:
            raise ConstructionError(
                f"next_position must exceed position, found {next_position} "
                f"after {position}"
            )
        check_positive(tau, name="tau", error=ConstructionError)
        self._amplitude = float(next_position - position)
        # constant part of the barrier: p_i - S0, or p_i for the degree 1 form
        self._offset = float(position) - (s0 if rel_degree == 2 else 0.0)
        self._speed_weight = float(gamma) if rel_degree == 1 else 0.0

    def sigmoid_terms(self, t: float) -> SigmoidDerivatives:
        """Return the moving bound h_t and its time derivatives, unchecked."""
        return sigmoid_derivs(t, self._amplitude, self.midpoint, self.tau)

    def barrier_terms(self, t: float, x_f: float, v_f: float):
        """Return the barrier value and the sigmoid terms from scalars, unchecked.

        Returns
        -------
        h : float
            Barrier value at ``(t, X_f, V_f)``.
        terms : SigmoidDerivatives
            Moving bound and its time derivatives at ``t``.
        """
        terms = self.sigmoid_terms(t)
        return terms.value + self._offset - x_f - self._speed_weight * v_f, terms

    def _evaluate(self, t, x):
        return float(self.barrier_terms(t, x[0], x[1])[0])

    def _time_derivative(self, t, x, order):
        terms = self.sigmoid_terms(t)
        return terms.first if order == 1 else terms.second

    def _state_gradient(self, t, x):
        grad = np.zeros(len(x))
        grad[0] = -1.0
        grad[1] = -self._speed_weight
        return grad

    @classmethod
    def get_test_params(cls, parameter_set="default"):
        """Return testing parameter settings for the sigmoid piece.

        Parameters
        ----------
        parameter_set : str, default="default"
            Name of the set of test parameters to return.

        Returns
        -------
        params : list of dict
        """
        params1 = {}
        params2 = {
            "position": 2000.0,
            "next_position": 3000.0,
            "midpoint": 20.5,
            "gamma": 4.25,
            "t_start": -7.0,
            "t_end": 43.0,
            "rel_degree": 1,
        }
        return [params1, params2]
