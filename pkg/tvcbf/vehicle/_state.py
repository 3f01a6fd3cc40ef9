# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""State of the ego and lead vehicle pair."""
from typing import List, NamedTuple

import numpy as np

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = ["VehicleState"]


class VehicleState(NamedTuple):
    """Ego and lead positions and speeds plus the integral of the spacing error.

    Attributes
    ----------
    x_f, v_f : float
        Ego position (m) and speed (m/s).
    x_l, v_l : float
        Lead position (m) and speed (m/s).
    e : float
        Integral of the spacing error δ, in m·s.

    Examples
    --------
    >>> from tvcbf.vehicle import VehicleParams, VehicleState
    >>> state = VehicleState(x_f=0.0, v_f=0.0, x_l=4.5, v_l=0.0, e=0.0)
    >>> state.spacing, state.spacing_error(VehicleParams())
    (4.5, 0.0)
    """

    x_f: float
    v_f: float
    x_l: float
    v_l: float
    e: float = 0.0

    @property
    def spacing(self) -> float:
        """Relative distance X_r = X_l - X_f."""
        return self.x_l - self.x_f

    @property
    def relative_speed(self) -> float:
        """Relative speed V_r = V_l - V_f."""
        return self.v_l - self.v_f

    def spacing_error(self, params) -> float:
        """Spacing error δ = X_r - h V_f - S0."""
        return self.x_l - self.x_f - params.headway * self.v_f - params.s0

    def to_array(self) -> np.ndarray:
        """Return ``[x_f, v_f, x_l, v_l, e]`` as a float array."""
        return np.array(self, dtype=float)

    @classmethod
    def from_array(cls, arr) -> "VehicleState":
        """Build a state from ``[x_f, v_f, x_l, v_l, e]``."""
        return cls(*(float(v) for v in arr))

    def is_valid(self) -> bool:
        """Whether speeds are non-negative and the lead is ahead of the ego."""
        return self.v_f >= 0 and self.v_l >= 0 and self.x_l >= self.x_f
