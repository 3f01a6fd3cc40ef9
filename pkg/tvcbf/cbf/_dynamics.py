# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Control-affine systems ẋ = f(t, x) + g(t, x) μ with scalar input μ."""
from typing import List

import numpy as np
from skbase.base import BaseObject

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = [
    "BaseControlAffineSystem",
    "DoubleIntegrator",
    "SingleIntegrator",
]


class BaseControlAffineSystem(BaseObject):
    """Base class for control-affine dynamics with one scalar input.

    Descendants implement ``_drift``, ``_input_gain`` and ``_drift_jacobian``;
    ``_drift_time_derivative`` defaults to zero (autonomous drift).

    The number of state components is given by the ``n_states`` property.
    """

    _tags = {"object_type": "dynamics"}

    @property
    def n_states(self) -> int:
        """Dimension of the state vector."""
        return self._n_states()

    def drift(self, t: float, x) -> np.ndarray:
        """Return f(t, x)."""
        return self._drift(t, np.asarray(x, dtype=float))

    def input_gain(self, t: float, x) -> np.ndarray:
        """Return g(t, x), the column multiplying the scalar input."""
        return self._input_gain(t, np.asarray(x, dtype=float))

    def drift_jacobian(self, t: float, x) -> np.ndarray:
        """Return ∂f/∂x, shape (n_states, n_states)."""
        return self._drift_jacobian(t, np.asarray(x, dtype=float))

    def drift_time_derivative(self, t: float, x) -> np.ndarray:
        """Return ∂f/∂t."""
        return self._drift_time_derivative(t, np.asarray(x, dtype=float))

    def __call__(self, t: float, x, mu: float) -> np.ndarray:
        """Return ẋ = f(t, x) + g(t, x) μ."""
        x = np.asarray(x, dtype=float)
        return self._drift(t, x) + self._input_gain(t, x) * mu

    def _n_states(self):
        raise NotImplementedError("abstract method")

    def _drift(self, t, x):
        raise NotImplementedError("abstract method")

    def _input_gain(self, t, x):
        raise NotImplementedError("abstract method")

    def _drift_jacobian(self, t, x):
        raise NotImplementedError("abstract method")

    def _drift_time_derivative(self, t, x):
        return np.zeros(self._n_states())


class SingleIntegrator(BaseControlAffineSystem):
    """Scalar single integrator ẋ = μ.

    Examples
    --------
    >>> from tvcbf.cbf import SingleIntegrator
    >>> SingleIntegrator()(0.0, [1.0], 2.0)
    array([2.])
    """

    def __init__(self):
        super().__init__()

    def _n_states(self):
        return 1

    def _drift(self, t, x):
        return np.zeros(1)

    def _input_gain(self, t, x):
        return np.ones(1)

    def _drift_jacobian(self, t, x):
        return np.zeros((1, 1))


class DoubleIntegrator(BaseControlAffineSystem):
    """Double integrator with state (position, velocity) and ṗ = v, v̇ = μ."""

    def __init__(self):
        super().__init__()

    def _n_states(self):
        return 2

    def _drift(self, t, x):
        return np.array([x[1], 0.0])

    def _input_gain(self, t, x):
        return np.array([0.0, 1.0])

    def _drift_jacobian(self, t, x):
        return np.array([[0.0, 1.0], [0.0, 0.0]])
