# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Single pieces of a piecewise time-varying barrier function.

A piece is valid on a half-open interval ``[t_start, t_end)`` and carries closed
form partial time derivatives up to its relative degree, its state gradient and,
for relative degree 2, the mixed and second state derivatives.
"""
import math
from typing import List

import numpy as np
from skbase.base import BaseObject

from tvcbf._exceptions import ConstructionError, DomainError

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = ["AffineTimeCBFPiece", "BaseCBFPiece"]


class BaseCBFPiece(BaseObject):
    """Base class for one smooth piece h(t, x) of a time-varying barrier.

    Descendants store ``t_start``, ``t_end`` and ``rel_degree`` as parameters and
    implement ``_evaluate``, ``_time_derivative`` and ``_state_gradient``.
    ``_state_hessian`` and ``_time_state_gradient`` default to zero.

    The public methods check that ``t`` lies in ``[t_start, t_end)``. The private
    methods do not, and are used for one-sided limits at ``t_end``.
    """

    _tags = {"object_type": "cbf_piece", "rel_degree": 1}

    def __init__(self):
        super().__init__()
        t_start, t_end = self.t_start, self.t_end
        if math.isnan(t_start) or math.isnan(t_end) or not t_start < t_end:
            raise ConstructionError(
                f"{type(self).__name__} needs t_start < t_end, "
                f"found [{t_start}, {t_end})"
            )
        if self.rel_degree not in (1, 2):
            raise ConstructionError(
                f"rel_degree must be 1 or 2, found {self.rel_degree!r}"
            )
        self.set_tags(rel_degree=self.rel_degree)

    def contains(self, t: float) -> bool:
        """Return whether ``t_start <= t < t_end``."""
        return self.t_start <= t < self.t_end

    def _check_time(self, t):
        if not self.contains(t):
            raise DomainError(
                f"t={t} lies outside the interval [{self.t_start}, {self.t_end}) "
                f"of {type(self).__name__}"
            )

    def evaluate(self, t: float, x) -> float:
        """Evaluate h(t, x).

        Parameters
        ----------
        t : float
            Time in seconds, inside the piece interval.
        x : array-like
            State vector.

        Returns
        -------
        float

        Raises
        ------
        DomainError
            If ``t`` lies outside ``[t_start, t_end)``.
        """
        self._check_time(t)
        return self._evaluate(t, np.asarray(x, dtype=float))

    def time_derivative(self, t: float, x, order: int = 1) -> float:
        """Evaluate the partial derivative ∂ᵏh/∂tᵏ for ``0 <= order <= rel_degree``."""
        self._check_time(t)
        if not 0 <= order <= self.rel_degree:
            raise ValueError(
                f"order must lie in [0, {self.rel_degree}], found {order}"
            )
        x = np.asarray(x, dtype=float)
        if order == 0:
            return self._evaluate(t, x)
        return self._time_derivative(t, x, order)

    def state_gradient(self, t: float, x) -> np.ndarray:
        """Evaluate ∇ₓh(t, x) as a 1D array."""
        self._check_time(t)
        return self._state_gradient(t, np.asarray(x, dtype=float))

    def state_hessian(self, t: float, x) -> np.ndarray:
        """Evaluate ∇ₓ²h(t, x)."""
        self._check_time(t)
        return self._state_hessian(t, np.asarray(x, dtype=float))

    def time_state_gradient(self, t: float, x) -> np.ndarray:
        """Evaluate ∂/∂t ∇ₓh(t, x)."""
        self._check_time(t)
        return self._time_state_gradient(t, np.asarray(x, dtype=float))

    def _evaluate(self, t, x):
        raise NotImplementedError("abstract method")

    def _time_derivative(self, t, x, order):
        raise NotImplementedError("abstract method")

    def _state_gradient(self, t, x):
        raise NotImplementedError("abstract method")

    def _state_hessian(self, t, x):
        n = len(x)
        return np.zeros((n, n))

    def _time_state_gradient(self, t, x):
        return np.zeros(len(x))


class AffineTimeCBFPiece(BaseCBFPiece):
    """Piece h(t, x) = slope * t + intercept - x[state_index].

    Parameters
    ----------
    slope : float, default=100.0
        Rate at which the bound moves, in state units per second.
    intercept : float, default=0.0
        Value of the bound at t = 0.
    t_start, t_end : float, default=0.0, inf
        Interval ``[t_start, t_end)`` on which the piece is valid.
    state_index : int, default=0
        Component of the state that the bound applies to.
    rel_degree : int, default=1
        1 for a single integrator on ``x[state_index]``, 2 when the component
        is a position driven through a velocity.

    Examples
    --------
    >>> from tvcbf.cbf import AffineTimeCBFPiece
    >>> piece = AffineTimeCBFPiece(slope=100.0, t_start=0.0, t_end=1.0)
    >>> piece.evaluate(0.5, [20.0])
    30.0
    >>> piece.time_derivative(0.5, [20.0])
    100.0
    """

    def __init__(
        self,
        slope=100.0,
        intercept=0.0,
        t_start=0.0,
        t_end=math.inf,
        state_index=0,
        rel_degree=1,
    ):
        self.slope = slope
        self.intercept = intercept
        self.t_start = t_start
        self.t_end = t_end
        self.state_index = state_index
        self.rel_degree = rel_degree
        super().__init__()

    def _evaluate(self, t, x):
        return float(self.slope * t + self.intercept - x[self.state_index])

    def _time_derivative(self, t, x, order):
        return float(self.slope) if order == 1 else 0.0

    def _state_gradient(self, t, x):
        grad = np.zeros(len(x))
        grad[self.state_index] = -1.0
        return grad

    @classmethod
    def get_test_params(cls, parameter_set="default"):
        """Return testing parameter settings for the affine piece.

        Parameters
        ----------
        parameter_set : str, default="default"
            Name of the set of test parameters to return.

        Returns
        -------
        params : list of dict
        """
        params1 = {"slope": 100.0, "t_start": 0.0, "t_end": 1.0}
        params2 = {"slope": 200.0, "t_start": 1.0, "t_end": 2.0}
        params3 = {"slope": 0.0, "intercept": 5.0, "rel_degree": 2}
        return [params1, params2, params3]
