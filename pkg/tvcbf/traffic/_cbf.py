# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Traffic signal barrier over all signal regions, and its set-level checks."""
import logging
from typing import List, Optional, Sequence

import numpy as np
from skbase.base import BaseObject

from tvcbf._exceptions import ConstructionError
from tvcbf.cbf import BaseClassK, PiecewiseTVCBF
from tvcbf.traffic._sigmoid import (
    SigmoidDerivatives,
    SigmoidSignalPiece,
    TrafficCBFParams,
)
from tvcbf.traffic._signal import SignalState, SignalTiming, next_signal_index

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = [
    "TrafficCBF",
    "build_traffic_cbf",
    "candidate_barrier",
    "conservative_softmin_bound",
    "regulated_safe_set_contains",
    "soft_minimum",
]

logger = logging.getLogger(__name__)


def _next_position(signals, i, default_spacing):
    if i + 1 < len(signals):
        return float(signals[i + 1].position)
    return float(signals[i].position) + default_spacing


class TrafficCBF(BaseObject):
    """Piecewise barrier of every signal region, switched by position and time.

    Region ``i`` covers ``p_{i-1} < X_f <= p_i``. Its barrier is a
    :class:`~tvcbf.cbf.PiecewiseTVCBF` with one :class:`SigmoidSignalPiece` per
    signal cycle ``[g_ij, g_i,j+1)``. Behind the last stop line sits a virtual
    one at ``default_spacing``.

    Parameters
    ----------
    signals : list of SignalTiming
        Signals ordered by strictly increasing position.
    params : TrafficCBFParams, optional
        Barrier shape; defaults to ``TrafficCBFParams()``.
    degree : int, default=2
        Relative degree of the pieces, 1 or 2.
    alphas : list of BaseClassK, optional
        Class-K functions handed to each region barrier.

    Examples
    --------
    >>> from tvcbf.traffic import SignalTiming, TrafficCBF
    >>> signals = [
    ...     SignalTiming.from_offset(1000.0 * i, offset=7.0 * (i - 1), horizon=300.0)
    ...     for i in range(1, 7)
    ... ]
    >>> cbf = TrafficCBF(signals=signals, degree=2)
    >>> cbf.region_index(0.0)
    0
    >>> round(cbf.evaluate(0.0, [0.0, 0.0, 4.5, 0.0, 0.0]), 3)
    1995.5
    """

    _tags = {"object_type": "traffic_cbf"}

    def __init__(self, signals=None, params=None, degree=2, alphas=None):
        self.signals = signals
        self.params = params
        self.degree = degree
        self.alphas = alphas
        super().__init__()

        if not signals:
            raise ConstructionError("TrafficCBF needs at least one signal")
        for sig in signals:
            if not isinstance(sig, SignalTiming):
                raise ConstructionError(
                    f"signals must be SignalTiming instances, found {type(sig)}"
                )
        positions = [float(sig.position) for sig in signals]
        if any(a >= b for a, b in zip(positions, positions[1:])):
            raise ConstructionError(
                f"signal positions must be strictly increasing, found {positions}"
            )
        if degree not in (1, 2):
            raise ConstructionError(f"degree must be 1 or 2, found {degree!r}")
        if alphas is not None and not all(isinstance(a, BaseClassK) for a in alphas):
            raise ConstructionError("alphas must be BaseClassK instances")

        self._params = TrafficCBFParams() if params is None else params
        self._positions = positions
        self._regions = [self._build_region(i) for i in range(len(signals))]

    def _build_region(self, i):
        sig = self.signals[i]
        shape = self._params
        next_position = _next_position(
            self.signals, i, shape.default_spacing
        )
        greens = sig.greens
        _, end = sig.coverage
        pieces = []
        for j, (g, y, r) in enumerate(sig.cycles):
            t_end = greens[j + 1] if j + 1 < len(greens) else end
            pieces.append(
                SigmoidSignalPiece(
                    position=float(sig.position),
                    next_position=next_position,
                    midpoint=0.5 * (y + r),
                    tau=shape.tau,
                    s0=shape.s0,
                    gamma=shape.gamma_,
                    t_start=float(g),
                    t_end=t_end,
                    rel_degree=self.degree,
                )
            )
        return PiecewiseTVCBF(pieces=pieces, alphas=self.alphas)

    @property
    def positions(self) -> List[float]:
        """Stop line positions p_1..p_n."""
        return list(self._positions)

    @property
    def shape(self) -> TrafficCBFParams:
        """Barrier shape parameters in use."""
        return self._params

    def region_index(self, x_f: float) -> int:
        """Return the zero-based region i with ``p_{i-1} < x_f <= p_i``."""
        return next_signal_index(self._positions, x_f)

    def region_cbf(self, i: int) -> PiecewiseTVCBF:
        """Return the piecewise barrier of region ``i``."""
        return self._regions[i]

    def active_piece(self, t: float, x_f: float) -> SigmoidSignalPiece:
        """Return the piece active at time ``t`` for an ego at ``x_f``."""
        return self._regions[self.region_index(x_f)].piece_at(t)

    def evaluate(self, t: float, x) -> float:
        """Evaluate the barrier of the region containing ``x[0]`` at time ``t``."""
        x = np.asarray(x, dtype=float)
        return self.active_piece(t, x[0]).evaluate(t, x)

    def time_derivs(self, t: float, x_f: float) -> SigmoidDerivatives:
        """Return the moving bound h_t and its time derivatives at ``(t, x_f)``.

        Raises
        ------
        DomainError
            If ``t`` is outside the horizon of the active region.
        """
        return self.active_piece(t, x_f).sigmoid_terms(t)

    @classmethod
    def get_test_params(cls, parameter_set="default"):
        """Return testing parameter settings for the traffic barrier.

        Parameters
        ----------
        parameter_set : str, default="default"
            Name of the set of test parameters to return.

        Returns
        -------
        params : list of dict
        """
        signals = [
            SignalTiming(position=1000.0, cycles=((0.0, 25.0, 30.0),), end=50.0),
            SignalTiming(
                position=2000.0,
                cycles=((-7.0, 18.0, 23.0), (43.0, 68.0, 73.0)),
                end=93.0,
            ),
        ]
        params1 = {"signals": signals}
        params2 = {
            "signals": signals[:1],
            "params": TrafficCBFParams(tau=2.0, gamma=1.0),
            "degree": 1,
        }
        return [params1, params2]


def build_traffic_cbf(
    signals: Sequence[SignalTiming],
    params: Optional[TrafficCBFParams] = None,
    horizon: float = 300.0,
    degree: int = 2,
    alphas: Optional[Sequence[BaseClassK]] = None,
) -> TrafficCBF:
    """Build the traffic barrier and check that the signals cover the horizon.

    Parameters
    ----------
    signals : sequence of SignalTiming
        Signals ordered by position.
    params : TrafficCBFParams, optional
    horizon : float, default=300.0
        Simulated horizon, in s. Every signal must be defined on ``[0, horizon]``.
    degree : int, default=2
        Relative degree of the pieces.
    alphas : sequence of BaseClassK, optional
        Class-K functions of each region barrier.

    Returns
    -------
    TrafficCBF

    Raises
    ------
    ConstructionError
        If a signal timing does not cover the horizon, or the signals are invalid.
    """
    for sig in signals:
        start, end = sig.coverage
        if start > 0.0 or end < horizon:
            raise ConstructionError(
                f"timing of the signal at {sig.position} covers [{start}, {end}), "
                f"which does not contain the horizon [0, {horizon}]"
            )
    cbf = TrafficCBF(
        signals=list(signals),
        params=params,
        degree=degree,
        alphas=None if alphas is None else list(alphas),
    )
    logger.debug(
        "built degree %d traffic barrier over %d regions, %d pieces",
        degree,
        len(signals),
        sum(len(cbf.region_cbf(i).pieces) for i in range(len(signals))),
    )
    return cbf


def soft_minimum(values) -> float:
    """Return the smooth lower bound ``-log(sum(exp(-v)))`` of ``min(values)``.

    Examples
    --------
    >>> from tvcbf.traffic import soft_minimum
    >>> soft_minimum([3.0])
    3.0
    >>> round(soft_minimum([0.0, 0.0]), 6)
    -0.693147
    """
    values = np.asarray(values, dtype=float)
    return float(-np.logaddexp.reduce(-values))


def conservative_softmin_bound(
    signals: Sequence[SignalTiming],
    i: int,
    t: float,
    x_f: float,
    default_spacing: float = 1000.0,
) -> float:
    """Soft-minimum over the candidate limits of region ``i`` at time ``t``.

    Combines the green branch ``p_{i+1} - x_f`` and the red branch
    ``p_i - x_f`` of the cycle containing ``t``. The value never exceeds
    ``p_i - x_f``, so the resulting set forbids crossing even on green.

    Raises
    ------
    HorizonError
        If ``t`` is not covered by the timing of signal ``i``.
    """
    signals[i].cycle_index(t)
    position = float(signals[i].position)
    next_position = _next_position(signals, i, default_spacing)
    return soft_minimum([next_position - x_f, position - x_f])


def candidate_barrier(
    signals: Sequence[SignalTiming],
    i: int,
    t: float,
    x_f: float,
    default_spacing: float = 1000.0,
) -> float:
    """Discontinuous limit of region ``i``: the current stop line while red.

    Examples
    --------
    >>> from tvcbf.traffic import SignalTiming, candidate_barrier
    >>> signals = [SignalTiming(cycles=((0.0, 25.0, 30.0),), end=50.0)]
    >>> candidate_barrier(signals, 0, 10.0, 0.0)
    2000.0
    >>> candidate_barrier(signals, 0, 35.0, 0.0)
    1000.0
    """
    if signals[i].state(t) is SignalState.RED:
        return float(signals[i].position) - x_f
    return _next_position(signals, i, default_spacing) - x_f


def regulated_safe_set_contains(
    signals: Sequence[SignalTiming],
    i: int,
    t: float,
    x_f: float,
    s0: float = 4.5,
    slack: float = 0.0,
    default_spacing: float = 1000.0,
) -> bool:
    """Return whether ``x_f`` lies in the regulated safe set of region ``i``.

    While signal ``i`` is red the ego must stay ``s0`` before its stop line;
    otherwise ``s0`` before the next one.

    Examples
    --------
    >>> from tvcbf.traffic import SignalTiming, regulated_safe_set_contains
    >>> signals = [SignalTiming(cycles=((0.0, 25.0, 30.0),), end=50.0)]
    >>> regulated_safe_set_contains(signals, 0, 35.0, 995.5)
    True
    >>> regulated_safe_set_contains(signals, 0, 35.0, 996.0)
    False
    """
    if signals[i].state(t) is SignalState.RED:
        limit = float(signals[i].position)
    else:
        limit = _next_position(signals, i, default_spacing)
    return x_f <= limit - s0 + slack
