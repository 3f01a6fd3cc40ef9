# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Fixed-time traffic signals, their broadcast timing and the signal state."""
import math
from bisect import bisect_left, bisect_right
from enum import Enum
from typing import List, NamedTuple, Optional, Sequence, Tuple

from skbase.base import BaseObject

from tvcbf._exceptions import ConstructionError, HorizonError, PastLastSignalError
from tvcbf.utils import check_finite, check_positive

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = [
    "SignalBroadcast",
    "SignalState",
    "SignalTiming",
    "broadcast",
    "next_signal_index",
    "signal_state",
]


class SignalState(str, Enum):
    """Light shown by a traffic signal."""

    GREEN = "Green"
    YELLOW = "Yellow"
    RED = "Red"

    def __str__(self) -> str:
        return self.value


class SignalTiming(BaseObject):
    """Stop line position and broadcast timing sequence of one signal.

    Cycle ``j`` is Green on ``[g_j, y_j)``, Yellow on ``[y_j, r_j)`` and Red on
    ``[r_j, g_{j+1})``. The red phase of the last cycle lasts until ``end``.

    Parameters
    ----------
    position : float, default=1000.0
        Stop line position p_i in m.
    cycles : tuple of (float, float, float), default=((0.0, 25.0, 30.0),)
        Transition instants ``(g_j, y_j, r_j)`` in s, strictly interleaved.
    end : float or None, default=None
        End of the last red phase; None means the signal stays red.

    Examples
    --------
    >>> from tvcbf.traffic import SignalTiming
    >>> sig = SignalTiming.from_offset(1000.0, offset=0.0, horizon=60.0)
    >>> sig.cycles[:2]
    ((0.0, 25.0, 30.0), (50.0, 75.0, 80.0))
    >>> str(sig.state(26.0)), str(sig.state(30.0)), str(sig.state(50.0))
    ('Yellow', 'Red', 'Green')
    """

    _tags = {"object_type": "signal_timing"}

    def __init__(self, position=1000.0, cycles=((0.0, 25.0, 30.0),), end=None):
        self.position = position
        self.cycles = cycles
        self.end = end
        super().__init__()

        check_finite(position, name="position", error=ConstructionError)
        if len(cycles) == 0:
            raise ConstructionError("SignalTiming needs at least one cycle")
        flat = [float(v) for cycle in cycles for v in cycle]
        if len(flat) != 3 * len(cycles):
            raise ConstructionError("each cycle must be a (green, yellow, red) triple")
        check_finite(flat, name="cycle instants", error=ConstructionError)
        end_value = math.inf if end is None else float(end)
        if any(a >= b for a, b in zip(flat, flat[1:] + [end_value])):
            raise ConstructionError(
                f"signal at {position} needs strictly interleaved instants "
                f"g < y < r < g_next, found {cycles} with end {end}"
            )
        self._greens = flat[0::3]
        self._yellows = flat[1::3]
        self._reds = flat[2::3]
        self._end = end_value

    @classmethod
    def from_offset(
        cls,
        position: float,
        offset: float = 0.0,
        green: float = 25.0,
        yellow: float = 5.0,
        red: float = 20.0,
        horizon: float = 300.0,
    ) -> "SignalTiming":
        """Build a fixed-time signal whose cycles start at ``-offset``.

        Green onsets are ``g_j = -offset + j * (green + yellow + red)``; cycles
        are generated until one starts after ``horizon``.
        """
        check_positive(green, name="green", error=ConstructionError)
        check_positive(yellow, name="yellow", error=ConstructionError)
        check_positive(red, name="red", error=ConstructionError)
        period = green + yellow + red
        start = -float(offset)
        cycles = []
        j = 0
        while True:
            g = start + j * period
            cycles.append((g, g + green, g + green + yellow))
            if g > horizon:
                break
            j += 1
        return cls(position=float(position), cycles=tuple(cycles), end=g + period)

    @property
    def greens(self) -> List[float]:
        """Green onsets g_j."""
        return list(self._greens)

    @property
    def coverage(self) -> Tuple[float, float]:
        """Interval ``[g_1, end)`` on which the signal state is defined."""
        return self._greens[0], self._end

    def cycle_index(self, t: float) -> int:
        """Return the zero-based cycle j with ``g_j <= t < g_{j+1}``.

        Raises
        ------
        HorizonError
            If ``t`` lies outside the covered interval.
        """
        if not self._greens[0] <= t < self._end:
            raise HorizonError(
                f"t={t} is not covered by the timing of the signal at "
                f"{self.position} (covered: [{self._greens[0]}, {self._end}))"
            )
        return bisect_right(self._greens, t) - 1

    def state(self, t: float) -> SignalState:
        """Return the light shown at ``t``."""
        j = self.cycle_index(t)
        if t < self._yellows[j]:
            return SignalState.GREEN
        if t < self._reds[j]:
            return SignalState.YELLOW
        return SignalState.RED

    def transitions(self, t0: float, t1: float) -> List[Tuple[SignalState, float]]:
        """Return the transitions with instants in ``[t0, t1]``, in time order."""
        events = []
        for g, y, r in zip(self._greens, self._yellows, self._reds):
            for kind, instant in (
                (SignalState.GREEN, g),
                (SignalState.YELLOW, y),
                (SignalState.RED, r),
            ):
                if t0 <= instant <= t1:
                    events.append((kind, instant))
        return events

    @classmethod
    def get_test_params(cls, parameter_set="default"):
        """Return testing parameter settings for the signal timing.

        Parameters
        ----------
        parameter_set : str, default="default"
            Name of the set of test parameters to return.

        Returns
        -------
        params : list of dict
        """
        params1 = {"position": 1000.0, "cycles": ((0.0, 25.0, 30.0),)}
        params2 = {
            "position": 2000.0,
            "cycles": ((-7.0, 18.0, 23.0), (43.0, 68.0, 73.0)),
            "end": 93.0,
        }
        return [params1, params2]


def signal_state(sig: SignalTiming, t: float) -> SignalState:
    """Return the state of ``sig`` at ``t``.

    Raises
    ------
    HorizonError
        If ``t`` lies before the first green or after the last cycle.

    Examples
    --------
    >>> from tvcbf.traffic import SignalTiming, signal_state
    >>> sig = SignalTiming(cycles=((0.0, 25.0, 30.0), (50.0, 75.0, 80.0)), end=100.0)
    >>> [str(signal_state(sig, t)) for t in (0.0, 26.0, 30.0, 49.9)]
    ['Green', 'Yellow', 'Red', 'Red']
    """
    return sig.state(t)


def next_signal_index(positions: Sequence[float], x_f: float) -> int:
    """Return the zero-based index i with ``p_{i-1} < x_f <= p_i``.

    Parameters
    ----------
    positions : sequence of float
        Strictly increasing stop line positions.
    x_f : float
        Ego position.

    Raises
    ------
    PastLastSignalError
        If ``x_f`` lies beyond the last stop line.

    Examples
    --------
    >>> from tvcbf.traffic import next_signal_index
    >>> p = [1000.0, 2000.0, 3000.0]
    >>> next_signal_index(p, 0.0), next_signal_index(p, 1000.0)
    (0, 0)
    >>> next_signal_index(p, 1000.1)
    1
    """
    i = bisect_left(positions, x_f)
    if i == len(positions):
        raise PastLastSignalError(
            f"x_f={x_f} lies beyond the last stop line at {positions[-1]}"
        )
    return i


class SignalBroadcast(NamedTuple):
    """Timing view of one signal over a look-ahead window.

    Attributes
    ----------
    position : float
        Stop line position.
    state : SignalState or None
        Light at the start of the window, None if not covered.
    transitions : tuple of (SignalState, float)
        Transitions inside the window, in time order.
    """

    position: float
    state: Optional[SignalState]
    transitions: Tuple[Tuple[SignalState, float], ...]


def broadcast(
    signals: Sequence[SignalTiming], t: float, horizon: float
) -> List[SignalBroadcast]:
    """Return, per signal, its position, current light and transitions ahead.

    Parameters
    ----------
    signals : sequence of SignalTiming
    t : float
        Start of the window, in s.
    horizon : float
        Window length, positive.

    Returns
    -------
    list of SignalBroadcast
        Transitions with instants in ``[t, t + horizon]``.

    Examples
    --------
    >>> from tvcbf.traffic import SignalTiming, broadcast
    >>> sig = SignalTiming(cycles=((0.0, 25.0, 30.0), (50.0, 75.0, 80.0)), end=100.0)
    >>> msg = broadcast([sig], 45.0, 10.0)[0]
    >>> str(msg.state), [(str(k), v) for k, v in msg.transitions]
    ('Red', [('Green', 50.0)])
    """
    check_positive(horizon, name="horizon")
    messages = []
    for sig in signals:
        try:
            state = sig.state(t)
        except HorizonError:
            state = None
        messages.append(
            SignalBroadcast(
                position=float(sig.position),
                state=state,
                transitions=tuple(sig.transitions(t, t + horizon)),
            )
        )
    return messages
